#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revseq/circuit.hpp"
#include "revseq/sim.hpp"

namespace revseq {

enum class fault_model { stuck_at, bit_flip };
enum class fault_side { input, output };

// One fault site. Input-side faults corrupt what the afflicted gate
// reads on that port; output-side faults corrupt the line itself right
// after the gate fires, so everything downstream sees the bad value.
struct fault_spec {
  int gate_index = 0;
  int port = 0;
  fault_side side = fault_side::output;
  fault_model model = fault_model::stuck_at;
  bool stuck_value = false;  // stuck_at only

  friend bool operator==(const fault_spec&, const fault_spec&) = default;
};

// Text form "g<gate>.p<port>.<in|out>.<sa0|sa1|flip>".
std::string fault_to_string(const fault_spec& f);
std::optional<fault_spec> parse_fault(const std::string& text);

// Stuck-at: every gate port, both sides, both polarities. Bit-flip:
// every gate port, output side only.
std::vector<fault_spec> enumerate_faults(const circuit& c, fault_model m);

// Gate cascade over a full line vector with the listed faults active.
bitvec eval_with_faults(const circuit& c, const std::vector<fault_spec>& faults,
                        const bitvec& input);

// Parity screen: with every gate preserving parity, a corrupted cascade
// shows up as an output parity that disagrees with the input parity.
bool parity_detects(const circuit& c, const std::vector<fault_spec>& faults,
                    const bitvec& input);

struct coverage_report {
  std::vector<std::vector<int>> detecting_vectors;  // one list per fault
  std::vector<int> undetected;                      // fault indices
  bool complete() const { return undetected.empty(); }
};

// A vector detects a fault when the faulty and fault-free outputs differ
// on an observed line. Default observation: the declared primary outputs.
coverage_report evaluate_test_set(
    const circuit& c, const std::vector<bitvec>& vectors,
    const std::vector<fault_spec>& faults,
    const std::optional<std::vector<int>>& observe = std::nullopt);

// Every assignment of the free (primary) inputs with constants pinned,
// in ascending order of the line-vector string.
std::vector<bitvec> all_input_vectors(const circuit& c);

// Exact minimum-size test set covering every listed fault, found by
// trying vector combinations of increasing size in lexicographic order.
// Throws when a fault is undetectable or the circuit has more than 16
// free inputs.
std::vector<bitvec> minimal_complete_test_set(
    const circuit& c, const std::vector<fault_spec>& faults,
    const std::optional<std::vector<int>>& observe = std::nullopt);

// Stuck-at faults a test could ever reveal. Skips output segments that
// no later gate reads on lines ending as garbage, and ports whose value
// never differs from the stuck polarity.
std::vector<fault_spec> testable_stuck_at_faults(const circuit& c);

// Test configuration for a sequential design: registers are opened into
// extra inputs/outputs, and the named constant control lines become free
// inputs.
circuit offline_test_form(const circuit& c,
                          const std::vector<std::string>& control_vars);

// Cycle-accurate simulation with the faults active on every cycle.
trace run_sequential_with_faults(
    const circuit& c, const stimulus& s,
    const std::vector<fault_spec>& faults,
    const std::optional<std::vector<bool>>& init_override = std::nullopt);

// Cycles whose designated check line reads 1.
std::vector<int> online_flagged_cycles(const trace& t, int test_line);

}  // namespace revseq
