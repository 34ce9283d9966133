#pragma once

#include <optional>
#include <vector>

#include "revseq/circuit.hpp"

namespace revseq {

// One row per cycle; column order follows `inputs`.
struct stimulus {
  std::vector<std::string> inputs;         // primary-input symbols
  std::vector<std::vector<bool>> cycles;   // cycles x inputs
};

struct trace_cycle {
  bitvec in_vec;               // full line vector after substitution
  bitvec out_vec;              // full line vector after the cascade
  std::vector<bool> regs;      // feedback registers after this cycle
};

struct trace {
  std::vector<trace_cycle> cycles;
};

// Applies one gate to the full line vector in place.
void apply_gate_inplace(const gate_inst& g, bitvec& lines);

// Runs the gate cascade over a full line vector (no role checking).
bitvec eval_cascade(const circuit& c, bitvec lines);

// Combinational evaluation with precondition checks: no feedbacks, and
// constant lines of `input` must match their declared values.
bitvec eval_combinational(const circuit& c, const bitvec& input);

// Cycle-accurate simulation. Feedback registers start at the declared
// init bits unless `init_override` (one bit per feedback) is given.
trace run_sequential(const circuit& c, const stimulus& s,
                     const std::optional<std::vector<bool>>& init_override =
                         std::nullopt);

// Rewires every feedback sink as a fresh primary input and every
// feedback source as a primary output, yielding a combinational circuit.
circuit break_feedback(const circuit& c);

// CSV I/O. Stimulus: header row of primary-input symbols, one row per
// cycle. Trace: cycle index, then every line in input phase, then every
// line in output phase.
stimulus load_stimulus_csv(const std::string& path, const circuit& c);
stimulus parse_stimulus_csv(const std::string& text, const circuit& c);
std::string trace_to_csv(const circuit& c, const trace& t);

}  // namespace revseq
