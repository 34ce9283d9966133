#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "revseq/bitvec.hpp"

namespace revseq {

// Hardware complexity expressed as a linear combination of primitive
// operations: a = two-input EXOR, b = two-input AND, d = NOT.
struct hw_complexity {
  long long a = 0;
  long long b = 0;
  long long d = 0;

  hw_complexity& operator+=(const hw_complexity& o) {
    a += o.a;
    b += o.b;
    d += o.d;
    return *this;
  }
  friend hw_complexity operator+(hw_complexity x, const hw_complexity& y) {
    x += y;
    return x;
  }
  friend bool operator==(const hw_complexity&, const hw_complexity&) = default;

  // Renders e.g. "2a+4b+1d"; zero terms are dropped, the empty sum is "0".
  std::string to_string() const;
};

enum class gate_op { NOT, CNOT, TOFFOLI, FREDKIN, PERES, F2G, PAREEK };

struct gate_def {
  gate_op op;
  std::string label;  // display name, e.g. "FREDKIN"
  std::string token;  // netlist token, e.g. "fr3"
  int arity;
  int quantum_cost;
  // Number of elementary quantum operations emitted by the direct
  // (pre-optimization) decomposition of this gate.
  int unit_cost;
  hw_complexity hc;
  // Permutation over the 2^arity input rows; row indexing treats the
  // first port as the most significant bit.
  std::vector<std::uint32_t> perm;
};

// The fixed gate library, in canonical order.
const std::vector<gate_def>& gate_library();
const gate_def& gate_info(gate_op op);
const gate_def* find_gate_by_token(std::string_view token);
const gate_def* find_gate_by_label(std::string_view label);

// Structural predicates over an arbitrary truth table.
bool is_permutation(const std::vector<std::uint32_t>& table);
bool is_parity_preserving(const std::vector<std::uint32_t>& table, int arity);
bool is_conservative(const std::vector<std::uint32_t>& table, int arity);

// Applies a gate to a bit vector whose width equals the gate arity.
bitvec apply_gate(const gate_def& g, const bitvec& in);

}  // namespace revseq
