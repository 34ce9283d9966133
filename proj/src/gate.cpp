#include "revseq/gate.hpp"

#include <bit>
#include <stdexcept>

namespace revseq {

std::string hw_complexity::to_string() const {
  std::string s;
  auto term = [&s](long long coeff, char sym) {
    if (coeff == 0) return;
    if (!s.empty()) s += '+';
    s += std::to_string(coeff);
    s += sym;
  };
  term(a, 'a');
  term(b, 'b');
  term(d, 'd');
  return s.empty() ? "0" : s;
}

namespace {

// Builds the permutation table of a gate from its boolean output forms.
// Bit 0 of the packed row is the first port (most significant position
// in the row index), matching bitvec::row_index.
template <typename Fn>
std::vector<std::uint32_t> make_perm(int arity, Fn&& out_of) {
  std::vector<std::uint32_t> t(1u << arity);
  for (std::uint32_t row = 0; row < t.size(); ++row) {
    bitvec in = bitvec::from_row_index(row, arity);
    bitvec out = out_of(in);
    t[row] = out.row_index();
  }
  return t;
}

std::vector<gate_def> build_library() {
  std::vector<gate_def> lib;

  lib.push_back({gate_op::NOT, "NOT", "n1", 1, 1, 1, {0, 0, 1},
                 make_perm(1, [](bitvec v) {
                   v.flip(0);
                   return v;
                 })});

  lib.push_back({gate_op::CNOT, "CNOT", "c2", 2, 1, 1, {1, 0, 0},
                 make_perm(2, [](bitvec v) {
                   v.set(1, v.get(1) ^ v.get(0));
                   return v;
                 })});

  lib.push_back({gate_op::TOFFOLI, "TOFFOLI", "t3", 3, 5, 5, {1, 1, 0},
                 make_perm(3, [](bitvec v) {
                   v.set(2, v.get(2) ^ (v.get(0) && v.get(1)));
                   return v;
                 })});

  lib.push_back({gate_op::FREDKIN, "FREDKIN", "fr3", 3, 5, 5, {2, 4, 1},
                 make_perm(3, [](bitvec v) {
                   bool a = v.get(0), b = v.get(1), c = v.get(2);
                   v.set(1, a ? c : b);
                   v.set(2, a ? b : c);
                   return v;
                 })});

  lib.push_back({gate_op::PERES, "PERES", "pe3", 3, 4, 4, {2, 1, 0},
                 make_perm(3, [](bitvec v) {
                   bool a = v.get(0), b = v.get(1);
                   v.set(1, a ^ b);
                   v.set(2, v.get(2) ^ (a && b));
                   return v;
                 })});

  lib.push_back({gate_op::F2G, "F2G", "f2g3", 3, 2, 2, {2, 0, 0},
                 make_perm(3, [](bitvec v) {
                   bool a = v.get(0);
                   v.set(1, v.get(1) ^ a);
                   v.set(2, v.get(2) ^ a);
                   return v;
                 })});

  lib.push_back({gate_op::PAREEK, "PAREEK", "pk4", 4, 7, 9, {3, 2, 1},
                 make_perm(4, [](bitvec v) {
                   bool a = v.get(0), b = v.get(1), c = v.get(2), d = v.get(3);
                   bool q = (!a && b) ^ (a && d);
                   v.set(1, q);
                   v.set(2, q ^ c);
                   v.set(3, b ^ d);
                   return v;
                 })});

  return lib;
}

}  // namespace

const std::vector<gate_def>& gate_library() {
  static const std::vector<gate_def> lib = build_library();
  return lib;
}

const gate_def& gate_info(gate_op op) {
  for (const auto& g : gate_library())
    if (g.op == op) return g;
  throw std::logic_error("unknown gate op");
}

const gate_def* find_gate_by_token(std::string_view token) {
  for (const auto& g : gate_library())
    if (g.token == token) return &g;
  return nullptr;
}

const gate_def* find_gate_by_label(std::string_view label) {
  for (const auto& g : gate_library())
    if (g.label == label) return &g;
  return nullptr;
}

bool is_permutation(const std::vector<std::uint32_t>& table) {
  std::vector<bool> seen(table.size(), false);
  for (auto v : table) {
    if (v >= table.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_parity_preserving(const std::vector<std::uint32_t>& table, int arity) {
  const std::uint32_t mask = (1u << arity) - 1;
  for (std::uint32_t row = 0; row < table.size(); ++row)
    if (std::popcount(row & mask) % 2 != std::popcount(table[row] & mask) % 2)
      return false;
  return true;
}

bool is_conservative(const std::vector<std::uint32_t>& table, int arity) {
  const std::uint32_t mask = (1u << arity) - 1;
  for (std::uint32_t row = 0; row < table.size(); ++row)
    if (std::popcount(row & mask) != std::popcount(table[row] & mask))
      return false;
  return true;
}

bitvec apply_gate(const gate_def& g, const bitvec& in) {
  if (in.width != g.arity)
    throw std::invalid_argument("gate arity mismatch for " + g.label);
  return bitvec::from_row_index(g.perm[in.row_index()], g.arity);
}

}  // namespace revseq
