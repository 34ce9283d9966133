#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "revseq/circuit.hpp"

namespace revseq {

// Elementary quantum primitives used by the cost model. A box is a fused
// two-wire unit that counts as a single unit of cost; it keeps the ops it
// absorbed so the underlying sequence can always be recovered.
enum class prim_kind { not_gate, cnot, cv, cvd, box };

struct primitive {
  prim_kind kind = prim_kind::not_gate;
  int control = -1;  // -1 when the primitive has no control wire
  int target = -1;
  std::vector<primitive> members;  // box contents, in order

  friend bool operator==(const primitive&, const primitive&) = default;
};

primitive make_not(int target);
primitive make_cnot(int control, int target);
primitive make_cv(int control, int target);
primitive make_cvd(int control, int target);
primitive make_box(std::vector<primitive> members);

std::set<int> lines_of(const primitive& p);
std::string primitive_to_string(const primitive& p);
std::string sequence_key(const std::vector<primitive>& seq);

// Every sequence element counts one unit, boxes included.
long long raw_cost(const std::vector<primitive>& seq);

// Expands boxes, preserving member order.
std::vector<primitive> flatten(const std::vector<primitive>& seq);

bool is_boolean(const primitive& p);  // built from NOT / CNOT only
void apply_boolean(const primitive& p, bitvec& v);

std::vector<primitive> decompose_gate(gate_op op,
                                      const std::vector<int>& lines);
std::vector<primitive> decompose(const circuit& c);

// Whether two adjacent primitives may exchange places: disjoint supports
// always commute; overlapping singles commute when they share the control
// wire or the target wire (controlled square roots of X and X itself all
// commute on a common target); a target sitting on the other primitive's
// control blocks the exchange; boxes move only across disjoint supports.
bool can_swap_adjacent(const primitive& p, const primitive& q);

// Moves element `from` to position `to` through adjacent exchanges.
// Returns false and leaves the sequence untouched if any hop is blocked.
bool try_move(std::vector<primitive>& seq, int from, int to);

// Local identity on an adjacent pair, if one applies: duplicate
// self-inverse ops cancel, two equal square roots fuse into a CNOT, and a
// square root next to its inverse on the same wires cancels.
std::optional<std::vector<primitive>> try_rewrite_pair(const primitive& p,
                                                       const primitive& q);

// Greedy left-to-right fusion of an adjacent CNOT and CV/CVD sharing the
// identical (control, target) pair into a unit-cost box, repeated to a
// fixpoint. Existing boxes are never merged again.
std::vector<primitive> merge_boxes(std::vector<primitive> seq);

long long default_optimize_budget();  // REVSEQ_BUDGET override, else 100000

struct optimize_result {
  std::vector<primitive> seq;  // box-merged best form
  long long cost = 0;
  bool budget_exhausted = false;
  long long expansions = 0;
};

// Budget-bounded best-first search over adjacent exchanges and local
// identities, scored by box-merged cost. Deterministic, never returns a
// result worse than its input, and is a fixpoint of itself.
optimize_result optimize(const std::vector<primitive>& input,
                         long long budget = -1);

}  // namespace revseq
