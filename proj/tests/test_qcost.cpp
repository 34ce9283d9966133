// Quantum-cost engine: decomposition templates, the exchange / rewrite /
// fusion rules (each proved against an exact unitary oracle), and the
// budgeted best-first optimizer.

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "revseq/catalog.hpp"
#include "revseq/error.hpp"
#include "revseq/gate.hpp"
#include "revseq/qcost.hpp"
#include "support.hpp"

using namespace revseq;
using testsup::gm_equal;
using testsup::gm_identity;
using testsup::matrix_of_gate;
using testsup::matrix_of_sequence;

namespace {

std::vector<int> iota_lines(int n) {
  std::vector<int> ln(static_cast<std::size_t>(n));
  std::iota(ln.begin(), ln.end(), 0);
  return ln;
}

// Every single-wire and two-wire primitive over n lines.
std::vector<primitive> primitive_universe(int n) {
  std::vector<primitive> u;
  for (int t = 0; t < n; ++t) u.push_back(make_not(t));
  for (int c = 0; c < n; ++c)
    for (int t = 0; t < n; ++t) {
      if (c == t) continue;
      u.push_back(make_cnot(c, t));
      u.push_back(make_cv(c, t));
      u.push_back(make_cvd(c, t));
    }
  return u;
}

}  // namespace

TEST_CASE("decomposition templates have the advertised shape and cost") {
  auto key_of = [](gate_op op) {
    const auto& def = gate_info(op);
    return sequence_key(decompose_gate(op, iota_lines(def.arity)));
  };

  CHECK(key_of(gate_op::NOT) == "not - 0");
  CHECK(key_of(gate_op::CNOT) == "cnot 0 1");
  CHECK(key_of(gate_op::F2G) == "cnot 0 1;cnot 0 2");
  CHECK(key_of(gate_op::TOFFOLI) ==
        "cv 1 2;cnot 0 1;cvd 1 2;cnot 0 1;cv 0 2");
  CHECK(key_of(gate_op::PERES) == "cv 1 2;cnot 0 1;cvd 1 2;cv 0 2");
  CHECK(key_of(gate_op::FREDKIN) ==
        "box { cnot 2 1 ; cv 1 2 };cnot 0 1;cv 0 2;"
        "box { cvd 1 2 ; cnot 2 1 };cnot 0 1");
  CHECK(key_of(gate_op::PAREEK) ==
        "cv 1 3;cv 1 3;cv 3 1;cnot 0 3;cvd 3 1;cnot 0 3;"
        "cv 0 1;cv 1 2;cv 1 2");

  for (const auto& def : gate_library()) {
    CAPTURE(def.label);
    auto seq = decompose_gate(def.op, iota_lines(def.arity));
    CHECK(raw_cost(seq) == def.unit_cost);
  }

  auto fr = decompose_gate(gate_op::FREDKIN, {0, 1, 2});
  int boxes = 0;
  for (const auto& p : fr) boxes += p.kind == prim_kind::box;
  CHECK(boxes == 2);
  auto flat = flatten(fr);
  CHECK(flat.size() == 7);
  CHECK(sequence_key(flat) ==
        "cnot 2 1;cv 1 2;cnot 0 1;cv 0 2;cvd 1 2;cnot 2 1;cnot 0 1");
  for (const auto& p : flat) CHECK(p.kind != prim_kind::box);
}

TEST_CASE("every decomposition implements its gate exactly") {
  for (const auto& def : gate_library()) {
    CAPTURE(def.label);
    auto lines = iota_lines(def.arity);
    auto seq = decompose_gate(def.op, lines);
    auto want = matrix_of_gate(def, lines, def.arity);
    CHECK(gm_equal(matrix_of_sequence(seq, def.arity), want));
    CHECK(gm_equal(matrix_of_sequence(flatten(seq), def.arity), want));
  }

  // Placements other than the identity mapping, inside a wider register.
  struct placement {
    gate_op op;
    std::vector<int> lines;
    int n;
  };
  const placement cases[] = {
      {gate_op::CNOT, {1, 0}, 2},       {gate_op::CNOT, {2, 0}, 3},
      {gate_op::TOFFOLI, {2, 0, 1}, 3}, {gate_op::FREDKIN, {1, 2, 0}, 3},
      {gate_op::PERES, {0, 2, 3}, 4},   {gate_op::F2G, {3, 1, 0}, 4},
      {gate_op::PAREEK, {3, 1, 0, 2}, 4},
  };
  for (const auto& pc : cases) {
    const auto& def = gate_info(pc.op);
    CAPTURE(def.label);
    auto seq = decompose_gate(pc.op, pc.lines);
    CHECK(gm_equal(matrix_of_sequence(seq, pc.n),
                   matrix_of_gate(def, pc.lines, pc.n)));
  }
}

TEST_CASE("boolean primitives evaluate directly, square roots refuse to") {
  CHECK(is_boolean(make_not(0)));
  CHECK(is_boolean(make_cnot(1, 2)));
  CHECK_FALSE(is_boolean(make_cv(0, 1)));
  CHECK_FALSE(is_boolean(make_cvd(0, 1)));
  CHECK(is_boolean(make_box({make_cnot(0, 1), make_not(1)})));
  CHECK_FALSE(is_boolean(make_box({make_cnot(0, 1), make_cv(0, 1)})));

  bitvec v = bitvec::from_string("100");
  apply_boolean(make_not(2), v);
  CHECK(v.to_string() == "101");
  apply_boolean(make_cnot(0, 1), v);
  CHECK(v.to_string() == "111");
  apply_boolean(make_cnot(1, 0), v);
  CHECK(v.to_string() == "011");
  // A box evaluates its members in order.
  apply_boolean(make_box({make_not(0), make_cnot(0, 2)}), v);
  CHECK(v.to_string() == "110");

  CHECK_THROWS_AS(apply_boolean(make_cv(0, 1), v), error);
  CHECK_THROWS_AS(apply_boolean(make_cvd(0, 1), v), error);
  CHECK_THROWS_AS(
      apply_boolean(make_box({make_cnot(0, 1), make_cvd(0, 1)}), v), error);
}

TEST_CASE("adjacent exchange rule is sound against the unitary oracle") {
  const int n = 3;
  auto universe = primitive_universe(n);
  int allowed = 0;
  for (const auto& p : universe)
    for (const auto& q : universe) {
      if (!can_swap_adjacent(p, q)) continue;
      ++allowed;
      CAPTURE(primitive_to_string(p));
      CAPTURE(primitive_to_string(q));
      REQUIRE(gm_equal(matrix_of_sequence({p, q}, n),
                       matrix_of_sequence({q, p}, n)));
    }
  // The rule admits plenty of exchanges; it must not be vacuous.
  CHECK(allowed > 100);

  // Spot checks on both sides of the rule.
  CHECK(can_swap_adjacent(make_cnot(0, 1), make_not(2)));   // disjoint
  CHECK(can_swap_adjacent(make_cv(0, 1), make_cvd(0, 2)));  // same control
  CHECK(can_swap_adjacent(make_cv(0, 2), make_cnot(1, 2))); // same target
  CHECK(can_swap_adjacent(make_not(1), make_cnot(0, 1)));   // NOT on target
  CHECK_FALSE(can_swap_adjacent(make_not(0), make_cnot(0, 1)));
  CHECK_FALSE(gm_equal(matrix_of_sequence({make_not(0), make_cnot(0, 1)}, 2),
                       matrix_of_sequence({make_cnot(0, 1), make_not(0)}, 2)));
  CHECK_FALSE(can_swap_adjacent(make_cnot(0, 1), make_cnot(1, 2)));
  CHECK_FALSE(
      gm_equal(matrix_of_sequence({make_cnot(0, 1), make_cnot(1, 2)}, 3),
               matrix_of_sequence({make_cnot(1, 2), make_cnot(0, 1)}, 3)));

  // Boxes move only across disjoint supports.
  auto bx = make_box({make_cnot(0, 1), make_cv(0, 1)});
  CHECK(can_swap_adjacent(bx, make_not(2)));
  CHECK(gm_equal(matrix_of_sequence({bx, make_not(2)}, n),
                 matrix_of_sequence({make_not(2), bx}, n)));
  CHECK_FALSE(can_swap_adjacent(bx, make_not(1)));
  CHECK_FALSE(can_swap_adjacent(bx, make_cnot(0, 2)));
  CHECK_FALSE(can_swap_adjacent(make_cv(1, 2), bx));
  CHECK_FALSE(can_swap_adjacent(bx, bx));
}

TEST_CASE("pair rewrites are exact local identities") {
  const int n = 3;
  auto universe = primitive_universe(n);
  int rewrites = 0;
  for (const auto& p : universe)
    for (const auto& q : universe) {
      auto r = try_rewrite_pair(p, q);
      if (!r) continue;
      ++rewrites;
      CAPTURE(primitive_to_string(p));
      CAPTURE(primitive_to_string(q));
      REQUIRE(gm_equal(matrix_of_sequence({p, q}, n),
                       matrix_of_sequence(*r, n)));
    }
  // Per ordered wire pair: X.X, V.V, V+.V+, V.V+, V+.V; plus the three
  // NOT.NOT cancellations. Anything else must be left alone.
  CHECK(rewrites == 6 * 5 + 3);

  auto expect = [](const std::optional<std::vector<primitive>>& r,
                   const char* want) {
    REQUIRE(r.has_value());
    CHECK(sequence_key(*r) == want);
  };
  expect(try_rewrite_pair(make_not(0), make_not(0)), "");
  expect(try_rewrite_pair(make_cnot(0, 1), make_cnot(0, 1)), "");
  expect(try_rewrite_pair(make_cv(0, 1), make_cv(0, 1)), "cnot 0 1");
  expect(try_rewrite_pair(make_cvd(0, 1), make_cvd(0, 1)), "cnot 0 1");
  expect(try_rewrite_pair(make_cv(0, 1), make_cvd(0, 1)), "");
  expect(try_rewrite_pair(make_cvd(0, 1), make_cv(0, 1)), "");

  CHECK_FALSE(try_rewrite_pair(make_not(0), make_not(1)).has_value());
  CHECK_FALSE(try_rewrite_pair(make_not(0), make_cnot(0, 1)).has_value());
  CHECK_FALSE(try_rewrite_pair(make_cv(0, 1), make_cv(1, 0)).has_value());
  CHECK_FALSE(try_rewrite_pair(make_cv(0, 1), make_cv(0, 2)).has_value());
  // An inverter beside a square root is not a cancellation; their product
  // is a three-quarter turn, which the oracle confirms is not identity.
  CHECK_FALSE(try_rewrite_pair(make_cnot(0, 1), make_cv(0, 1)).has_value());
  CHECK_FALSE(try_rewrite_pair(make_cv(0, 1), make_cnot(0, 1)).has_value());
  CHECK_FALSE(try_rewrite_pair(make_cnot(0, 1), make_cvd(0, 1)).has_value());
  CHECK_FALSE(gm_equal(
      matrix_of_sequence({make_cnot(0, 1), make_cv(0, 1)}, 2),
      gm_identity(4)));

  auto bx = make_box({make_cnot(0, 1), make_cv(0, 1)});
  CHECK_FALSE(try_rewrite_pair(bx, make_cnot(0, 1)).has_value());
  CHECK_FALSE(try_rewrite_pair(make_cnot(0, 1), bx).has_value());
  CHECK_FALSE(try_rewrite_pair(bx, bx).has_value());
}

TEST_CASE("try_move walks an element through legal exchanges only") {
  std::vector<primitive> seq{make_cnot(0, 1), make_cv(0, 2), make_not(3)};
  auto before = matrix_of_sequence(seq, 4);
  CHECK(try_move(seq, 2, 0));
  CHECK(sequence_key(seq) == "not - 3;cnot 0 1;cv 0 2");
  CHECK(gm_equal(matrix_of_sequence(seq, 4), before));

  // Moving forward again works the same way.
  CHECK(try_move(seq, 0, 2));
  CHECK(sequence_key(seq) == "cnot 0 1;cv 0 2;not - 3");

  // A blocked hop leaves the sequence untouched.
  std::vector<primitive> blocked{make_cnot(0, 1), make_cnot(1, 2)};
  std::string key = sequence_key(blocked);
  CHECK_FALSE(try_move(blocked, 1, 0));
  CHECK(sequence_key(blocked) == key);

  // Partially legal routes must also roll back.
  std::vector<primitive> route{make_not(3), make_cnot(0, 1),
                               make_cnot(1, 2)};
  key = sequence_key(route);
  CHECK_FALSE(try_move(route, 2, 0));
  CHECK(sequence_key(route) == key);

  std::vector<primitive> still{make_cnot(0, 1)};
  CHECK(try_move(still, 0, 0));
  CHECK(sequence_key(still) == "cnot 0 1");
}

TEST_CASE("box fusion pairs an inverter with a square root") {
  auto fused = merge_boxes({make_cnot(0, 1), make_cv(0, 1)});
  REQUIRE(fused.size() == 1);
  CHECK(fused[0].kind == prim_kind::box);
  CHECK(fused[0].control == 0);
  CHECK(fused[0].target == 1);
  CHECK(sequence_key(fused) == "box { cnot 0 1 ; cv 0 1 }");
  CHECK(raw_cost(fused) == 1);
  CHECK(gm_equal(matrix_of_sequence(fused, 2),
                 matrix_of_sequence({make_cnot(0, 1), make_cv(0, 1)}, 2)));

  // Either order fuses; members keep their original order.
  CHECK(sequence_key(merge_boxes({make_cv(0, 1), make_cnot(0, 1)})) ==
        "box { cv 0 1 ; cnot 0 1 }");
  CHECK(sequence_key(merge_boxes({make_cvd(1, 0), make_cnot(1, 0)})) ==
        "box { cvd 1 0 ; cnot 1 0 }");

  // Mismatched wires or kinds stay separate.
  CHECK(merge_boxes({make_cnot(0, 1), make_cv(1, 0)}).size() == 2);
  CHECK(merge_boxes({make_cnot(0, 1), make_cv(0, 2)}).size() == 2);
  CHECK(merge_boxes({make_not(1), make_cv(0, 1)}).size() == 2);
  CHECK(merge_boxes({make_cv(0, 1), make_cvd(0, 1)}).size() == 2);

  // Existing boxes never grow.
  auto bx = make_box({make_cnot(0, 1), make_cv(0, 1)});
  CHECK(merge_boxes({bx, make_cnot(0, 1)}).size() == 2);
  CHECK(merge_boxes({make_cvd(0, 1), bx}).size() == 2);

  // Fusion is greedy left to right and repeats to a fixpoint.
  auto greedy =
      merge_boxes({make_cnot(0, 1), make_cv(0, 1), make_cv(0, 1)});
  CHECK(sequence_key(greedy) == "box { cnot 0 1 ; cv 0 1 };cv 0 1");
  auto chain = merge_boxes({make_cnot(0, 1), make_cv(0, 1), make_cnot(2, 3),
                            make_cvd(2, 3)});
  CHECK(sequence_key(chain) ==
        "box { cnot 0 1 ; cv 0 1 };box { cnot 2 3 ; cvd 2 3 }");
  CHECK(raw_cost(chain) == 2);
}

TEST_CASE("optimizer reduces the transfer gate from nine units to seven") {
  auto raw = decompose_gate(gate_op::PAREEK, {0, 1, 2, 3});
  REQUIRE(raw_cost(raw) == 9);
  auto r = optimize(raw);
  CHECK(r.cost == 7);
  CHECK(raw_cost(r.seq) == 7);
  CHECK_FALSE(r.budget_exhausted);
  CHECK(r.expansions > 0);
  CHECK(r.expansions < 1000);
  CHECK(sequence_key(r.seq) ==
        "cnot 1 3;cv 3 1;cnot 0 3;cvd 3 1;cnot 0 3;cv 0 1;cnot 1 2");
  // The cheaper form is exactly the same unitary.
  CHECK(gm_equal(matrix_of_sequence(r.seq, 4),
                 matrix_of_gate(gate_info(gate_op::PAREEK), {0, 1, 2, 3}, 4)));

  // Deterministic and a fixpoint of itself.
  auto again = optimize(raw);
  CHECK(sequence_key(again.seq) == sequence_key(r.seq));
  CHECK(again.expansions == r.expansions);
  auto idem = optimize(r.seq);
  CHECK(idem.cost == 7);
  CHECK(sequence_key(idem.seq) == sequence_key(r.seq));
}

TEST_CASE("optimizer budget bounds the search") {
  auto raw = decompose_gate(gate_op::PAREEK, {0, 1, 2, 3});

  auto r0 = optimize(raw, 0);
  CHECK(r0.cost == 9);
  CHECK(r0.budget_exhausted);
  CHECK(r0.expansions == 0);
  CHECK(sequence_key(r0.seq) == sequence_key(raw));

  auto r1 = optimize(raw, 1);
  CHECK(r1.cost == 8);
  CHECK(r1.budget_exhausted);
  CHECK(gm_equal(matrix_of_sequence(r1.seq, 4),
                 matrix_of_sequence(raw, 4)));

  CHECK(default_optimize_budget() >= 1000);
}

TEST_CASE("optimizer leaves already-minimal gates alone") {
  for (const auto& def : gate_library()) {
    if (def.op == gate_op::PAREEK) continue;  // the one with slack
    CAPTURE(def.label);
    auto seq = decompose_gate(def.op, iota_lines(def.arity));
    auto r = optimize(seq);
    CHECK(r.cost == def.unit_cost);
    CHECK_FALSE(r.budget_exhausted);
    CHECK(gm_equal(matrix_of_sequence(r.seq, def.arity),
                   matrix_of_sequence(seq, def.arity)));
  }
}

TEST_CASE("optimizer output is always exactly equivalent") {
  // Three equal square roots: two fuse into an inverter which then boxes
  // with the leftover root. The result is cheaper and still a quarter of
  // the way short of two full turns.
  std::vector<primitive> vvv{make_cv(0, 1), make_cv(0, 1), make_cv(0, 1)};
  auto rv = optimize(vvv);
  CHECK(rv.cost == 1);
  CHECK(sequence_key(rv.seq) == "box { cnot 0 1 ; cv 0 1 }");
  CHECK(gm_equal(matrix_of_sequence(rv.seq, 2), matrix_of_sequence(vvv, 2)));

  // Random mixed sequences on three lines: optimized form must multiply
  // out to the identical unitary, at no higher box-merged cost.
  std::mt19937 rng(987654);
  auto universe = primitive_universe(3);
  std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
  std::uniform_int_distribution<int> len(1, 6);
  for (int round = 0; round < 24; ++round) {
    std::vector<primitive> seq;
    int k = len(rng);
    for (int i = 0; i < k; ++i) seq.push_back(universe[pick(rng)]);
    CAPTURE(sequence_key(seq));
    auto r = optimize(seq);
    CHECK(r.cost <= raw_cost(merge_boxes(seq)));
    REQUIRE(gm_equal(matrix_of_sequence(r.seq, 3),
                     matrix_of_sequence(seq, 3)));
  }

  // Random inverter-only sequences on wider registers: the optimized form
  // must compute the same permutation on every input.
  std::mt19937 rng2(424241);
  for (int round = 0; round < 16; ++round) {
    std::uniform_int_distribution<int> width(2, 6);
    int n = width(rng2);
    std::uniform_int_distribution<int> line(0, n - 1);
    std::uniform_int_distribution<int> len2(1, 8);
    std::vector<primitive> seq;
    int k = len2(rng2);
    for (int i = 0; i < k; ++i) {
      int t = line(rng2);
      if (n >= 2 && (rng2() & 1)) {
        int c = line(rng2);
        while (c == t) c = line(rng2);
        seq.push_back(make_cnot(c, t));
      } else {
        seq.push_back(make_not(t));
      }
    }
    auto r = optimize(seq);
    CHECK(r.cost <= raw_cost(merge_boxes(seq)));
    auto flat = flatten(r.seq);
    for (std::uint32_t row = 0; row < (1u << n); ++row) {
      bitvec a = bitvec::from_row_index(row, n);
      bitvec b = a;
      for (const auto& p : seq) apply_boolean(p, a);
      for (const auto& p : flat) apply_boolean(p, b);
      REQUIRE(a == b);
    }
  }
}

TEST_CASE("primitive rendering is stable") {
  CHECK(primitive_to_string(make_not(2)) == "not - 2");
  CHECK(primitive_to_string(make_cnot(0, 1)) == "cnot 0 1");
  CHECK(primitive_to_string(make_cv(1, 2)) == "cv 1 2");
  CHECK(primitive_to_string(make_cvd(1, 2)) == "cvd 1 2");
  CHECK(primitive_to_string(make_box({make_cnot(2, 1), make_cv(1, 2)})) ==
        "box { cnot 2 1 ; cv 1 2 }");
  CHECK(sequence_key({make_not(0), make_cnot(0, 1)}) == "not - 0;cnot 0 1");
  CHECK(sequence_key({}) == "");

  CHECK(lines_of(make_not(3)) == std::set<int>{3});
  CHECK(lines_of(make_cv(1, 4)) == std::set<int>{1, 4});
  CHECK(lines_of(make_box({make_cnot(2, 1), make_cv(1, 0)})) ==
        std::set<int>{0, 1, 2});
}

TEST_CASE("whole-circuit decomposition concatenates gate templates") {
  auto dff = build_catalog_entry("d_ff_pos").circ;
  auto seq = decompose(dff);
  CHECK(raw_cost(seq) == 9);
  CHECK(sequence_key(seq) ==
        "cv 2 1;cv 2 1;cv 1 2;cnot 0 1;cvd 1 2;cnot 0 1;"
        "cv 0 2;cv 2 3;cv 2 3");

  auto tff = build_catalog_entry("t_ff").circ;
  auto tseq = decompose(tff);
  CHECK(raw_cost(tseq) == 10);
  CHECK(sequence_key(tseq) ==
        "cnot 2 0;cv 2 0;cv 2 0;cv 0 2;cnot 1 0;cvd 0 2;cnot 1 0;"
        "cv 1 2;cv 2 3;cv 2 3");

  circuit empty = circuit::make("idle", {"a", "b"});
  CHECK(decompose(empty).empty());
}
