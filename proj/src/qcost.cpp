#include "revseq/qcost.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <utility>

#include "revseq/error.hpp"

namespace revseq {

primitive make_not(int target) {
  primitive p;
  p.kind = prim_kind::not_gate;
  p.target = target;
  return p;
}

primitive make_cnot(int control, int target) {
  primitive p;
  p.kind = prim_kind::cnot;
  p.control = control;
  p.target = target;
  return p;
}

primitive make_cv(int control, int target) {
  primitive p;
  p.kind = prim_kind::cv;
  p.control = control;
  p.target = target;
  return p;
}

primitive make_cvd(int control, int target) {
  primitive p;
  p.kind = prim_kind::cvd;
  p.control = control;
  p.target = target;
  return p;
}

primitive make_box(std::vector<primitive> members) {
  primitive p;
  p.kind = prim_kind::box;
  p.members = std::move(members);
  return p;
}

std::set<int> lines_of(const primitive& p) {
  std::set<int> out;
  if (p.kind == prim_kind::box) {
    for (const auto& m : p.members) {
      auto sub = lines_of(m);
      out.insert(sub.begin(), sub.end());
    }
    return out;
  }
  if (p.control >= 0) out.insert(p.control);
  out.insert(p.target);
  return out;
}

std::string primitive_to_string(const primitive& p) {
  switch (p.kind) {
    case prim_kind::not_gate:
      return "not - " + std::to_string(p.target);
    case prim_kind::cnot:
      return "cnot " + std::to_string(p.control) + " " +
             std::to_string(p.target);
    case prim_kind::cv:
      return "cv " + std::to_string(p.control) + " " +
             std::to_string(p.target);
    case prim_kind::cvd:
      return "cvd " + std::to_string(p.control) + " " +
             std::to_string(p.target);
    case prim_kind::box: {
      std::string s = "box {";
      for (size_t i = 0; i < p.members.size(); ++i) {
        if (i) s += " ;";
        s += " " + primitive_to_string(p.members[i]);
      }
      s += " }";
      return s;
    }
  }
  return "?";
}

std::string sequence_key(const std::vector<primitive>& seq) {
  std::string key;
  for (const auto& p : seq) {
    if (!key.empty()) key += ';';
    key += primitive_to_string(p);
  }
  return key;
}

long long raw_cost(const std::vector<primitive>& seq) {
  return static_cast<long long>(seq.size());
}

std::vector<primitive> flatten(const std::vector<primitive>& seq) {
  std::vector<primitive> out;
  for (const auto& p : seq) {
    if (p.kind == prim_kind::box) {
      auto sub = flatten(p.members);
      out.insert(out.end(), sub.begin(), sub.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

bool is_boolean(const primitive& p) {
  if (p.kind == prim_kind::box)
    return std::all_of(p.members.begin(), p.members.end(),
                       [](const primitive& m) { return is_boolean(m); });
  return p.kind == prim_kind::not_gate || p.kind == prim_kind::cnot;
}

void apply_boolean(const primitive& p, bitvec& v) {
  switch (p.kind) {
    case prim_kind::not_gate:
      v.flip(p.target);
      return;
    case prim_kind::cnot:
      if (v.get(p.control)) v.flip(p.target);
      return;
    case prim_kind::box:
      for (const auto& m : p.members) apply_boolean(m, v);
      return;
    default:
      throw error("primitive is not a classical operation: " +
                  primitive_to_string(p));
  }
}

std::vector<primitive> decompose_gate(gate_op op,
                                      const std::vector<int>& lines) {
  const gate_def& def = gate_info(op);
  if (static_cast<int>(lines.size()) != def.arity)
    throw error("decompose: " + def.label + " expects " +
                std::to_string(def.arity) + " lines");
  switch (op) {
    case gate_op::NOT:
      return {make_not(lines[0])};
    case gate_op::CNOT:
      return {make_cnot(lines[0], lines[1])};
    case gate_op::F2G:
      return {make_cnot(lines[0], lines[1]), make_cnot(lines[0], lines[2])};
    case gate_op::TOFFOLI: {
      int a = lines[0], b = lines[1], c = lines[2];
      return {make_cv(b, c), make_cnot(a, b), make_cvd(b, c), make_cnot(a, b),
              make_cv(a, c)};
    }
    case gate_op::PERES: {
      int a = lines[0], b = lines[1], c = lines[2];
      return {make_cv(b, c), make_cnot(a, b), make_cvd(b, c), make_cv(a, c)};
    }
    case gate_op::FREDKIN: {
      int a = lines[0], b = lines[1], c = lines[2];
      return {make_box({make_cnot(c, b), make_cv(b, c)}),
              make_cnot(a, b),
              make_cv(a, c),
              make_box({make_cvd(b, c), make_cnot(c, b)}),
              make_cnot(a, b)};
    }
    case gate_op::PAREEK: {
      int a = lines[0], b = lines[1], c = lines[2], d = lines[3];
      return {make_cv(b, d),  make_cv(b, d),  make_cv(d, b),
              make_cnot(a, d), make_cvd(d, b), make_cnot(a, d),
              make_cv(a, b),  make_cv(b, c),  make_cv(b, c)};
    }
  }
  throw error("decompose: unknown gate");
}

std::vector<primitive> decompose(const circuit& c) {
  std::vector<primitive> out;
  for (const auto& g : c.gates) {
    auto part = decompose_gate(g.op, g.lines);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool can_swap_adjacent(const primitive& p, const primitive& q) {
  auto lp = lines_of(p);
  auto lq = lines_of(q);
  bool disjoint = std::none_of(lp.begin(), lp.end(),
                               [&](int x) { return lq.count(x) > 0; });
  if (disjoint) return true;
  if (p.kind == prim_kind::box || q.kind == prim_kind::box) return false;
  bool p_ctrl = p.kind != prim_kind::not_gate;
  bool q_ctrl = q.kind != prim_kind::not_gate;
  if (p_ctrl && q_ctrl) {
    if (p.control == q.control) return true;
    if (p.target == q.target) return true;
    return false;  // one op's target meets the other's control
  }
  if (!p_ctrl && !q_ctrl) return true;  // two NOTs on one wire
  const primitive& n = p_ctrl ? q : p;
  const primitive& c = p_ctrl ? p : q;
  return n.target == c.target;  // a NOT on a control wire is pinned
}

bool try_move(std::vector<primitive>& seq, int from, int to) {
  int n = static_cast<int>(seq.size());
  if (from < 0 || to < 0 || from >= n || to >= n) return false;
  if (from == to) return true;
  std::vector<primitive> work = seq;
  int step = from < to ? 1 : -1;
  for (int i = from; i != to; i += step) {
    int j = i + step;
    const primitive& left = work[std::min(i, j)];
    const primitive& right = work[std::max(i, j)];
    if (!can_swap_adjacent(left, right)) return false;
    std::swap(work[i], work[j]);
  }
  seq = std::move(work);
  return true;
}

std::optional<std::vector<primitive>> try_rewrite_pair(const primitive& p,
                                                       const primitive& q) {
  if (p.kind == prim_kind::box || q.kind == prim_kind::box)
    return std::nullopt;
  if (p.kind == prim_kind::not_gate || q.kind == prim_kind::not_gate) {
    if (p.kind == q.kind && p.target == q.target)
      return std::vector<primitive>{};
    return std::nullopt;
  }
  if (p.control != q.control || p.target != q.target) return std::nullopt;
  if (p.kind == prim_kind::cnot && q.kind == prim_kind::cnot)
    return std::vector<primitive>{};
  if (p.kind == q.kind)  // two CVs or two CVDs make a full inversion
    return std::vector<primitive>{make_cnot(p.control, p.target)};
  if (p.kind == prim_kind::cnot || q.kind == prim_kind::cnot)
    return std::nullopt;  // X beside a square root is box fusion, not a cancel
  return std::vector<primitive>{};  // a square root next to its inverse
}

std::vector<primitive> merge_boxes(std::vector<primitive> seq) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      const primitive& x = seq[i];
      const primitive& y = seq[i + 1];
      if (x.kind == prim_kind::box || y.kind == prim_kind::box) continue;
      bool x_is_cnot = x.kind == prim_kind::cnot;
      bool y_is_cnot = y.kind == prim_kind::cnot;
      bool x_is_root = x.kind == prim_kind::cv || x.kind == prim_kind::cvd;
      bool y_is_root = y.kind == prim_kind::cv || y.kind == prim_kind::cvd;
      if (!((x_is_cnot && y_is_root) || (x_is_root && y_is_cnot))) continue;
      if (x.control != y.control || x.target != y.target) continue;
      primitive b = make_box({x, y});
      b.control = x.control;
      b.target = x.target;
      seq[i] = std::move(b);
      seq.erase(seq.begin() + static_cast<long>(i) + 1);
      changed = true;
      break;
    }
  }
  return seq;
}

long long default_optimize_budget() {
  if (const char* s = std::getenv("REVSEQ_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return 100000;
}

namespace {

struct search_node {
  long long score;
  long long steps;
  std::string key;  // raw (unmerged) form
  std::vector<primitive> seq;
};

struct node_order {
  bool operator()(const search_node& x, const search_node& y) const {
    if (x.score != y.score) return x.score > y.score;
    if (x.steps != y.steps) return x.steps > y.steps;
    return x.key > y.key;
  }
};

std::vector<std::vector<primitive>> successors(
    const std::vector<primitive>& seq) {
  std::vector<std::vector<primitive>> out;
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    if (auto repl = try_rewrite_pair(seq[i], seq[i + 1])) {
      std::vector<primitive> next(seq.begin(),
                                  seq.begin() + static_cast<long>(i));
      next.insert(next.end(), repl->begin(), repl->end());
      next.insert(next.end(), seq.begin() + static_cast<long>(i) + 2,
                  seq.end());
      out.push_back(std::move(next));
    }
    if (can_swap_adjacent(seq[i], seq[i + 1])) {
      std::vector<primitive> next = seq;
      std::swap(next[i], next[i + 1]);
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

optimize_result optimize(const std::vector<primitive>& input,
                         long long budget) {
  if (budget < 0) budget = default_optimize_budget();

  struct best_state {
    long long score;
    long long steps;
    std::string merged_key;
    std::vector<primitive> merged;
  };
  auto merged0 = merge_boxes(input);
  best_state best{raw_cost(merged0), 0, sequence_key(merged0),
                  std::move(merged0)};

  std::priority_queue<search_node, std::vector<search_node>, node_order> open;
  std::set<std::string> visited;
  std::string key0 = sequence_key(input);
  visited.insert(key0);
  open.push({best.score, 0, key0, input});

  long long expansions = 0;
  bool exhausted = false;
  while (!open.empty()) {
    if (expansions >= budget) {
      exhausted = true;
      break;
    }
    search_node node = open.top();
    open.pop();
    ++expansions;
    for (auto& next : successors(node.seq)) {
      std::string key = sequence_key(next);
      if (!visited.insert(key).second) continue;
      auto merged = merge_boxes(next);
      long long score = raw_cost(merged);
      long long steps = node.steps + 1;
      std::string merged_key = sequence_key(merged);
      bool better =
          score < best.score ||
          (score == best.score &&
           (steps < best.steps ||
            (steps == best.steps && merged_key < best.merged_key)));
      if (better) best = {score, steps, merged_key, merged};
      open.push({score, steps, std::move(key), std::move(next)});
    }
  }

  optimize_result result;
  result.seq = std::move(best.merged);
  result.cost = best.score;
  result.budget_exhausted = exhausted;
  result.expansions = expansions;
  return result;
}

}  // namespace revseq
