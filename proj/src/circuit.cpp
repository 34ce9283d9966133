#include "revseq/circuit.hpp"

#include <set>

namespace revseq {

bool circuit::all_gates_parity_preserving() const {
  for (const auto& g : gates) {
    const gate_def& d = def_of(g);
    if (!is_parity_preserving(d.perm, d.arity)) return false;
  }
  return true;
}

circuit circuit::make(std::string name, std::vector<std::string> vars) {
  circuit c;
  c.name = std::move(name);
  c.vars = std::move(vars);
  c.in_roles.assign(c.vars.size(), input_role::primary);
  c.out_roles.assign(c.vars.size(), output_role::primary);
  return c;
}

void circuit::add_gate(gate_op op, const std::vector<std::string>& port_vars) {
  gate_inst g;
  g.op = op;
  for (const auto& v : port_vars) {
    int idx = find_var(v);
    if (idx < 0) throw error("unknown line symbol: " + v);
    g.lines.push_back(idx);
  }
  gates.push_back(std::move(g));
}

std::vector<violation> circuit::validate() const {
  std::vector<violation> out;
  auto flag = [&out](std::string kind, std::string where, std::string msg) {
    out.push_back({std::move(kind), std::move(where), std::move(msg)});
  };

  if (in_roles.size() != vars.size() || out_roles.size() != vars.size())
    flag("role-table", "circuit", "role tables must cover every line");

  std::set<std::string> seen_vars;
  for (const auto& v : vars)
    if (!seen_vars.insert(v).second)
      flag("duplicate-symbol", "line " + v, "line symbol declared twice");

  for (std::size_t gi = 0; gi < gates.size(); ++gi) {
    const auto& g = gates[gi];
    const gate_def& d = gate_info(g.op);
    const std::string where = "gate " + std::to_string(gi);
    if (static_cast<int>(g.lines.size()) != d.arity)
      flag("arity", where, d.label + " expects " + std::to_string(d.arity) +
                               " lines");
    std::set<int> uniq;
    for (int ln : g.lines) {
      if (ln < 0 || ln >= width()) {
        flag("out-of-range", where,
             "line index " + std::to_string(ln) + " not below width " +
                 std::to_string(width()));
        continue;
      }
      if (!uniq.insert(ln).second)
        flag("duplicate-line", where,
             "line " + vars[static_cast<std::size_t>(ln)] +
                 " used on two ports of one gate");
    }
  }

  std::set<int> sinks;
  for (std::size_t fi = 0; fi < feedbacks.size(); ++fi) {
    const auto& fb = feedbacks[fi];
    const std::string where = "feedback " + std::to_string(fi);
    if (fb.source < 0 || fb.source >= width() || fb.sink < 0 ||
        fb.sink >= width()) {
      flag("dangling-feedback", where, "source or sink line does not exist");
      continue;
    }
    if (out_roles[static_cast<std::size_t>(fb.source)] !=
        output_role::feedback_source)
      flag("role-conflict", where,
           "source line " + vars[static_cast<std::size_t>(fb.source)] +
               " is not marked as a feedback source");
    if (in_roles[static_cast<std::size_t>(fb.sink)] !=
        input_role::feedback_sink)
      flag("role-conflict", where,
           "sink line " + vars[static_cast<std::size_t>(fb.sink)] +
               " is not a feedback sink (constant or primary input)");
    if (!sinks.insert(fb.sink).second)
      flag("duplicate-sink", where,
           "two feedback bindings share sink line " +
               vars[static_cast<std::size_t>(fb.sink)]);
  }

  // Every sink/source role must be backed by an actual binding.
  for (int i = 0; i < width(); ++i) {
    const std::string where = "line " + vars[static_cast<std::size_t>(i)];
    if (in_roles[static_cast<std::size_t>(i)] == input_role::feedback_sink &&
        !sinks.count(i))
      flag("unbound-sink", where, "feedback sink has no binding");
    if (out_roles[static_cast<std::size_t>(i)] ==
        output_role::feedback_source) {
      bool used = false;
      for (const auto& fb : feedbacks) used |= (fb.source == i);
      if (!used) flag("unbound-source", where, "feedback source has no binding");
    }
  }

  return out;
}

}  // namespace revseq
