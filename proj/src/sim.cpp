#include "revseq/sim.hpp"

#include <fstream>
#include <sstream>

namespace revseq {

void apply_gate_inplace(const gate_inst& g, bitvec& lines) {
  const gate_def& d = gate_info(g.op);
  bitvec local(d.arity, 0);
  for (int p = 0; p < d.arity; ++p)
    local.set(p, lines.get(g.lines[static_cast<std::size_t>(p)]));
  bitvec out = apply_gate(d, local);
  for (int p = 0; p < d.arity; ++p)
    lines.set(g.lines[static_cast<std::size_t>(p)], out.get(p));
}

bitvec eval_cascade(const circuit& c, bitvec lines) {
  for (const auto& g : c.gates) apply_gate_inplace(g, lines);
  return lines;
}

bitvec eval_combinational(const circuit& c, const bitvec& input) {
  if (c.is_sequential())
    throw error("circuit is sequential; break the feedback first");
  if (input.width != c.width())
    throw error("input width does not match circuit width");
  for (int i = 0; i < c.width(); ++i) {
    input_role r = c.in_roles[static_cast<std::size_t>(i)];
    if (r == input_role::const_zero && input.get(i))
      throw error("stimulus drives constant-0 line " +
                  c.vars[static_cast<std::size_t>(i)] + " to 1");
    if (r == input_role::const_one && !input.get(i))
      throw error("stimulus drives constant-1 line " +
                  c.vars[static_cast<std::size_t>(i)] + " to 0");
  }
  return eval_cascade(c, input);
}

trace run_sequential(const circuit& c, const stimulus& s,
                     const std::optional<std::vector<bool>>& init_override) {
  auto primaries = c.primary_input_lines();
  if (s.inputs.size() != primaries.size())
    throw error("stimulus must cover every primary input");
  // Map stimulus columns onto line indices by symbol.
  std::vector<int> col_line(s.inputs.size(), -1);
  for (std::size_t k = 0; k < s.inputs.size(); ++k) {
    int idx = c.find_var(s.inputs[k]);
    if (idx < 0 ||
        c.in_roles[static_cast<std::size_t>(idx)] != input_role::primary)
      throw error("stimulus column '" + s.inputs[k] +
                  "' is not a primary input");
    col_line[k] = idx;
  }

  std::vector<bool> regs;
  if (init_override) {
    if (init_override->size() != c.feedbacks.size())
      throw error("init override needs one bit per feedback");
    regs = *init_override;
  } else {
    for (const auto& fb : c.feedbacks) regs.push_back(fb.init);
  }

  trace t;
  for (const auto& row : s.cycles) {
    if (row.size() != s.inputs.size())
      throw error("stimulus row width mismatch");
    bitvec in(c.width(), 0);
    for (int i = 0; i < c.width(); ++i)
      if (c.in_roles[static_cast<std::size_t>(i)] == input_role::const_one)
        in.set(i, true);
    for (std::size_t k = 0; k < row.size(); ++k)
      in.set(col_line[k], row[k]);
    for (std::size_t k = 0; k < c.feedbacks.size(); ++k)
      in.set(c.feedbacks[k].sink, regs[k]);

    bitvec out = eval_cascade(c, in);
    for (std::size_t k = 0; k < c.feedbacks.size(); ++k)
      regs[k] = out.get(c.feedbacks[k].source);
    t.cycles.push_back({in, out, regs});
  }
  return t;
}

circuit break_feedback(const circuit& c) {
  circuit b = c;
  for (const auto& fb : b.feedbacks) {
    b.in_roles[static_cast<std::size_t>(fb.sink)] = input_role::primary;
    b.out_roles[static_cast<std::size_t>(fb.source)] = output_role::primary;
  }
  b.feedbacks.clear();
  return b;
}

stimulus parse_stimulus_csv(const std::string& text, const circuit& c) {
  stimulus s;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (header) {
      s.inputs = cells;
      header = false;
      continue;
    }
    if (cells.size() != s.inputs.size())
      throw parse_error(line_no, 1, "stimulus row width mismatch");
    std::vector<bool> bits;
    for (const auto& x : cells) {
      if (x == "0")
        bits.push_back(false);
      else if (x == "1")
        bits.push_back(true);
      else
        throw parse_error(line_no, 1, "stimulus cells are 0 or 1");
    }
    s.cycles.push_back(std::move(bits));
  }
  if (header) throw error("stimulus file has no header row");
  // Symbols are validated against the circuit here so errors surface
  // before simulation starts.
  for (const auto& sym : s.inputs)
    if (c.find_var(sym) < 0) throw error("unknown stimulus column: " + sym);
  return s;
}

stimulus load_stimulus_csv(const std::string& path, const circuit& c) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open stimulus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_stimulus_csv(buf.str(), c);
}

std::string trace_to_csv(const circuit& c, const trace& t) {
  std::ostringstream out;
  out << "cycle";
  for (const auto& v : c.vars) out << ',' << v << ".in";
  for (const auto& v : c.vars) out << ',' << v << ".out";
  out << "\n";
  for (std::size_t cy = 0; cy < t.cycles.size(); ++cy) {
    out << cy;
    for (int i = 0; i < c.width(); ++i)
      out << ',' << (t.cycles[cy].in_vec.get(i) ? '1' : '0');
    for (int i = 0; i < c.width(); ++i)
      out << ',' << (t.cycles[cy].out_vec.get(i) ? '1' : '0');
    out << "\n";
  }
  return out.str();
}

}  // namespace revseq
