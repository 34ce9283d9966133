#include "revseq/fault.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

namespace revseq {

std::string fault_to_string(const fault_spec& f) {
  std::string s = "g" + std::to_string(f.gate_index) + ".p" +
                  std::to_string(f.port) + ".";
  s += f.side == fault_side::input ? "in" : "out";
  s += ".";
  if (f.model == fault_model::bit_flip)
    s += "flip";
  else
    s += f.stuck_value ? "sa1" : "sa0";
  return s;
}

std::optional<fault_spec> parse_fault(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) return std::nullopt;
  auto number_after = [](const std::string& s, char prefix) -> int {
    if (s.size() < 2 || s[0] != prefix) return -1;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return -1;
    return std::stoi(s.substr(1));
  };
  fault_spec f;
  f.gate_index = number_after(parts[0], 'g');
  f.port = number_after(parts[1], 'p');
  if (f.gate_index < 0 || f.port < 0) return std::nullopt;
  if (parts[2] == "in")
    f.side = fault_side::input;
  else if (parts[2] == "out")
    f.side = fault_side::output;
  else
    return std::nullopt;
  if (parts[3] == "flip") {
    f.model = fault_model::bit_flip;
  } else if (parts[3] == "sa0") {
    f.model = fault_model::stuck_at;
    f.stuck_value = false;
  } else if (parts[3] == "sa1") {
    f.model = fault_model::stuck_at;
    f.stuck_value = true;
  } else {
    return std::nullopt;
  }
  return f;
}

std::vector<fault_spec> enumerate_faults(const circuit& c, fault_model m) {
  std::vector<fault_spec> out;
  for (int gi = 0; gi < static_cast<int>(c.gates.size()); ++gi) {
    int arity = gate_info(c.gates[static_cast<std::size_t>(gi)].op).arity;
    for (int p = 0; p < arity; ++p) {
      if (m == fault_model::stuck_at) {
        for (fault_side side : {fault_side::input, fault_side::output})
          for (bool v : {false, true})
            out.push_back({gi, p, side, fault_model::stuck_at, v});
      } else {
        out.push_back({gi, p, fault_side::output, fault_model::bit_flip,
                       false});
      }
    }
  }
  return out;
}

namespace {

void check_fault_sites(const circuit& c,
                       const std::vector<fault_spec>& faults) {
  for (const auto& f : faults) {
    if (f.gate_index < 0 || f.gate_index >= static_cast<int>(c.gates.size()))
      throw error("fault site names gate " + std::to_string(f.gate_index) +
                  " which does not exist");
    int arity =
        gate_info(c.gates[static_cast<std::size_t>(f.gate_index)].op).arity;
    if (f.port < 0 || f.port >= arity)
      throw error("fault site " + fault_to_string(f) +
                  " names a port beyond the gate arity");
  }
}

bool corrupt(bool value, const fault_spec& f) {
  if (f.model == fault_model::bit_flip) return !value;
  return f.stuck_value;
}

}  // namespace

bitvec eval_with_faults(const circuit& c,
                        const std::vector<fault_spec>& faults,
                        const bitvec& input) {
  if (input.width != c.width())
    throw error("input width does not match circuit width");
  check_fault_sites(c, faults);
  bitvec lines = input;
  for (int gi = 0; gi < static_cast<int>(c.gates.size()); ++gi) {
    const gate_inst& g = c.gates[static_cast<std::size_t>(gi)];
    const gate_def& d = gate_info(g.op);
    bitvec local(d.arity, 0);
    for (int p = 0; p < d.arity; ++p)
      local.set(p, lines.get(g.lines[static_cast<std::size_t>(p)]));
    for (const auto& f : faults)
      if (f.gate_index == gi && f.side == fault_side::input)
        local.set(f.port, corrupt(local.get(f.port), f));
    bitvec out = apply_gate(d, local);
    for (int p = 0; p < d.arity; ++p)
      lines.set(g.lines[static_cast<std::size_t>(p)], out.get(p));
    for (const auto& f : faults)
      if (f.gate_index == gi && f.side == fault_side::output) {
        int line = g.lines[static_cast<std::size_t>(f.port)];
        lines.set(line, corrupt(lines.get(line), f));
      }
  }
  return lines;
}

bool parity_detects(const circuit& c, const std::vector<fault_spec>& faults,
                    const bitvec& input) {
  if (!c.all_gates_parity_preserving())
    throw error(
        "parity screening requires every gate to preserve parity");
  bitvec faulty = eval_with_faults(c, faults, input);
  return faulty.xor_reduce() != input.xor_reduce();
}

coverage_report evaluate_test_set(
    const circuit& c, const std::vector<bitvec>& vectors,
    const std::vector<fault_spec>& faults,
    const std::optional<std::vector<int>>& observe) {
  std::vector<int> watch =
      observe ? *observe : c.primary_output_lines();
  coverage_report rep;
  rep.detecting_vectors.resize(faults.size());

  std::vector<bitvec> nominal;
  nominal.reserve(vectors.size());
  for (const auto& v : vectors) nominal.push_back(eval_cascade(c, v));

  for (std::size_t fi = 0; fi < faults.size(); ++fi) {
    std::vector<fault_spec> one = {faults[fi]};
    for (std::size_t vi = 0; vi < vectors.size(); ++vi) {
      bitvec faulty = eval_with_faults(c, one, vectors[vi]);
      bool differs = false;
      for (int line : watch)
        if (faulty.get(line) != nominal[vi].get(line)) {
          differs = true;
          break;
        }
      if (differs)
        rep.detecting_vectors[fi].push_back(static_cast<int>(vi));
    }
    if (rep.detecting_vectors[fi].empty())
      rep.undetected.push_back(static_cast<int>(fi));
  }
  return rep;
}

std::vector<bitvec> all_input_vectors(const circuit& c) {
  if (c.is_sequential())
    throw error("input sweep needs a combinational circuit");
  auto free = c.primary_input_lines();
  if (free.size() > 20)
    throw error("input sweep limited to 20 free inputs, circuit has " +
                std::to_string(free.size()));
  bitvec base(c.width(), 0);
  for (int i = 0; i < c.width(); ++i)
    if (c.in_roles[static_cast<std::size_t>(i)] == input_role::const_one)
      base.set(i, true);
  std::vector<bitvec> out;
  std::uint32_t count = 1u << free.size();
  for (std::uint32_t pattern = 0; pattern < count; ++pattern) {
    bitvec v = base;
    for (std::size_t j = 0; j < free.size(); ++j)
      v.set(free[j], (pattern >> (free.size() - 1 - j)) & 1u);
    out.push_back(v);
  }
  return out;
}

std::vector<bitvec> minimal_complete_test_set(
    const circuit& c, const std::vector<fault_spec>& faults,
    const std::optional<std::vector<int>>& observe) {
  if (c.is_sequential())
    throw error("test set search needs a combinational circuit");
  if (c.primary_input_lines().size() > 16)
    throw error("exhaustive test set search limited to 16 free inputs");
  auto universe = all_input_vectors(c);
  auto full = evaluate_test_set(c, universe, faults, observe);
  if (!full.complete())
    throw error("no complete test set exists: " +
                std::to_string(full.undetected.size()) +
                " faults are undetectable");

  // Detection masks, one block-set per vector.
  std::size_t nf = faults.size();
  std::size_t blocks = (nf + 63) / 64;
  std::vector<std::vector<std::uint64_t>> mask(
      universe.size(), std::vector<std::uint64_t>(blocks, 0));
  for (std::size_t fi = 0; fi < nf; ++fi)
    for (int vi : full.detecting_vectors[fi])
      mask[static_cast<std::size_t>(vi)][fi / 64] |= 1ull << (fi % 64);
  std::vector<std::uint64_t> want(blocks, 0);
  for (std::size_t fi = 0; fi < nf; ++fi) want[fi / 64] |= 1ull << (fi % 64);

  std::size_t n = universe.size();
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<std::uint64_t> got(blocks, 0);
      for (std::size_t i : idx)
        for (std::size_t b = 0; b < blocks; ++b) got[b] |= mask[i][b];
      if (got == want) {
        std::vector<bitvec> out;
        for (std::size_t i : idx) out.push_back(universe[i]);
        return out;
      }
      // next combination in lexicographic order
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == n - size + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw error("no complete test set exists");
}

std::vector<fault_spec> testable_stuck_at_faults(const circuit& c) {
  if (c.is_sequential())
    throw error("fault screening needs a combinational circuit");
  auto universe = all_input_vectors(c);

  // Value profiles per gate port: what the port reads, and what the line
  // holds right after the gate, across the whole input sweep.
  struct profile {
    bool seen0 = false;
    bool seen1 = false;
    bool constant(bool v) const { return v ? (seen1 && !seen0)
                                           : (seen0 && !seen1); }
  };
  std::vector<std::vector<profile>> read_prof(c.gates.size());
  std::vector<std::vector<profile>> post_prof(c.gates.size());
  for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
    int arity = gate_info(c.gates[gi].op).arity;
    read_prof[gi].resize(static_cast<std::size_t>(arity));
    post_prof[gi].resize(static_cast<std::size_t>(arity));
  }
  for (const auto& v : universe) {
    bitvec lines = v;
    for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
      const gate_inst& g = c.gates[gi];
      const gate_def& d = gate_info(g.op);
      for (int p = 0; p < d.arity; ++p) {
        bool val = lines.get(g.lines[static_cast<std::size_t>(p)]);
        (val ? read_prof[gi][static_cast<std::size_t>(p)].seen1
             : read_prof[gi][static_cast<std::size_t>(p)].seen0) = true;
      }
      apply_gate_inplace(g, lines);
      for (int p = 0; p < d.arity; ++p) {
        bool val = lines.get(g.lines[static_cast<std::size_t>(p)]);
        (val ? post_prof[gi][static_cast<std::size_t>(p)].seen1
             : post_prof[gi][static_cast<std::size_t>(p)].seen0) = true;
      }
    }
  }

  auto dangling = [&](std::size_t gi, int port) {
    int line = c.gates[gi].lines[static_cast<std::size_t>(port)];
    for (std::size_t h = gi + 1; h < c.gates.size(); ++h)
      for (int other : c.gates[h].lines)
        if (other == line) return false;
    return c.out_roles[static_cast<std::size_t>(line)] ==
           output_role::garbage;
  };

  std::vector<fault_spec> out;
  for (int gi = 0; gi < static_cast<int>(c.gates.size()); ++gi) {
    int arity = gate_info(c.gates[static_cast<std::size_t>(gi)].op).arity;
    for (int p = 0; p < arity; ++p) {
      for (bool v : {false, true}) {
        const profile& rp =
            read_prof[static_cast<std::size_t>(gi)][static_cast<std::size_t>(p)];
        if (!rp.constant(v))
          out.push_back({gi, p, fault_side::input, fault_model::stuck_at, v});
      }
      if (dangling(static_cast<std::size_t>(gi), p)) continue;
      for (bool v : {false, true}) {
        const profile& pp =
            post_prof[static_cast<std::size_t>(gi)][static_cast<std::size_t>(p)];
        if (!pp.constant(v))
          out.push_back(
              {gi, p, fault_side::output, fault_model::stuck_at, v});
      }
    }
  }
  return out;
}

circuit offline_test_form(const circuit& c,
                          const std::vector<std::string>& control_vars) {
  circuit b = break_feedback(c);
  for (const auto& name : control_vars) {
    int idx = b.find_var(name);
    if (idx < 0) throw error("unknown line: " + name);
    input_role r = b.in_roles[static_cast<std::size_t>(idx)];
    if (r != input_role::const_zero && r != input_role::const_one)
      throw error("line " + name + " is not a constant input");
    b.in_roles[static_cast<std::size_t>(idx)] = input_role::primary;
  }
  return b;
}

trace run_sequential_with_faults(
    const circuit& c, const stimulus& s,
    const std::vector<fault_spec>& faults,
    const std::optional<std::vector<bool>>& init_override) {
  check_fault_sites(c, faults);
  auto primaries = c.primary_input_lines();
  if (s.inputs.size() != primaries.size())
    throw error("stimulus must cover every primary input");
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

    bitvec out = eval_with_faults(c, faults, in);
    for (std::size_t k = 0; k < c.feedbacks.size(); ++k)
      regs[k] = out.get(c.feedbacks[k].source);
    t.cycles.push_back({in, out, regs});
  }
  return t;
}

std::vector<int> online_flagged_cycles(const trace& t, int test_line) {
  std::vector<int> out;
  for (std::size_t cy = 0; cy < t.cycles.size(); ++cy)
    if (t.cycles[cy].out_vec.get(test_line))
      out.push_back(static_cast<int>(cy));
  return out;
}

}  // namespace revseq
