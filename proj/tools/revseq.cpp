#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "revseq/catalog.hpp"
#include "revseq/fault.hpp"
#include "revseq/metrics.hpp"
#include "revseq/netlist_io.hpp"
#include "revseq/qcost.hpp"
#include "revseq/sim.hpp"

using namespace revseq;

namespace {

// Problems with the invocation or its input files exit with 2; problems
// found by the analysis itself exit with 1.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* yn(bool v) { return v ? "yes" : "no"; }

circuit load_circuit(const std::string& path) {
  try {
    return parse_netlist_file(path);
  } catch (const error& e) {
    throw usage_error(e.what());
  }
}

std::vector<bool> parse_init_bits(const std::string& text,
                                  const circuit& c) {
  if (text.size() != c.feedbacks.size())
    throw usage_error("--init needs one bit per feedback (" +
                      std::to_string(c.feedbacks.size()) + ")");
  std::vector<bool> bits;
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw usage_error("--init bits must be 0 or 1");
    bits.push_back(ch == '1');
  }
  return bits;
}

stimulus load_stimulus_or_usage(const std::string& path, const circuit& c) {
  try {
    return load_stimulus_csv(path, c);
  } catch (const error& e) {
    throw usage_error(e.what());
  }
}

std::vector<bitvec> load_vectors(const std::string& path, const circuit& c) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open vector file: " + path);
  std::vector<bitvec> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && (line[start] == ' ' || line[start] == '\t'))
      ++start;
    line = line.substr(start);
    if (line.empty()) continue;
    bitvec v;
    try {
      v = bitvec::from_string(line);
    } catch (const std::exception& e) {
      throw usage_error("vector file line " + std::to_string(line_no) + ": " +
                        e.what());
    }
    if (v.width != c.width())
      throw usage_error("vector file line " + std::to_string(line_no) +
                        ": width " + std::to_string(v.width) +
                        " does not match circuit width " +
                        std::to_string(c.width()));
    for (int i = 0; i < c.width(); ++i) {
      input_role r = c.in_roles[static_cast<std::size_t>(i)];
      if ((r == input_role::const_zero && v.get(i)) ||
          (r == input_role::const_one && !v.get(i)))
        throw usage_error("vector file line " + std::to_string(line_no) +
                          ": constant line " +
                          c.vars[static_cast<std::size_t>(i)] +
                          " driven against its declared value");
    }
    out.push_back(v);
  }
  return out;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- check

int run_check(const std::string& file, bool json) {
  circuit c = load_circuit(file);
  bool all_rev = true, all_pp = true, all_cons = true;
  struct row {
    std::string token;
    std::vector<std::string> vars;
    bool rev, pp, cons;
  };
  std::vector<row> rows;
  for (const auto& g : c.gates) {
    const gate_def& d = gate_info(g.op);
    row r;
    r.token = d.token;
    for (int line : g.lines)
      r.vars.push_back(c.vars[static_cast<std::size_t>(line)]);
    r.rev = is_permutation(d.perm);
    r.pp = is_parity_preserving(d.perm, d.arity);
    r.cons = is_conservative(d.perm, d.arity);
    all_rev = all_rev && r.rev;
    all_pp = all_pp && r.pp;
    all_cons = all_cons && r.cons;
    rows.push_back(std::move(r));
  }
  if (json) {
    nlohmann::json j;
    j["circuit"] = c.name;
    j["lines"] = c.width();
    j["sequential"] = c.is_sequential();
    j["gates"] = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      nlohmann::json g;
      g["index"] = static_cast<int>(i);
      g["token"] = rows[i].token;
      g["vars"] = rows[i].vars;
      g["reversible"] = rows[i].rev;
      g["parity_preserving"] = rows[i].pp;
      g["conservative"] = rows[i].cons;
      j["gates"].push_back(g);
    }
    j["all_reversible"] = all_rev;
    j["all_parity_preserving"] = all_pp;
    j["all_conservative"] = all_cons;
    print_json(j);
    return 0;
  }
  std::cout << "circuit: " << c.name << "\n";
  std::cout << "lines: " << c.width() << "\n";
  std::cout << "sequential: " << yn(c.is_sequential()) << "\n";
  std::cout << "gates: " << rows.size() << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::cout << "  " << i << ": " << rows[i].token;
    for (const auto& v : rows[i].vars) std::cout << " " << v;
    std::cout << " | reversible=" << yn(rows[i].rev)
              << " parity=" << yn(rows[i].pp)
              << " conservative=" << yn(rows[i].cons) << "\n";
  }
  std::cout << "all_reversible: " << yn(all_rev) << "\n";
  std::cout << "all_parity_preserving: " << yn(all_pp) << "\n";
  std::cout << "all_conservative: " << yn(all_cons) << "\n";
  return 0;
}

// ---------------------------------------------------------------- truth

int run_truth(const std::string& file, bool json) {
  circuit c = load_circuit(file);
  auto vectors = all_input_vectors(c);
  if (json) {
    nlohmann::json j;
    j["circuit"] = c.name;
    j["vars"] = c.vars;
    j["rows"] = nlohmann::json::array();
    for (const auto& v : vectors) {
      nlohmann::json r;
      r["in"] = v.to_string();
      r["out"] = eval_cascade(c, v).to_string();
      j["rows"].push_back(r);
    }
    print_json(j);
    return 0;
  }
  std::cout << "vars:";
  for (const auto& v : c.vars) std::cout << " " << v;
  std::cout << "\n";
  for (const auto& v : vectors)
    std::cout << v.to_string() << " -> " << eval_cascade(c, v).to_string()
              << "\n";
  return 0;
}

// ------------------------------------------------------------------ sim

int run_sim(const std::string& file, const std::string& stim_path,
            int cycles, const std::string& init_str,
            const std::string& trace_path, bool json) {
  circuit c = load_circuit(file);
  stimulus s = load_stimulus_or_usage(stim_path, c);
  if (cycles >= 0) {
    if (static_cast<std::size_t>(cycles) > s.cycles.size())
      throw usage_error("--cycles exceeds the stimulus length");
    s.cycles.resize(static_cast<std::size_t>(cycles));
  }
  std::optional<std::vector<bool>> init;
  if (!init_str.empty()) init = parse_init_bits(init_str, c);
  trace t = run_sequential(c, s, init);
  std::string csv = trace_to_csv(c, t);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path, std::ios::binary);
    if (!out) throw usage_error("cannot write trace file: " + trace_path);
    out << csv;
  }
  if (json) {
    nlohmann::json j;
    j["circuit"] = c.name;
    j["cycles"] = nlohmann::json::array();
    for (std::size_t cy = 0; cy < t.cycles.size(); ++cy) {
      nlohmann::json row;
      row["cycle"] = static_cast<int>(cy);
      row["in"] = t.cycles[cy].in_vec.to_string();
      row["out"] = t.cycles[cy].out_vec.to_string();
      std::string regs;
      for (bool b : t.cycles[cy].regs) regs += b ? '1' : '0';
      row["regs"] = regs;
      j["cycles"].push_back(row);
    }
    print_json(j);
    return 0;
  }
  std::cout << csv;
  return 0;
}

// -------------------------------------------------------------- metrics

int run_metrics(const std::string& file, const std::string& refs_path,
                const std::string& design_key, bool json) {
  circuit c = load_circuit(file);
  metrics_report m = compute_metrics(c);

  std::optional<design_reference_set> refs;
  if (!refs_path.empty()) {
    std::map<std::string, design_reference_set> all;
    try {
      all = load_reference_data(refs_path);
    } catch (const error& e) {
      throw usage_error(e.what());
    }
    std::string key = design_key;
    if (key.empty()) {
      if (all.count(c.name)) {
        key = c.name;
      } else {
        for (const auto& [k, set] : all)
          if (set.circuit_name == c.name) {
            key = k;
            break;
          }
      }
    }
    if (!key.empty()) {
      auto it = all.find(key);
      if (it == all.end())
        throw usage_error("reference data has no design named " + key);
      refs = it->second;
    }
  }

  std::vector<comparison_row> comparisons;
  std::vector<divergence> divergences;
  if (refs) {
    for (const auto& row : refs->rows)
      comparisons.push_back(compare_against(m, row));
    if (refs->published_row)
      divergences = diverging_fields(m, *refs->published_row);
  }

  if (json) {
    nlohmann::json j;
    j["circuit"] = c.name;
    nlohmann::json jm;
    jm["gate_count"] = m.gate_count;
    jm["garbage_outputs"] = m.garbage_outputs;
    jm["constant_inputs"] = m.constant_inputs;
    jm["quantum_cost"] = m.quantum_cost;
    jm["hc"] = {{"a", m.hc.a}, {"b", m.hc.b}, {"d", m.hc.d},
                {"text", m.hc.to_string()}};
    j["metrics"] = jm;
    if (refs) {
      j["design"] = refs->design;
      j["comparisons"] = nlohmann::json::array();
      for (const auto& row : comparisons) {
        nlohmann::json r;
        r["citation"] = row.key;
        r["display"] = row.display;
        r["gc"] = row.gc.rendered;
        r["go"] = row.go.rendered;
        r["ci"] = row.ci.rendered;
        r["qc"] = row.qc.rendered;
        r["hc"] = row.hc;
        j["comparisons"].push_back(r);
      }
      j["divergences"] = nlohmann::json::array();
      for (const auto& d : divergences) {
        nlohmann::json r;
        r["field"] = d.field;
        r["computed"] = d.computed;
        r["published"] = d.published;
        j["divergences"].push_back(r);
      }
    }
    print_json(j);
    return 0;
  }

  std::cout << "circuit: " << c.name << "\n";
  std::cout << "Gate Count: " << m.gate_count << "\n";
  std::cout << "Garbage Output: " << m.garbage_outputs << "\n";
  std::cout << "Constant Input: " << m.constant_inputs << "\n";
  std::cout << "Quantum Cost: " << m.quantum_cost << "\n";
  std::cout << "Hardware Complexity: " << m.hc.to_string() << "\n";
  if (refs) {
    std::cout << "design: " << refs->design << "\n";
    std::cout << "comparisons:\n";
    for (const auto& row : comparisons)
      std::cout << "  " << row.display << ": GC " << row.gc.rendered
                << "% GO " << row.go.rendered << "% CI " << row.ci.rendered
                << "% QC " << row.qc.rendered << "% HC " << row.hc << "\n";
    if (refs->published_row) {
      const metrics_report& p = *refs->published_row;
      std::cout << "published: GC " << p.gate_count << " GO "
                << p.garbage_outputs << " CI " << p.constant_inputs << " QC "
                << p.quantum_cost << " HC " << p.hc.to_string() << "\n";
    }
    if (divergences.empty()) {
      std::cout << "divergences: none\n";
    } else {
      std::cout << "divergences:\n";
      for (const auto& d : divergences)
        std::cout << "  " << d.field << ": computed " << d.computed
                  << ", published " << d.published << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- qcost

int run_qcost(const std::string& file, bool do_optimize, long long budget,
              bool emit, bool json) {
  circuit c = load_circuit(file);
  auto seq = decompose(c);
  long long raw = raw_cost(seq);
  std::optional<optimize_result> opt;
  if (do_optimize) opt = optimize(seq, budget);

  const std::vector<primitive>& shown = opt ? opt->seq : seq;
  if (json) {
    nlohmann::json j;
    j["circuit"] = c.name;
    j["raw"] = raw;
    if (opt) {
      j["optimized"] = opt->cost;
      j["budget_exhausted"] = opt->budget_exhausted;
      j["expansions"] = opt->expansions;
    }
    if (emit) {
      j["sequence"] = nlohmann::json::array();
      for (const auto& p : shown) j["sequence"].push_back(primitive_to_string(p));
    }
    print_json(j);
    return 0;
  }
  if (opt)
    std::cout << "raw=" << raw << " optimized=" << opt->cost << "\n";
  else
    std::cout << "raw=" << raw << "\n";
  if (opt && opt->budget_exhausted) std::cout << "budget_exhausted=yes\n";
  if (emit)
    for (const auto& p : shown) std::cout << primitive_to_string(p) << "\n";
  return 0;
}

// --------------------------------------------------------------- faults

fault_model parse_model(const std::string& s) {
  if (s == "stuck") return fault_model::stuck_at;
  if (s == "flip") return fault_model::bit_flip;
  throw usage_error("--model is 'stuck' or 'flip'");
}

std::vector<fault_spec> parse_injections(const std::vector<std::string>& ids,
                                         const circuit& c) {
  std::vector<fault_spec> out;
  for (const auto& id : ids) {
    auto f = parse_fault(id);
    if (!f) throw usage_error("bad fault site: " + id);
    out.push_back(*f);
  }
  // Range problems surface as usage errors before any analysis runs.
  try {
    if (!out.empty()) eval_with_faults(c, out, bitvec(c.width(), 0));
  } catch (const error& e) {
    throw usage_error(e.what());
  }
  return out;
}

int run_faults(const std::string& file, const std::string& model_str,
               const std::vector<std::string>& inject_ids,
               const std::string& testset_path, bool minimal, bool offline,
               const std::vector<std::string>& free_vars, bool online,
               const std::string& stim_path, const std::string& test_line,
               const std::string& init_str, bool json) {
  circuit c = load_circuit(file);
  fault_model model = parse_model(model_str);
  nlohmann::json j;
  j["circuit"] = c.name;
  j["model"] = model_str;

  if (online) {
    if (stim_path.empty())
      throw usage_error("--online needs --stimulus");
    if (test_line.empty())
      throw usage_error("--online needs --test-line");
    int line = c.find_var(test_line);
    if (line < 0) throw usage_error("unknown line: " + test_line);
    stimulus s = load_stimulus_or_usage(stim_path, c);
    std::optional<std::vector<bool>> init;
    if (!init_str.empty()) init = parse_init_bits(init_str, c);
    auto faults = parse_injections(inject_ids, c);
    trace t = run_sequential_with_faults(c, s, faults, init);
    auto flagged = online_flagged_cycles(t, line);
    if (json) {
      nlohmann::json o;
      o["test_line"] = test_line;
      o["cycles"] = static_cast<int>(t.cycles.size());
      o["flagged_cycles"] = flagged;
      j["online"] = o;
      if (!inject_ids.empty()) j["injected"] = inject_ids;
      print_json(j);
      return 0;
    }
    std::cout << "test_line: " << test_line << "\n";
    std::cout << "cycles: " << t.cycles.size() << "\n";
    std::cout << "flagged_cycles:";
    if (flagged.empty()) {
      std::cout << " none";
    } else {
      for (int cy : flagged) std::cout << " " << cy;
    }
    std::cout << "\n";
    return 0;
  }

  circuit w = c;
  if (offline) {
    try {
      w = offline_test_form(c, free_vars);
    } catch (const error& e) {
      throw usage_error(e.what());
    }
  }
  std::vector<fault_spec> faults;
  std::optional<std::vector<int>> observe;
  if (offline) {
    if (model != fault_model::stuck_at)
      throw usage_error("--offline screens stuck-at faults; use --model stuck");
    faults = testable_stuck_at_faults(w);
    std::vector<int> all;
    for (int i = 0; i < w.width(); ++i) all.push_back(i);
    observe = all;
  } else {
    faults = enumerate_faults(w, model);
  }

  if (!inject_ids.empty()) {
    auto injected = parse_injections(inject_ids, w);
    auto vectors = all_input_vectors(w);
    int differs = 0;
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& v : vectors) {
      bitvec nominal = eval_cascade(w, v);
      bitvec faulty = eval_with_faults(w, injected, v);
      if (!(nominal == faulty)) ++differs;
      rows.push_back({v.to_string(), faulty.to_string()});
    }
    if (json) {
      j["injected"] = inject_ids;
      j["rows"] = nlohmann::json::array();
      for (const auto& [in, out] : rows) {
        nlohmann::json r;
        r["in"] = in;
        r["out"] = out;
        j["rows"].push_back(r);
      }
      j["differing_rows"] = differs;
      print_json(j);
      return 0;
    }
    for (const auto& [in, out] : rows)
      std::cout << in << " -> " << out << "\n";
    std::cout << "differing_rows: " << differs << "/" << rows.size() << "\n";
    return 0;
  }

  if (minimal) {
    auto set = minimal_complete_test_set(w, faults, observe);
    if (json) {
      j["sites"] = nlohmann::json::array();
      for (const auto& f : faults) j["sites"].push_back(fault_to_string(f));
      j["minimal"] = nlohmann::json::array();
      for (const auto& v : set) j["minimal"].push_back(v.to_string());
      print_json(j);
      return 0;
    }
    std::cout << "sites: " << faults.size() << "\n";
    std::cout << "minimal_test_set: " << set.size() << "\n";
    for (const auto& v : set) std::cout << v.to_string() << "\n";
    return 0;
  }

  if (!testset_path.empty()) {
    auto vectors = load_vectors(testset_path, w);
    auto rep = evaluate_test_set(w, vectors, faults, observe);
    if (json) {
      j["sites"] = nlohmann::json::array();
      for (const auto& f : faults) j["sites"].push_back(fault_to_string(f));
      nlohmann::json cov;
      cov["complete"] = rep.complete();
      cov["detected"] = nlohmann::json::object();
      for (std::size_t fi = 0; fi < faults.size(); ++fi)
        if (!rep.detecting_vectors[fi].empty())
          cov["detected"][fault_to_string(faults[fi])] =
              rep.detecting_vectors[fi];
      cov["undetected"] = nlohmann::json::array();
      for (int fi : rep.undetected)
        cov["undetected"].push_back(
            fault_to_string(faults[static_cast<std::size_t>(fi)]));
      j["coverage"] = cov;
      print_json(j);
      return rep.complete() ? 0 : 1;
    }
    for (std::size_t fi = 0; fi < faults.size(); ++fi) {
      std::cout << fault_to_string(faults[fi]) << ":";
      if (rep.detecting_vectors[fi].empty()) {
        std::cout << " undetected";
      } else {
        for (int vi : rep.detecting_vectors[fi])
          std::cout << " " << vectors[static_cast<std::size_t>(vi)].to_string();
      }
      std::cout << "\n";
    }
    std::cout << "coverage: " << (faults.size() - rep.undetected.size()) << "/"
              << faults.size() << "\n";
    std::cout << "complete: " << yn(rep.complete()) << "\n";
    return rep.complete() ? 0 : 1;
  }

  // No mode flag: list the fault sites.
  if (json) {
    j["sites"] = nlohmann::json::array();
    for (const auto& f : faults) j["sites"].push_back(fault_to_string(f));
    print_json(j);
    return 0;
  }
  std::cout << "sites: " << faults.size() << "\n";
  for (const auto& f : faults) std::cout << fault_to_string(f) << "\n";
  return 0;
}

// -------------------------------------------------------------- catalog

int run_catalog_list(bool json) {
  auto entries = build_catalog();
  if (json) {
    nlohmann::json j;
    j["designs"] = nlohmann::json::array();
    for (const auto& e : entries) {
      nlohmann::json r;
      r["name"] = e.name;
      r["title"] = e.title;
      r["lines"] = e.circ.width();
      r["gates"] = static_cast<int>(e.circ.gates.size());
      j["designs"].push_back(r);
    }
    print_json(j);
    return 0;
  }
  for (const auto& e : entries)
    std::cout << e.name << " lines=" << e.circ.width()
              << " gates=" << e.circ.gates.size() << " " << e.title << "\n";
  return 0;
}

int run_catalog_emit(const std::string& dir) {
  emit_catalog(dir);
  std::cout << "wrote " << catalog_names().size() << " circuits to " << dir
            << "\n";
  return 0;
}

int run_catalog_show(const std::string& name) {
  catalog_entry e;
  try {
    e = build_catalog_entry(name);
  } catch (const error& ex) {
    throw usage_error(ex.what());
  }
  std::cout << serialize_netlist(e.circ);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for reversible sequential logic"};
  app.require_subcommand(1);

  std::string file, stim_path, init_str, trace_path, refs_path, design_key;
  std::string testset_path, test_line, model_str = "stuck", emit_dir, name;
  std::vector<std::string> inject_ids, free_vars;
  bool json = false, do_optimize = false, emit = false, minimal = false;
  bool offline = false, online = false;
  int cycles = -1;
  long long budget = -1;

  auto* sc_check = app.add_subcommand("check", "gate and circuit predicates");
  sc_check->add_option("file", file, "netlist file")->required();
  sc_check->add_flag("--json", json, "machine-readable output");

  auto* sc_truth = app.add_subcommand("truth", "combinational truth table");
  sc_truth->add_option("file", file, "netlist file")->required();
  sc_truth->add_flag("--json", json, "machine-readable output");

  auto* sc_sim = app.add_subcommand("sim", "cycle-accurate simulation");
  sc_sim->add_option("file", file, "netlist file")->required();
  sc_sim->add_option("--stimulus", stim_path, "stimulus CSV")->required();
  sc_sim->add_option("--cycles", cycles, "run only the first N cycles");
  sc_sim->add_option("--init", init_str, "register init bits");
  sc_sim->add_option("--trace", trace_path, "also write the trace CSV here");
  sc_sim->add_flag("--json", json, "machine-readable output");

  auto* sc_metrics = app.add_subcommand("metrics", "cost metrics");
  sc_metrics->add_option("file", file, "netlist file")->required();
  sc_metrics->add_option("--refs", refs_path, "reference data JSON");
  sc_metrics->add_option("--design", design_key, "reference design key");
  sc_metrics->add_flag("--json", json, "machine-readable output");

  auto* sc_qcost = app.add_subcommand("qcost", "quantum cost");
  sc_qcost->add_option("file", file, "netlist file")->required();
  sc_qcost->add_flag("--optimize", do_optimize, "search for a cheaper form");
  sc_qcost->add_option("--budget", budget, "search expansion budget");
  sc_qcost->add_flag("--emit", emit, "print the primitive sequence");
  sc_qcost->add_flag("--json", json, "machine-readable output");

  auto* sc_faults = app.add_subcommand("faults", "fault campaigns");
  sc_faults->add_option("file", file, "netlist file")->required();
  sc_faults->add_option("--model", model_str, "stuck or flip");
  sc_faults->add_option("--inject", inject_ids, "fault site to inject");
  sc_faults->add_option("--testset", testset_path, "vector file to evaluate");
  sc_faults->add_flag("--minimal", minimal, "exact minimum complete test set");
  sc_faults->add_flag("--offline", offline,
                      "open registers and screen testable stuck-at sites");
  sc_faults->add_option("--free", free_vars,
                        "constant control line freed for offline testing");
  sc_faults->add_flag("--online", online, "run the check line over a stimulus");
  sc_faults->add_option("--stimulus", stim_path, "stimulus CSV for --online");
  sc_faults->add_option("--test-line", test_line, "check line for --online");
  sc_faults->add_option("--init", init_str, "register init bits for --online");
  sc_faults->add_flag("--json", json, "machine-readable output");

  auto* sc_catalog = app.add_subcommand("catalog", "shipped designs");
  sc_catalog->require_subcommand(1);
  auto* sc_cat_list = sc_catalog->add_subcommand("list", "list the designs");
  sc_cat_list->add_flag("--json", json, "machine-readable output");
  auto* sc_cat_emit =
      sc_catalog->add_subcommand("emit", "write every design as a netlist");
  sc_cat_emit->add_option("dir", emit_dir, "output directory")->required();
  auto* sc_cat_show = sc_catalog->add_subcommand("show", "print one netlist");
  sc_cat_show->add_option("name", name, "design name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc_check->parsed()) return run_check(file, json);
    if (sc_truth->parsed()) return run_truth(file, json);
    if (sc_sim->parsed())
      return run_sim(file, stim_path, cycles, init_str, trace_path, json);
    if (sc_metrics->parsed())
      return run_metrics(file, refs_path, design_key, json);
    if (sc_qcost->parsed())
      return run_qcost(file, do_optimize, budget, emit, json);
    if (sc_faults->parsed())
      return run_faults(file, model_str, inject_ids, testset_path, minimal,
                        offline, free_vars, online, stim_path, test_line,
                        init_str, json);
    if (sc_catalog->parsed()) {
      if (sc_cat_list->parsed()) return run_catalog_list(json);
      if (sc_cat_emit->parsed()) return run_catalog_emit(emit_dir);
      if (sc_cat_show->parsed()) return run_catalog_show(name);
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
