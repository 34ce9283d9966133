#include "revseq/catalog.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "revseq/error.hpp"
#include "revseq/netlist_io.hpp"

namespace revseq {

namespace {

void set_const(circuit& c, const std::string& var, bool one) {
  int i = c.find_var(var);
  if (i < 0) throw error("catalog: unknown line " + var);
  c.in_roles[static_cast<std::size_t>(i)] =
      one ? input_role::const_one : input_role::const_zero;
}

void set_garbage(circuit& c, const std::vector<std::string>& vars) {
  for (const auto& v : vars) {
    int i = c.find_var(v);
    if (i < 0) throw error("catalog: unknown line " + v);
    c.out_roles[static_cast<std::size_t>(i)] = output_role::garbage;
  }
}

void add_feedback(circuit& c, const std::string& source,
                  const std::string& sink, bool init = false) {
  int s = c.find_var(source);
  int k = c.find_var(sink);
  if (s < 0 || k < 0) throw error("catalog: unknown feedback line");
  c.out_roles[static_cast<std::size_t>(s)] = output_role::feedback_source;
  c.in_roles[static_cast<std::size_t>(k)] = input_role::feedback_sink;
  c.feedbacks.push_back({s, k, init});
}

metrics_report expect(long long gc, long long go, long long ci, long long qc,
                      long long a, long long b, long long d) {
  metrics_report m;
  m.gate_count = gc;
  m.garbage_outputs = go;
  m.constant_inputs = ci;
  m.quantum_cost = qc;
  m.hc = {a, b, d};
  return m;
}

catalog_entry d_ff_pos() {
  catalog_entry e;
  e.name = "d_ff_pos";
  e.title = "rising-edge D flip-flop";
  circuit c = circuit::make(e.name, {"clk", "d", "q", "f"});
  set_const(c, "f", false);
  c.add_gate(gate_op::PAREEK, {"clk", "q", "f", "d"});
  add_feedback(c, "f", "q");
  set_garbage(c, {"clk", "d"});
  e.circ = std::move(c);
  e.expected = expect(1, 2, 1, 7, 3, 2, 1);
  return e;
}

catalog_entry d_ff_neg() {
  catalog_entry e;
  e.name = "d_ff_neg";
  e.title = "falling-edge D flip-flop";
  circuit c = circuit::make(e.name, {"clk", "d", "q", "f"});
  set_const(c, "f", false);
  c.add_gate(gate_op::PAREEK, {"clk", "d", "f", "q"});
  add_feedback(c, "f", "q");
  set_garbage(c, {"clk", "q"});
  e.circ = std::move(c);
  e.expected = expect(1, 2, 1, 7, 3, 2, 1);
  return e;
}

catalog_entry d_ff_pos_qbar() {
  catalog_entry e;
  e.name = "d_ff_pos_qbar";
  e.title = "rising-edge D flip-flop with complemented output";
  circuit c = circuit::make(e.name, {"clk", "d", "q", "f", "w"});
  set_const(c, "f", false);
  set_const(c, "w", true);
  c.add_gate(gate_op::PAREEK, {"clk", "q", "f", "d"});
  c.add_gate(gate_op::F2G, {"q", "w", "clk"});
  add_feedback(c, "f", "q");
  set_garbage(c, {"clk", "d"});
  e.circ = std::move(c);
  e.expected = expect(2, 2, 2, 9, 5, 2, 1);
  return e;
}

catalog_entry d_ff_neg_qbar() {
  catalog_entry e;
  e.name = "d_ff_neg_qbar";
  e.title = "falling-edge D flip-flop with complemented output";
  circuit c = circuit::make(e.name, {"clk", "d", "q", "f", "w"});
  set_const(c, "f", false);
  set_const(c, "w", true);
  c.add_gate(gate_op::PAREEK, {"clk", "d", "f", "q"});
  c.add_gate(gate_op::F2G, {"d", "w", "clk"});
  add_feedback(c, "f", "q");
  set_garbage(c, {"clk", "q"});
  e.circ = std::move(c);
  e.expected = expect(2, 2, 2, 9, 5, 2, 1);
  return e;
}

catalog_entry rs_ff() {
  catalog_entry e;
  e.name = "rs_ff";
  e.title = "clocked RS flip-flop";
  circuit c = circuit::make(e.name, {"s", "r", "clk", "q", "t", "f"});
  set_const(c, "t", false);
  set_const(c, "f", true);
  c.add_gate(gate_op::NOT, {"q"});
  c.add_gate(gate_op::CNOT, {"s", "r"});
  c.add_gate(gate_op::TOFFOLI, {"r", "clk", "t"});
  c.add_gate(gate_op::PAREEK, {"t", "q", "f", "s"});
  add_feedback(c, "f", "q", true);
  set_garbage(c, {"s", "r", "clk", "t"});
  e.circ = std::move(c);
  e.expected = expect(4, 4, 2, 14, 5, 3, 2);
  e.expected_divergences = {"quantum_cost", "hc.d"};
  e.state_complement = true;
  return e;
}

catalog_entry jk_ff() {
  catalog_entry e;
  e.name = "jk_ff";
  e.title = "clocked JK flip-flop";
  circuit c = circuit::make(e.name, {"j", "k", "clk", "q", "t", "f"});
  set_const(c, "t", false);
  set_const(c, "f", false);
  c.add_gate(gate_op::CNOT, {"q", "t"});
  c.add_gate(gate_op::NOT, {"k"});
  c.add_gate(gate_op::FREDKIN, {"t", "j", "k"});
  c.add_gate(gate_op::PAREEK, {"clk", "q", "f", "j"});
  add_feedback(c, "f", "q");
  set_garbage(c, {"j", "k", "clk", "t"});
  e.circ = std::move(c);
  e.expected = expect(4, 4, 2, 14, 6, 6, 3);
  e.expected_divergences = {"quantum_cost"};
  return e;
}

catalog_entry t_ff() {
  catalog_entry e;
  e.name = "t_ff";
  e.title = "clocked T flip-flop";
  circuit c = circuit::make(e.name, {"t", "clk", "q", "f"});
  set_const(c, "f", false);
  c.add_gate(gate_op::CNOT, {"q", "t"});
  c.add_gate(gate_op::PAREEK, {"clk", "q", "f", "t"});
  add_feedback(c, "f", "q");
  set_garbage(c, {"t", "clk"});
  e.circ = std::move(c);
  e.expected = expect(2, 2, 1, 8, 4, 2, 1);
  return e;
}

catalog_entry ft_t_ff() {
  catalog_entry e;
  e.name = "ft_t_ff";
  e.title = "parity-preserving T flip-flop";
  circuit c = circuit::make(e.name, {"t", "clk", "q", "f", "qp"});
  set_const(c, "f", false);
  set_const(c, "qp", false);
  c.add_gate(gate_op::F2G, {"q", "t", "qp"});
  c.add_gate(gate_op::PAREEK, {"clk", "q", "f", "t"});
  add_feedback(c, "f", "q");
  set_garbage(c, {"t", "clk"});
  e.circ = std::move(c);
  e.expected = expect(2, 2, 2, 9, 5, 2, 1);
  return e;
}

catalog_entry ft_jk_ff() {
  catalog_entry e;
  e.name = "ft_jk_ff";
  e.title = "parity-preserving JK flip-flop";
  circuit c = circuit::make(
      e.name, {"j", "k", "clk", "q", "ni", "nz", "f", "qo", "qb"});
  set_const(c, "ni", true);
  set_const(c, "nz", false);
  set_const(c, "f", false);
  set_const(c, "qo", false);
  set_const(c, "qb", true);
  c.add_gate(gate_op::FREDKIN, {"k", "ni", "nz"});
  c.add_gate(gate_op::FREDKIN, {"q", "j", "ni"});
  c.add_gate(gate_op::PAREEK, {"clk", "q", "f", "j"});
  c.add_gate(gate_op::F2G, {"q", "qo", "qb"});
  add_feedback(c, "f", "q");
  set_garbage(c, {"j", "k", "clk", "q", "ni", "nz"});
  e.circ = std::move(c);
  e.expected = expect(4, 6, 5, 19, 9, 10, 3);
  return e;
}

catalog_entry ft_rs_ff() {
  catalog_entry e;
  e.name = "ft_rs_ff";
  e.title = "parity-preserving RS flip-flop";
  circuit c = circuit::make(
      e.name, {"s", "r", "clk", "q", "a", "b", "f", "qo", "qb"});
  set_const(c, "a", false);
  set_const(c, "b", false);
  set_const(c, "f", false);
  set_const(c, "qo", false);
  set_const(c, "qb", true);
  c.add_gate(gate_op::F2G, {"s", "r", "a"});
  c.add_gate(gate_op::FREDKIN, {"clk", "r", "b"});
  c.add_gate(gate_op::PAREEK, {"b", "q", "f", "s"});
  c.add_gate(gate_op::FREDKIN, {"q", "qo", "qb"});
  add_feedback(c, "f", "q");
  set_garbage(c, {"s", "r", "clk", "q", "a", "b"});
  e.circ = std::move(c);
  e.expected = expect(4, 6, 5, 19, 9, 10, 3);
  return e;
}

catalog_entry ms_d_ff() {
  catalog_entry e;
  e.name = "ms_d_ff";
  e.title = "master-slave D flip-flop";
  circuit c = circuit::make(e.name, {"clk", "d", "qm", "qs", "fm", "fs"});
  set_const(c, "fm", false);
  set_const(c, "fs", false);
  c.add_gate(gate_op::PAREEK, {"clk", "qm", "fm", "d"});
  c.add_gate(gate_op::PAREEK, {"clk", "qm", "fs", "qs"});
  add_feedback(c, "fm", "qm");
  add_feedback(c, "fs", "qs");
  set_garbage(c, {"clk", "d", "qs"});
  e.circ = std::move(c);
  e.expected = expect(2, 3, 2, 14, 6, 4, 2);
  return e;
}

catalog_entry det_d_ff() {
  catalog_entry e;
  e.name = "det_d_ff";
  e.title = "dual-edge-triggered D flip-flop";
  circuit c = circuit::make(
      e.name, {"clk", "d", "dp", "dn", "qp", "qn", "fp", "fn"});
  set_const(c, "dp", false);
  set_const(c, "dn", true);
  set_const(c, "fp", false);
  set_const(c, "fn", false);
  c.add_gate(gate_op::FREDKIN, {"d", "dp", "dn"});
  c.add_gate(gate_op::PAREEK, {"clk", "qp", "fp", "d"});
  c.add_gate(gate_op::PAREEK, {"clk", "dp", "fn", "qn"});
  c.add_gate(gate_op::FREDKIN, {"clk", "qp", "dp"});
  add_feedback(c, "fp", "qp");
  add_feedback(c, "fn", "qn");
  set_garbage(c, {"clk", "d", "dp", "dn", "qn"});
  e.circ = std::move(c);
  e.expected = expect(4, 5, 4, 24, 10, 12, 4);
  return e;
}

catalog_entry sipo_4() {
  catalog_entry e;
  e.name = "sipo_4";
  e.title = "4-bit serial-in parallel-out shift register";
  circuit c = circuit::make(
      e.name, {"si", "clk", "q1", "q2", "q3", "q4", "f1", "f2", "f3", "f4",
               "x1", "x2", "x3"});
  for (const char* v : {"f1", "f2", "f3", "f4", "x1", "x2", "x3"})
    set_const(c, v, false);
  c.add_gate(gate_op::CNOT, {"q1", "x1"});
  c.add_gate(gate_op::CNOT, {"q2", "x2"});
  c.add_gate(gate_op::CNOT, {"q3", "x3"});
  c.add_gate(gate_op::PAREEK, {"clk", "q1", "f1", "si"});
  c.add_gate(gate_op::PAREEK, {"clk", "q2", "f2", "x1"});
  c.add_gate(gate_op::PAREEK, {"clk", "q3", "f3", "x2"});
  c.add_gate(gate_op::PAREEK, {"clk", "q4", "f4", "x3"});
  add_feedback(c, "f1", "q1");
  add_feedback(c, "f2", "q2");
  add_feedback(c, "f3", "q3");
  add_feedback(c, "f4", "q4");
  set_garbage(c, {"si", "clk", "x1", "x2", "x3"});
  e.circ = std::move(c);
  e.expected = expect(7, 5, 7, 31, 15, 8, 4);
  return e;
}

catalog_entry piso_4() {
  catalog_entry e;
  e.name = "piso_4";
  e.title = "4-bit parallel-in serial-out shift register";
  circuit c = circuit::make(
      e.name, {"clk", "i1", "i2", "i3", "i4", "z", "w", "r1", "r2", "r3"});
  set_const(c, "z", false);
  set_const(c, "w", true);
  c.add_gate(gate_op::FREDKIN, {"clk", "z", "i1"});
  c.add_gate(gate_op::FREDKIN, {"clk", "r1", "i2"});
  c.add_gate(gate_op::FREDKIN, {"clk", "r2", "i3"});
  c.add_gate(gate_op::FREDKIN, {"clk", "r3", "i4"});
  c.add_gate(gate_op::PAREEK, {"w", "i1", "clk", "z"});
  c.add_gate(gate_op::PAREEK, {"w", "i2", "clk", "r1"});
  c.add_gate(gate_op::PAREEK, {"w", "i3", "clk", "r2"});
  c.add_gate(gate_op::PAREEK, {"w", "i4", "clk", "r3"});
  add_feedback(c, "i1", "r1");
  add_feedback(c, "i2", "r2");
  add_feedback(c, "i3", "r3");
  set_garbage(c, {"clk", "z", "w", "r1", "r2", "r3"});
  e.circ = std::move(c);
  e.expected = expect(8, 6, 2, 48, 20, 24, 8);
  e.expected_divergences = {"garbage_outputs", "constant_inputs", "hc.a"};
  return e;
}

catalog_entry johnson_4() {
  catalog_entry e;
  e.name = "johnson_4";
  e.title = "4-bit Johnson counter";
  circuit c = circuit::make(
      e.name, {"clk", "q1", "q2", "q3", "q4", "f1", "f2", "f3", "f4", "x1",
               "x2", "x3", "x4"});
  for (const char* v : {"f1", "f2", "f3", "f4", "x1", "x2", "x3"})
    set_const(c, v, false);
  set_const(c, "x4", true);
  c.add_gate(gate_op::CNOT, {"q1", "x1"});
  c.add_gate(gate_op::CNOT, {"q2", "x2"});
  c.add_gate(gate_op::CNOT, {"q3", "x3"});
  c.add_gate(gate_op::CNOT, {"q4", "x4"});
  c.add_gate(gate_op::PAREEK, {"clk", "q1", "f1", "x4"});
  c.add_gate(gate_op::PAREEK, {"clk", "q2", "f2", "x1"});
  c.add_gate(gate_op::PAREEK, {"clk", "q3", "f3", "x2"});
  c.add_gate(gate_op::PAREEK, {"clk", "q4", "f4", "x3"});
  add_feedback(c, "f1", "q1");
  add_feedback(c, "f2", "q2");
  add_feedback(c, "f3", "q3");
  add_feedback(c, "f4", "q4");
  set_garbage(c, {"clk", "x1", "x2", "x3", "x4"});
  e.circ = std::move(c);
  e.expected = expect(8, 5, 8, 32, 16, 8, 4);
  return e;
}

catalog_entry offline_d_ff_pos() {
  catalog_entry e;
  e.name = "offline_d_ff_pos";
  e.title = "rising-edge D flip-flop with offline test points";
  circuit c = circuit::make(e.name, {"clk", "d", "q", "f", "t1", "t2"});
  set_const(c, "f", false);
  set_const(c, "t1", false);
  set_const(c, "t2", true);
  c.add_gate(gate_op::PAREEK, {"clk", "q", "f", "d"});
  c.add_gate(gate_op::FREDKIN, {"q", "t1", "t2"});
  add_feedback(c, "f", "q");
  set_garbage(c, {"clk", "d", "q"});
  e.circ = std::move(c);
  e.expected = expect(2, 3, 3, 12, 5, 6, 2);
  e.offline_control_lines = {"t1", "t2"};
  return e;
}

catalog_entry offline_d_ff_neg() {
  catalog_entry e;
  e.name = "offline_d_ff_neg";
  e.title = "falling-edge D flip-flop with offline test points";
  circuit c = circuit::make(e.name, {"clk", "d", "q", "f", "t1", "t2"});
  set_const(c, "f", false);
  set_const(c, "t1", false);
  set_const(c, "t2", true);
  c.add_gate(gate_op::PAREEK, {"clk", "d", "f", "q"});
  c.add_gate(gate_op::FREDKIN, {"d", "t1", "t2"});
  add_feedback(c, "f", "q");
  set_garbage(c, {"clk", "d", "q"});
  e.circ = std::move(c);
  e.expected = expect(2, 3, 3, 12, 5, 6, 2);
  e.offline_control_lines = {"t1", "t2"};
  return e;
}

catalog_entry online_d_ff_pos() {
  catalog_entry e;
  e.name = "online_d_ff_pos";
  e.title = "rising-edge D flip-flop with an online check line";
  circuit c = circuit::make(e.name, {"clk", "d", "q", "f", "t"});
  set_const(c, "f", false);
  set_const(c, "t", false);
  c.add_gate(gate_op::PAREEK, {"clk", "q", "f", "d"});
  c.add_gate(gate_op::CNOT, {"q", "t"});
  c.add_gate(gate_op::CNOT, {"f", "t"});
  c.add_gate(gate_op::CNOT, {"d", "t"});
  c.add_gate(gate_op::CNOT, {"t", "d"});
  add_feedback(c, "f", "q");
  set_garbage(c, {"clk", "t"});
  e.circ = std::move(c);
  e.expected = expect(5, 2, 2, 11, 7, 2, 1);
  e.online_test_line = "d";
  return e;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "d_ff_pos",  "d_ff_neg",  "d_ff_pos_qbar", "d_ff_neg_qbar",
      "rs_ff",     "jk_ff",     "t_ff",          "ft_t_ff",
      "ft_jk_ff",  "ft_rs_ff",  "ms_d_ff",       "det_d_ff",
      "sipo_4",    "piso_4",    "johnson_4",     "offline_d_ff_pos",
      "offline_d_ff_neg", "online_d_ff_pos"};
  return names;
}

catalog_entry build_catalog_entry(const std::string& name) {
  if (name == "d_ff_pos") return d_ff_pos();
  if (name == "d_ff_neg") return d_ff_neg();
  if (name == "d_ff_pos_qbar") return d_ff_pos_qbar();
  if (name == "d_ff_neg_qbar") return d_ff_neg_qbar();
  if (name == "rs_ff") return rs_ff();
  if (name == "jk_ff") return jk_ff();
  if (name == "t_ff") return t_ff();
  if (name == "ft_t_ff") return ft_t_ff();
  if (name == "ft_jk_ff") return ft_jk_ff();
  if (name == "ft_rs_ff") return ft_rs_ff();
  if (name == "ms_d_ff") return ms_d_ff();
  if (name == "det_d_ff") return det_d_ff();
  if (name == "sipo_4") return sipo_4();
  if (name == "piso_4") return piso_4();
  if (name == "johnson_4") return johnson_4();
  if (name == "offline_d_ff_pos") return offline_d_ff_pos();
  if (name == "offline_d_ff_neg") return offline_d_ff_neg();
  if (name == "online_d_ff_pos") return online_d_ff_pos();
  throw error("no catalog entry named " + name);
}

std::vector<catalog_entry> build_catalog() {
  std::vector<catalog_entry> out;
  for (const auto& n : catalog_names()) out.push_back(build_catalog_entry(n));
  return out;
}

void emit_catalog(const std::string& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json index;
  index["circuits"] = nlohmann::json::array();
  for (const auto& e : build_catalog()) {
    std::string file = e.name + ".rev";
    write_netlist_file(e.circ, dir + "/" + file);
    nlohmann::json row;
    row["name"] = e.name;
    row["title"] = e.title;
    row["file"] = file;
    row["lines"] = e.circ.width();
    row["gates"] = static_cast<int>(e.circ.gates.size());
    index["circuits"].push_back(row);
  }
  std::ofstream out(dir + "/index.json", std::ios::binary);
  if (!out) throw error("cannot write catalog index in " + dir);
  out << index.dump(2) << "\n";
}

}  // namespace revseq
