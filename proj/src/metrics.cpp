#include "revseq/metrics.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "revseq/error.hpp"
#include "revseq/gate.hpp"

namespace revseq {

metrics_report compute_metrics(const circuit& c) {
  metrics_report r;
  r.gate_count = static_cast<long long>(c.gates.size());
  for (const auto& g : c.gates) {
    const gate_def& def = gate_info(g.op);
    r.quantum_cost += def.quantum_cost;
    r.hc += def.hc;
  }
  for (auto role : c.in_roles)
    if (role == input_role::const_zero || role == input_role::const_one)
      r.constant_inputs++;
  for (auto role : c.out_roles)
    if (role == output_role::garbage) r.garbage_outputs++;
  return r;
}

double improvement_raw(long long proposed, long long existing) {
  if (existing <= 0)
    throw error("improvement undefined: baseline value must be positive");
  return 100.0 - (static_cast<double>(proposed) / existing) * 100.0;
}

namespace {

// 100*(e-p)/e rounded to `decimals` with exact integer arithmetic.
std::string render_scaled(long long p, long long e, int decimals) {
  if (e <= 0)
    throw error("improvement undefined: baseline value must be positive");
  if (decimals == 0) {
    long long num = 100 * (e - p);
    long long den = e;
    long long r;
    if (num >= 0)
      r = (2 * num + den) / (2 * den);  // round half up
    else
      r = -((2 * (-num) + den) / (2 * den));
    return std::to_string(r);
  }
  // one decimal, truncated toward zero
  long long v = 1000 * (e - p) / e;
  std::string sign = v < 0 ? "-" : "";
  long long a = v < 0 ? -v : v;
  return sign + std::to_string(a / 10) + "." + std::to_string(a % 10);
}

}  // namespace

std::string render_improvement(long long proposed, long long existing,
                               int decimals) {
  return render_scaled(proposed, existing, decimals);
}

std::string render_improvement_auto(long long proposed, long long existing) {
  if (existing <= 0)
    throw error("improvement undefined: baseline value must be positive");
  if ((100 * (existing - proposed)) % existing == 0)
    return render_scaled(proposed, existing, 0);
  return render_scaled(proposed, existing, 1);
}

std::string hc_verdict(const hw_complexity& ours, const hw_complexity& ref) {
  if (ours == ref) return "Equal";
  bool none_worse =
      ours.a <= ref.a && ours.b <= ref.b && ours.d <= ref.d;
  bool some_better =
      ours.a < ref.a || ours.b < ref.b || ours.d < ref.d;
  if (none_worse && some_better) return "Improved";
  return "Not Improved";
}

namespace {

metrics_report report_from_json(const nlohmann::json& j) {
  metrics_report m;
  m.gate_count = j.at("gc").get<long long>();
  m.garbage_outputs = j.at("go").get<long long>();
  m.constant_inputs = j.at("ci").get<long long>();
  m.quantum_cost = j.at("qc").get<long long>();
  const auto& h = j.at("hc");
  m.hc.a = h.at("a").get<long long>();
  m.hc.b = h.at("b").get<long long>();
  m.hc.d = h.at("d").get<long long>();
  return m;
}

}  // namespace

std::map<std::string, design_reference_set> load_reference_data(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open reference data file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw error("malformed reference data: " + std::string(ex.what()));
  }
  std::map<std::string, design_reference_set> out;
  for (const auto& [design, body] : j.at("designs").items()) {
    design_reference_set set;
    set.design = design;
    set.circuit_name = body.value("circuit", design);
    if (body.contains("references")) {
      for (const auto& row : body.at("references")) {
        reference_row r;
        r.key = row.at("citation").get<std::string>();
        r.display = row.at("display").get<std::string>();
        r.m = report_from_json(row);
        if (row.contains("printed_improvement"))
          for (const auto& [k, v] : row.at("printed_improvement").items())
            r.printed[k] = v.get<std::string>();
        set.rows.push_back(std::move(r));
      }
    }
    if (body.contains("published_row"))
      set.published_row = report_from_json(body.at("published_row"));
    out[design] = std::move(set);
  }
  return out;
}

std::vector<divergence> diverging_fields(const metrics_report& computed,
                                         const metrics_report& published) {
  std::vector<divergence> out;
  auto check = [&](const char* name, long long c, long long p) {
    if (c != p) out.push_back({name, c, p});
  };
  check("gate_count", computed.gate_count, published.gate_count);
  check("garbage_outputs", computed.garbage_outputs,
        published.garbage_outputs);
  check("constant_inputs", computed.constant_inputs,
        published.constant_inputs);
  check("quantum_cost", computed.quantum_cost, published.quantum_cost);
  check("hc.a", computed.hc.a, published.hc.a);
  check("hc.b", computed.hc.b, published.hc.b);
  check("hc.d", computed.hc.d, published.hc.d);
  return out;
}

namespace {

comparison_cell make_cell(long long proposed, long long existing,
                          const std::map<std::string, std::string>& printed,
                          const std::string& key) {
  comparison_cell cell;
  cell.raw = improvement_raw(proposed, existing);
  auto it = printed.find(key);
  if (it != printed.end()) {
    int decimals = it->second.find('.') != std::string::npos ? 1 : 0;
    cell.rendered = render_improvement(proposed, existing, decimals);
  } else {
    cell.rendered = render_improvement_auto(proposed, existing);
  }
  return cell;
}

}  // namespace

comparison_row compare_against(const metrics_report& ours,
                               const reference_row& ref) {
  comparison_row row;
  row.key = ref.key;
  row.display = ref.display;
  row.gc = make_cell(ours.gate_count, ref.m.gate_count, ref.printed, "gc");
  row.go = make_cell(ours.garbage_outputs, ref.m.garbage_outputs, ref.printed,
                     "go");
  row.ci = make_cell(ours.constant_inputs, ref.m.constant_inputs, ref.printed,
                     "ci");
  row.qc =
      make_cell(ours.quantum_cost, ref.m.quantum_cost, ref.printed, "qc");
  row.hc = hc_verdict(ours.hc, ref.m.hc);
  return row;
}

}  // namespace revseq
