#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revseq/circuit.hpp"

namespace revseq {

struct metrics_report {
  long long gate_count = 0;
  long long garbage_outputs = 0;
  long long constant_inputs = 0;
  long long quantum_cost = 0;
  hw_complexity hc;

  friend bool operator==(const metrics_report&,
                         const metrics_report&) = default;
};

metrics_report compute_metrics(const circuit& c);

// Percentage gain of `proposed` over `existing`: 100 - (proposed/existing)*100.
double improvement_raw(long long proposed, long long existing);

// Renders the improvement at a fixed precision using exact integer
// arithmetic: 0 decimals rounds half away from zero, 1 decimal truncates.
std::string render_improvement(long long proposed, long long existing,
                               int decimals);

// Integer when exact, otherwise one truncated decimal.
std::string render_improvement_auto(long long proposed, long long existing);

// Component-wise dominance verdict: "Improved" when no component grows
// and at least one shrinks; "Equal" when identical; otherwise
// "Not Improved".
std::string hc_verdict(const hw_complexity& ours, const hw_complexity& ref);

struct reference_row {
  std::string key;      // stable citation key, e.g. "rice_2006"
  std::string display;  // row label, e.g. "J. E. Rice"
  metrics_report m;
  // Improvement cells as printed in the source table (audit data); keys
  // gc/go/ci/qc. A value containing '.' marks a one-decimal cell.
  std::map<std::string, std::string> printed;
};

struct design_reference_set {
  std::string design;
  std::string circuit_name;  // catalog entry whose metrics the rows compare
  std::vector<reference_row> rows;
  std::optional<metrics_report> published_row;
};

std::map<std::string, design_reference_set> load_reference_data(
    const std::string& path);

struct divergence {
  std::string field;  // gate_count | garbage_outputs | constant_inputs |
                      // quantum_cost | hc.a | hc.b | hc.d
  long long computed = 0;
  long long published = 0;
};

std::vector<divergence> diverging_fields(const metrics_report& computed,
                                         const metrics_report& published);

struct comparison_cell {
  double raw = 0.0;
  std::string rendered;
};

struct comparison_row {
  std::string key;
  std::string display;
  comparison_cell gc, go, ci, qc;
  std::string hc;
};

// Improvement of `ours` against one reference row. Cell precision
// follows the row's printed template when available.
comparison_row compare_against(const metrics_report& ours,
                               const reference_row& ref);

}  // namespace revseq
