#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revseq/circuit.hpp"
#include "revseq/metrics.hpp"

namespace revseq {

// A shipped sequential design together with its frozen cost figures and
// the metadata the testability flows need.
struct catalog_entry {
  std::string name;
  std::string title;
  circuit circ;

  // Cost figures the metrics engine is expected to reproduce.
  metrics_report expected;

  // Fields where the freshly computed figures are known to disagree with
  // the corresponding row of the reference data set.
  std::vector<std::string> expected_divergences;

  // The register bits store the complement of the visible state.
  bool state_complement = false;

  // Check line that flags corrupted cycles while the design runs.
  std::optional<std::string> online_test_line;

  // Constant control lines freed when exercising fault sites offline.
  std::vector<std::string> offline_control_lines;
};

const std::vector<std::string>& catalog_names();
catalog_entry build_catalog_entry(const std::string& name);
std::vector<catalog_entry> build_catalog();

// Writes <name>.rev for every entry plus an index.json manifest.
void emit_catalog(const std::string& dir);

}  // namespace revseq
