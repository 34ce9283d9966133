#pragma once

// Shared helpers for the test binaries: an exact unitary oracle over the
// Gaussian integers (entries are Gaussian integers divided by a power of
// two, so controlled square roots of X compose without rounding), a small
// JSON-schema checker, a deterministic random-circuit generator, and a
// wrapper that shells out to the command line tool.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "revseq/circuit.hpp"
#include "revseq/qcost.hpp"

namespace testsup {

// ----------------------------------------------------------- unitaries

struct gint {
  long long re = 0;
  long long im = 0;

  friend bool operator==(const gint&, const gint&) = default;
};

gint gmul(const gint& x, const gint& y);

// dim x dim matrix of Gaussian integers; the represented matrix is
// e / 2^scale. Unitaries built from NOT/CNOT/CV/CV+ always fit.
struct gmatrix {
  int dim = 0;
  int scale = 0;
  std::vector<gint> e;  // row-major

  gint& at(int r, int c) { return e[static_cast<std::size_t>(r * dim + c)]; }
  const gint& at(int r, int c) const {
    return e[static_cast<std::size_t>(r * dim + c)];
  }
};

gmatrix gm_identity(int dim);
gmatrix gm_mul(const gmatrix& a, const gmatrix& b);

// Canonical form: divides out common factors of two. Two equal matrices
// always normalize to identical representations.
void gm_normalize(gmatrix& m);
bool gm_equal(gmatrix a, gmatrix b);

// Matrix of one primitive acting on `n` lines. Basis indices follow the
// truth-table convention: line 0 is the most significant bit.
gmatrix matrix_of_primitive(const revseq::primitive& p, int n);

// Product matrix of the whole sequence, first element applied first.
gmatrix matrix_of_sequence(const std::vector<revseq::primitive>& seq, int n);

// Permutation matrix of a library gate placed on the given lines.
gmatrix matrix_of_gate(const revseq::gate_def& def,
                       const std::vector<int>& lines, int n);

// Permutation matrix from an explicit row mapping over n lines.
gmatrix matrix_of_permutation(const std::vector<std::uint32_t>& perm, int n);

// ---------------------------------------------------------- validation

// Checks a JSON value against the schema dialect used under docs/schema:
// type, properties, required, items, enum, additionalProperties.
bool schema_ok(const nlohmann::json& value, const nlohmann::json& schema,
               std::string& why);

// ------------------------------------------------------------- fuzzing

// Deterministic generator of structurally valid circuits: random lines,
// roles, gates, and feedback registers.
revseq::circuit random_circuit(std::mt19937& rng);

// ----------------------------------------------------------------- cli

struct cli_result {
  int status = -1;       // process exit code, -1 when spawning failed
  std::string out;       // captured stdout
};

// Runs the tool with the given (already quoted) argument string; stderr
// is discarded.
cli_result run_cli(const std::string& args);

std::string slurp_file(const std::string& path);
std::string write_temp_file(const std::string& stem,
                            const std::string& content);

}  // namespace testsup
