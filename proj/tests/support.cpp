#include "support.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "revseq/gate.hpp"

namespace testsup {

// ----------------------------------------------------------- unitaries

gint gmul(const gint& x, const gint& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

gmatrix gm_identity(int dim) {
  gmatrix m;
  m.dim = dim;
  m.scale = 0;
  m.e.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
             gint{});
  for (int i = 0; i < dim; ++i) m.at(i, i) = {1, 0};
  return m;
}

gmatrix gm_mul(const gmatrix& a, const gmatrix& b) {
  if (a.dim != b.dim) throw std::logic_error("matrix dimension mismatch");
  gmatrix m;
  m.dim = a.dim;
  m.scale = a.scale + b.scale;
  m.e.assign(a.e.size(), gint{});
  for (int r = 0; r < a.dim; ++r)
    for (int k = 0; k < a.dim; ++k) {
      const gint& x = a.at(r, k);
      if (x.re == 0 && x.im == 0) continue;
      for (int c = 0; c < a.dim; ++c) {
        gint p = gmul(x, b.at(k, c));
        m.at(r, c).re += p.re;
        m.at(r, c).im += p.im;
      }
    }
  gm_normalize(m);
  return m;
}

void gm_normalize(gmatrix& m) {
  while (m.scale > 0) {
    bool all_even = true;
    for (const auto& x : m.e)
      if ((x.re & 1) || (x.im & 1)) {
        all_even = false;
        break;
      }
    if (!all_even) break;
    for (auto& x : m.e) {
      x.re /= 2;
      x.im /= 2;
    }
    m.scale--;
  }
}

bool gm_equal(gmatrix a, gmatrix b) {
  gm_normalize(a);
  gm_normalize(b);
  return a.dim == b.dim && a.scale == b.scale && a.e == b.e;
}

namespace {

int bit_of(int idx, int line, int n) { return (idx >> (n - 1 - line)) & 1; }

int with_bit(int idx, int line, int n, int b) {
  int mask = 1 << (n - 1 - line);
  return b ? (idx | mask) : (idx & ~mask);
}

// 2x2 single-wire blocks, each divided by 2^scale.
struct block2 {
  gint u[2][2];
  int scale;
};

block2 block_x() { return {{{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}}, 0}; }
block2 block_v() { return {{{{1, 1}, {1, -1}}, {{1, -1}, {1, 1}}}, 1}; }
block2 block_vd() { return {{{{1, -1}, {1, 1}}, {{1, 1}, {1, -1}}}, 1}; }

gmatrix apply_block(const block2& u, int control, int target, int n) {
  int dim = 1 << n;
  gmatrix m;
  m.dim = dim;
  m.scale = u.scale;
  m.e.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
             gint{});
  long long unit = 1LL << u.scale;
  for (int s = 0; s < dim; ++s) {
    if (control >= 0 && bit_of(s, control, n) == 0) {
      m.at(s, s) = {unit, 0};
      continue;
    }
    int b = bit_of(s, target, n);
    for (int bp = 0; bp < 2; ++bp) {
      const gint& amp = u.u[bp][b];
      if (amp.re == 0 && amp.im == 0) continue;
      m.at(with_bit(s, target, n, bp), s) = amp;
    }
  }
  gm_normalize(m);
  return m;
}

}  // namespace

gmatrix matrix_of_primitive(const revseq::primitive& p, int n) {
  using revseq::prim_kind;
  switch (p.kind) {
    case prim_kind::not_gate:
      return apply_block(block_x(), -1, p.target, n);
    case prim_kind::cnot:
      return apply_block(block_x(), p.control, p.target, n);
    case prim_kind::cv:
      return apply_block(block_v(), p.control, p.target, n);
    case prim_kind::cvd:
      return apply_block(block_vd(), p.control, p.target, n);
    case prim_kind::box:
      return matrix_of_sequence(p.members, n);
  }
  throw std::logic_error("unhandled primitive kind");
}

gmatrix matrix_of_sequence(const std::vector<revseq::primitive>& seq, int n) {
  gmatrix m = gm_identity(1 << n);
  for (const auto& p : seq) m = gm_mul(matrix_of_primitive(p, n), m);
  return m;
}

gmatrix matrix_of_gate(const revseq::gate_def& def,
                       const std::vector<int>& lines, int n) {
  int dim = 1 << n;
  gmatrix m;
  m.dim = dim;
  m.scale = 0;
  m.e.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
             gint{});
  for (int s = 0; s < dim; ++s) {
    std::uint32_t row = 0;
    for (std::size_t k = 0; k < lines.size(); ++k)
      row = (row << 1) |
            static_cast<std::uint32_t>(bit_of(s, lines[k], n));
    std::uint32_t mapped = def.perm[row];
    int out = s;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      int b = (mapped >> (lines.size() - 1 - k)) & 1u;
      out = with_bit(out, lines[k], n, b);
    }
    m.at(out, s) = {1, 0};
  }
  return m;
}

gmatrix matrix_of_permutation(const std::vector<std::uint32_t>& perm, int n) {
  int dim = 1 << n;
  gmatrix m;
  m.dim = dim;
  m.scale = 0;
  m.e.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
             gint{});
  for (int s = 0; s < dim; ++s)
    m.at(static_cast<int>(perm[static_cast<std::size_t>(s)]), s) = {1, 0};
  return m;
}

// ---------------------------------------------------------- validation

namespace {

bool type_ok(const nlohmann::json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "boolean") return v.is_boolean();
  if (t == "number") return v.is_number();
  return false;
}

bool schema_ok_at(const nlohmann::json& v, const nlohmann::json& s,
                  const std::string& where, std::string& why) {
  if (s.contains("type") &&
      !type_ok(v, s.at("type").get<std::string>())) {
    why = where + ": expected type " + s.at("type").get<std::string>();
    return false;
  }
  if (s.contains("enum")) {
    bool hit = false;
    for (const auto& cand : s.at("enum"))
      if (cand == v) {
        hit = true;
        break;
      }
    if (!hit) {
      why = where + ": value not in enum: " + v.dump();
      return false;
    }
  }
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto& key : s.at("required"))
        if (!v.contains(key.get<std::string>())) {
          why = where + ": missing required key " + key.get<std::string>();
          return false;
        }
    const nlohmann::json* props =
        s.contains("properties") ? &s.at("properties") : nullptr;
    for (const auto& [key, val] : v.items()) {
      if (props && props->contains(key)) {
        if (!schema_ok_at(val, props->at(key), where + "." + key, why))
          return false;
        continue;
      }
      if (s.contains("additionalProperties")) {
        const auto& ap = s.at("additionalProperties");
        if (ap.is_boolean() && !ap.get<bool>()) {
          why = where + ": unexpected key " + key;
          return false;
        }
        if (ap.is_object() &&
            !schema_ok_at(val, ap, where + "." + key, why))
          return false;
      }
    }
  }
  if (v.is_array() && s.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!schema_ok_at(v[i], s.at("items"),
                        where + "[" + std::to_string(i) + "]", why))
        return false;
  }
  return true;
}

}  // namespace

bool schema_ok(const nlohmann::json& value, const nlohmann::json& schema,
               std::string& why) {
  why.clear();
  return schema_ok_at(value, schema, "$", why);
}

// ------------------------------------------------------------- fuzzing

revseq::circuit random_circuit(std::mt19937& rng) {
  using revseq::circuit;
  using revseq::gate_op;
  using revseq::input_role;
  using revseq::output_role;

  auto pick = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  int width = pick(1, 8);
  circuit c;
  c.name = "rnd" + std::to_string(pick(0, 999));
  for (int i = 0; i < width; ++i) {
    std::string v(1, static_cast<char>('a' + i));
    if (pick(0, 1)) v += std::to_string(pick(0, 9));
    c.vars.push_back(v);
  }
  c.in_roles.assign(static_cast<std::size_t>(width), input_role::primary);
  c.out_roles.assign(static_cast<std::size_t>(width), output_role::primary);
  for (int i = 0; i < width; ++i) {
    int r = pick(0, 9);
    if (r >= 8)
      c.in_roles[static_cast<std::size_t>(i)] = input_role::const_one;
    else if (r >= 6)
      c.in_roles[static_cast<std::size_t>(i)] = input_role::const_zero;
    if (pick(0, 2) == 0)
      c.out_roles[static_cast<std::size_t>(i)] = output_role::garbage;
  }

  // Feedback registers over pairwise-distinct lines.
  int max_fb = width / 2;
  int n_fb = max_fb > 0 ? pick(0, std::min(2, max_fb)) : 0;
  if (n_fb > 0) {
    std::vector<int> lines(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) lines[static_cast<std::size_t>(i)] = i;
    std::shuffle(lines.begin(), lines.end(), rng);
    for (int k = 0; k < n_fb; ++k) {
      int sink = lines[static_cast<std::size_t>(2 * k)];
      int source = lines[static_cast<std::size_t>(2 * k + 1)];
      c.in_roles[static_cast<std::size_t>(sink)] = input_role::feedback_sink;
      c.out_roles[static_cast<std::size_t>(source)] =
          output_role::feedback_source;
      revseq::feedback_binding fb;
      fb.source = source;
      fb.sink = sink;
      fb.init = pick(0, 1) == 1;
      c.feedbacks.push_back(fb);
    }
  }

  const auto& lib = revseq::gate_library();
  int n_gates = pick(0, 12);
  for (int g = 0; g < n_gates; ++g) {
    std::vector<const revseq::gate_def*> fits;
    for (const auto& def : lib)
      if (def.arity <= width) fits.push_back(&def);
    if (fits.empty()) break;
    const revseq::gate_def* def =
        fits[static_cast<std::size_t>(pick(0, static_cast<int>(fits.size()) - 1))];
    std::vector<int> lines(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) lines[static_cast<std::size_t>(i)] = i;
    std::shuffle(lines.begin(), lines.end(), rng);
    lines.resize(static_cast<std::size_t>(def->arity));
    std::vector<std::string> port_vars;
    for (int ln : lines)
      port_vars.push_back(c.vars[static_cast<std::size_t>(ln)]);
    c.add_gate(def->op, port_vars);
  }
  return c;
}

// ----------------------------------------------------------------- cli

cli_result run_cli(const std::string& args) {
  cli_result res;
  std::string cmd = std::string(REVSEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
    res.out.append(buf, got);
  int rc = pclose(pipe);
  if (rc >= 0 && WIFEXITED(rc)) res.status = WEXITSTATUS(rc);
  return res;
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_temp_file(const std::string& stem,
                            const std::string& content) {
  std::string path = std::string("/tmp/revseq_test_") + stem;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace testsup
