#include "revseq/netlist_io.hpp"

#include <fstream>
#include <sstream>

namespace revseq {

namespace {

struct token {
  std::string text;
  int col;  // 1-based start column
};

// Splits one physical line into whitespace-separated tokens, dropping
// everything from '#' onward.
std::vector<token> tokenize(const std::string& line) {
  std::vector<token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

struct pending_feedback {
  std::string src;
  std::string sink;
  int line_no;
};

}  // namespace

circuit parse_netlist(const std::string& text) {
  circuit c;
  c.name = "main";

  bool saw_name = false, saw_lines = false, saw_vars = false;
  bool saw_inputs = false, saw_outputs = false, saw_init = false;
  bool in_gates = false, saw_begin = false, saw_end = false;
  int declared_lines = -1;
  std::string input_mask, output_mask, init_bits;
  int input_mask_line = 0, output_mask_line = 0, init_line = 0;
  std::vector<pending_feedback> pending;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const token& head = toks[0];

    if (saw_end)
      throw parse_error(line_no, head.col, "content after .end");

    if (in_gates) {
      if (head.text == ".end") {
        in_gates = false;
        saw_end = true;
        continue;
      }
      const gate_def* def = find_gate_by_token(head.text);
      if (!def)
        throw parse_error(line_no, head.col,
                          "unknown gate token '" + head.text + "'");
      if (static_cast<int>(toks.size()) - 1 != def->arity)
        throw parse_error(line_no, head.col,
                          def->label + " takes " +
                              std::to_string(def->arity) + " line symbols");
      gate_inst g;
      g.op = def->op;
      for (int p = 1; p <= def->arity; ++p) {
        int idx = c.find_var(toks[static_cast<std::size_t>(p)].text);
        if (idx < 0)
          throw parse_error(line_no, toks[static_cast<std::size_t>(p)].col,
                            "unknown line symbol '" +
                                toks[static_cast<std::size_t>(p)].text + "'");
        g.lines.push_back(idx);
      }
      c.gates.push_back(std::move(g));
      continue;
    }

    if (head.text == ".name") {
      if (saw_name) throw parse_error(line_no, head.col, "duplicate .name");
      if (toks.size() != 2)
        throw parse_error(line_no, head.col, ".name takes one identifier");
      c.name = toks[1].text;
      saw_name = true;
    } else if (head.text == ".lines") {
      if (saw_lines) throw parse_error(line_no, head.col, "duplicate .lines");
      if (toks.size() != 2)
        throw parse_error(line_no, head.col, ".lines takes one count");
      try {
        declared_lines = std::stoi(toks[1].text);
      } catch (...) {
        throw parse_error(line_no, toks[1].col, "bad line count");
      }
      if (declared_lines < 0 || declared_lines > bitvec::max_width)
        throw parse_error(line_no, toks[1].col, "line count out of range");
      saw_lines = true;
    } else if (head.text == ".vars") {
      if (saw_vars) throw parse_error(line_no, head.col, "duplicate .vars");
      for (std::size_t i = 1; i < toks.size(); ++i)
        c.vars.push_back(toks[i].text);
      saw_vars = true;
    } else if (head.text == ".inputs" || head.text == ".constants") {
      if (saw_inputs)
        throw parse_error(line_no, head.col, "duplicate input mask");
      if (toks.size() != 2)
        throw parse_error(line_no, head.col, head.text + " takes one mask");
      input_mask = toks[1].text;
      input_mask_line = line_no;
      saw_inputs = true;
    } else if (head.text == ".outputs") {
      if (saw_outputs)
        throw parse_error(line_no, head.col, "duplicate .outputs");
      if (toks.size() != 2)
        throw parse_error(line_no, head.col, ".outputs takes one mask");
      output_mask = toks[1].text;
      output_mask_line = line_no;
      saw_outputs = true;
    } else if (head.text == ".feedback") {
      if (toks.size() != 4 || toks[2].text != "->")
        throw parse_error(line_no, head.col,
                          ".feedback expects '<src> -> <sink>'");
      pending.push_back({toks[1].text, toks[3].text, line_no});
    } else if (head.text == ".init") {
      if (saw_init) throw parse_error(line_no, head.col, "duplicate .init");
      if (toks.size() != 2)
        throw parse_error(line_no, head.col, ".init takes one bit string");
      init_bits = toks[1].text;
      init_line = line_no;
      saw_init = true;
    } else if (head.text == ".begin") {
      if (saw_begin) throw parse_error(line_no, head.col, "duplicate .begin");
      in_gates = true;
      saw_begin = true;
    } else {
      throw parse_error(line_no, head.col,
                        "unknown directive '" + head.text + "'");
    }

    // Late .vars would leave earlier masks unvalidated; keep declaration
    // order strict enough that every mask can be checked when seen.
  }

  if (saw_begin && !saw_end)
    throw parse_error(line_no, 1, "missing .end");
  if (!saw_begin)
    throw parse_error(line_no, 1, "missing .begin/.end gate section");

  if (!saw_vars && declared_lines > 0) {
    for (int i = 0; i < declared_lines; ++i)
      c.vars.push_back("x" + std::to_string(i));
  }
  if (saw_lines && declared_lines != c.width())
    throw parse_error(1, 1,
                      ".lines count does not match the declared symbols");

  const int n = c.width();
  c.in_roles.assign(static_cast<std::size_t>(n), input_role::primary);
  c.out_roles.assign(static_cast<std::size_t>(n), output_role::primary);

  if (saw_inputs) {
    if (static_cast<int>(input_mask.size()) != n)
      throw parse_error(input_mask_line, 1, "input mask length must be " +
                                                std::to_string(n));
    for (int i = 0; i < n; ++i) {
      switch (input_mask[static_cast<std::size_t>(i)]) {
        case '-': break;
        case '0': c.in_roles[static_cast<std::size_t>(i)] =
                      input_role::const_zero;
          break;
        case '1': c.in_roles[static_cast<std::size_t>(i)] =
                      input_role::const_one;
          break;
        default:
          throw parse_error(input_mask_line, 1,
                            "input mask characters are 0, 1 or -");
      }
    }
  }
  if (saw_outputs) {
    if (static_cast<int>(output_mask.size()) != n)
      throw parse_error(output_mask_line, 1, "output mask length must be " +
                                                 std::to_string(n));
    for (int i = 0; i < n; ++i) {
      switch (output_mask[static_cast<std::size_t>(i)]) {
        case 'o': break;
        case 'g': c.out_roles[static_cast<std::size_t>(i)] =
                      output_role::garbage;
          break;
        case '-': c.out_roles[static_cast<std::size_t>(i)] =
                      output_role::feedback_source;
          break;
        default:
          throw parse_error(output_mask_line, 1,
                            "output mask characters are o, g or -");
      }
    }
  }

  for (const auto& p : pending) {
    feedback_binding fb;
    fb.source = c.find_var(p.src);
    fb.sink = c.find_var(p.sink);
    if (fb.source < 0)
      throw parse_error(p.line_no, 1,
                        "feedback source '" + p.src + "' is not a line");
    if (fb.sink < 0)
      throw parse_error(p.line_no, 1,
                        "feedback sink '" + p.sink + "' is not a line");
    // The mask marks sinks '-'; the binding is what gives them their role.
    if (c.in_roles[static_cast<std::size_t>(fb.sink)] == input_role::primary)
      c.in_roles[static_cast<std::size_t>(fb.sink)] =
          input_role::feedback_sink;
    c.feedbacks.push_back(fb);
  }

  if (saw_init) {
    if (init_bits.size() != c.feedbacks.size())
      throw parse_error(init_line, 1, ".init needs one bit per feedback");
    for (std::size_t i = 0; i < init_bits.size(); ++i) {
      if (init_bits[i] != '0' && init_bits[i] != '1')
        throw parse_error(init_line, 1, ".init bits are 0 or 1");
      c.feedbacks[i].init = (init_bits[i] == '1');
    }
  }

  auto problems = c.validate();
  if (!problems.empty()) {
    std::string msg = "invalid circuit";
    for (const auto& v : problems)
      msg += "; " + v.kind + " at " + v.location + ": " + v.message;
    throw error(msg);
  }
  return c;
}

circuit parse_netlist_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open netlist file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_netlist(buf.str());
}

std::string serialize_netlist(const circuit& c) {
  std::ostringstream out;
  out << ".name " << c.name << "\n";
  out << ".lines " << c.width() << "\n";
  out << ".vars";
  for (const auto& v : c.vars) out << ' ' << v;
  out << "\n";

  std::string input_mask, output_mask;
  bool inputs_default = true, outputs_default = true;
  for (int i = 0; i < c.width(); ++i) {
    switch (c.in_roles[static_cast<std::size_t>(i)]) {
      case input_role::const_zero: input_mask += '0'; inputs_default = false;
        break;
      case input_role::const_one: input_mask += '1'; inputs_default = false;
        break;
      default: input_mask += '-';  // primary and feedback-sink
    }
    switch (c.out_roles[static_cast<std::size_t>(i)]) {
      case output_role::garbage: output_mask += 'g'; outputs_default = false;
        break;
      case output_role::feedback_source: output_mask += '-';
        outputs_default = false;
        break;
      default: output_mask += 'o';
    }
  }
  if (!inputs_default) out << ".inputs " << input_mask << "\n";
  if (!outputs_default) out << ".outputs " << output_mask << "\n";

  std::string init_bits;
  bool any_init = false;
  for (const auto& fb : c.feedbacks) {
    out << ".feedback " << c.vars[static_cast<std::size_t>(fb.source)]
        << " -> " << c.vars[static_cast<std::size_t>(fb.sink)] << "\n";
    init_bits += fb.init ? '1' : '0';
    any_init |= fb.init;
  }
  if (any_init) out << ".init " << init_bits << "\n";

  out << ".begin\n";
  for (const auto& g : c.gates) {
    out << gate_info(g.op).token;
    for (int ln : g.lines) out << ' ' << c.vars[static_cast<std::size_t>(ln)];
    out << "\n";
  }
  out << ".end\n";
  return out.str();
}

void write_netlist_file(const circuit& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write netlist file: " + path);
  out << serialize_netlist(c);
}

bool structurally_equal(const circuit& a, const circuit& b) {
  if (a.name != b.name || a.vars != b.vars) return false;
  if (a.in_roles != b.in_roles || a.out_roles != b.out_roles) return false;
  if (a.gates.size() != b.gates.size() ||
      a.feedbacks.size() != b.feedbacks.size())
    return false;
  for (std::size_t i = 0; i < a.gates.size(); ++i)
    if (a.gates[i].op != b.gates[i].op || a.gates[i].lines != b.gates[i].lines)
      return false;
  for (std::size_t i = 0; i < a.feedbacks.size(); ++i)
    if (a.feedbacks[i].source != b.feedbacks[i].source ||
        a.feedbacks[i].sink != b.feedbacks[i].sink ||
        a.feedbacks[i].init != b.feedbacks[i].init)
      return false;
  return true;
}

}  // namespace revseq
