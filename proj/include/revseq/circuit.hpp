#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revseq/error.hpp"
#include "revseq/gate.hpp"

namespace revseq {

// What drives a line at the start of each evaluation.
enum class input_role { primary, const_zero, const_one, feedback_sink };

// What the line's final value means.
enum class output_role { primary, garbage, feedback_source };

struct gate_inst {
  gate_op op;
  std::vector<int> lines;  // position i = gate port i; port 0 = control
};

// Unit-delay register: the source line's value at the end of cycle t
// becomes the sink line's value at cycle t+1.
struct feedback_binding {
  int source = -1;
  int sink = -1;
  bool init = false;
};

struct circuit {
  std::string name = "main";
  std::vector<std::string> vars;
  std::vector<input_role> in_roles;
  std::vector<output_role> out_roles;
  std::vector<gate_inst> gates;
  std::vector<feedback_binding> feedbacks;

  int width() const { return static_cast<int>(vars.size()); }
  bool is_sequential() const { return !feedbacks.empty(); }

  int find_var(std::string_view id) const {
    for (int i = 0; i < width(); ++i)
      if (vars[static_cast<std::size_t>(i)] == id) return i;
    return -1;
  }

  const gate_def& def_of(const gate_inst& g) const { return gate_info(g.op); }

  int count_inputs(input_role r) const {
    int n = 0;
    for (auto x : in_roles) n += (x == r);
    return n;
  }
  int count_outputs(output_role r) const {
    int n = 0;
    for (auto x : out_roles) n += (x == r);
    return n;
  }
  int num_primary_inputs() const { return count_inputs(input_role::primary); }
  int num_constant_inputs() const {
    return count_inputs(input_role::const_zero) +
           count_inputs(input_role::const_one);
  }
  int num_primary_outputs() const {
    return count_outputs(output_role::primary);
  }
  int num_garbage_outputs() const {
    return count_outputs(output_role::garbage);
  }

  std::vector<int> lines_with_input_role(input_role r) const {
    std::vector<int> out;
    for (int i = 0; i < width(); ++i)
      if (in_roles[static_cast<std::size_t>(i)] == r) out.push_back(i);
    return out;
  }
  std::vector<int> lines_with_output_role(output_role r) const {
    std::vector<int> out;
    for (int i = 0; i < width(); ++i)
      if (out_roles[static_cast<std::size_t>(i)] == r) out.push_back(i);
    return out;
  }
  std::vector<int> primary_input_lines() const {
    return lines_with_input_role(input_role::primary);
  }
  std::vector<int> primary_output_lines() const {
    return lines_with_output_role(output_role::primary);
  }

  // True when every gate preserves input parity, so single-line faults
  // are observable by parity comparison.
  bool all_gates_parity_preserving() const;

  std::vector<violation> validate() const;

  // Convenience constructor used by the catalog and by tests. Roles
  // default to primary input / primary output on every line.
  static circuit make(std::string name, std::vector<std::string> vars);

  void add_gate(gate_op op, const std::vector<std::string>& port_vars);
};

}  // namespace revseq
