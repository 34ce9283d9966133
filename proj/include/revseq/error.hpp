#pragma once

#include <stdexcept>
#include <string>

namespace revseq {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  int line;
  int col;
  parse_error(int line_no, int col_no, const std::string& what)
      : error("line " + std::to_string(line_no) + ", col " +
              std::to_string(col_no) + ": " + what),
        line(line_no),
        col(col_no) {}
};

// A structural problem found by circuit validation. Violations are data,
// not exceptions: callers decide whether to treat them as fatal.
struct violation {
  std::string kind;      // e.g. "out-of-range", "role-conflict"
  std::string location;  // e.g. "gate 2", "line q"
  std::string message;
};

}  // namespace revseq
