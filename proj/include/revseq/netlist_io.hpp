#pragma once

#include <iosfwd>
#include <string>

#include "revseq/circuit.hpp"

namespace revseq {

// Parses the textual netlist format. Throws parse_error (with line and
// column) on malformed input and error when the parsed circuit violates
// a structural invariant.
circuit parse_netlist(const std::string& text);
circuit parse_netlist_file(const std::string& path);

// Canonical text form: fixed directive order, default-valued directives
// omitted, single spaces, '\n' line ends. Re-serializing a parsed
// serialization is byte-identical.
std::string serialize_netlist(const circuit& c);
void write_netlist_file(const circuit& c, const std::string& path);

// Structural equality (names, roles, gates, feedbacks, init bits).
bool structurally_equal(const circuit& a, const circuit& b);

}  // namespace revseq
