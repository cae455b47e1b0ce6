#pragma once

#include <string>
#include <string_view>

#include "perfdig/digraph.hpp"

namespace perfdig {

/// Parse the line-oriented digraph format: '#' comments, blank lines
/// ignored, an "n <count>" header, then one "arc <u> <v>" line per arc
/// (a digon is two lines). Duplicate arcs, loops, out-of-range ids and
/// malformed lines raise ParseError with the line number.
Digraph parse_digraph(std::string_view text);

/// Canonical rendering: header plus arcs sorted by (u, v).
std::string render_digraph(const Digraph& d);

/// DOT text: one node statement per vertex, "u -> v;" per asymmetric arc,
/// "u -> v [dir=both];" once per digon at its smaller endpoint.
std::string render_dot(const Digraph& d);

/// Read and parse a file; wraps open failures in Error.
Digraph read_digraph_file(const std::string& path);

}  // namespace perfdig
