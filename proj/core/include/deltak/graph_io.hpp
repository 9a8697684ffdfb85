#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "deltak/graph.hpp"

namespace deltak {

/// Parses either the canonical edge list or DIMACS.
///
/// Canonical: `#` comment lines and blank lines are skipped; the first
/// remaining line is `n m`, followed by exactly m lines `u v` (0-based).
///
/// DIMACS: `c` comment lines, a `p edge n m` header and `e u v` lines with
/// 1-based endpoints. The format is chosen by the first significant line.
///
/// Malformed input throws Error(invalid_input) with the offending line number.
Graph parse_graph(std::string_view text);

Graph read_graph_file(const std::string& path);

/// Canonical edge list, edges sorted lexicographically.
std::string format_graph(const Graph& g);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace deltak
