#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "mstdp/graph.hpp"

namespace mstdp {

/// Reads the edge-list format:
///
///     # optional comment lines
///     n m
///     u v w      (m lines, 1-based vertex ids, nonnegative decimal weight)
///
/// Blank lines and `#` lines may appear anywhere. Errors carry the offending
/// line number.
Instance parse_graph(std::istream& in);
Instance parse_graph(std::string_view text);
Instance load_graph(const std::string& path);

/// Writes the canonical form (no comments, one edge per line, weights in
/// shortest round-trip decimal). parse_graph(write_graph(i)) == i.
void write_graph(std::ostream& out, const Instance& instance);
std::string to_edge_list(const Instance& instance);

/// Shortest decimal text that reads back to the same double, never in
/// exponent notation.
std::string format_weight(Weight w);

}  // namespace mstdp
