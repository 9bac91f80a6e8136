#pragma once

#include <iosfwd>
#include <span>

#include "vcc/graph.hpp"

namespace vcc {

/// Reads the edge-list text format: the first non-comment line is `n m`,
/// followed by m lines `u v` (0-based). Lines starting with '#' are comments.
/// Throws Error(ParseError) on malformed input.
DiGraph read_edge_list(std::istream& in);

/// Writes `n m` followed by the edges sorted by (u, v).
void write_edge_list(std::ostream& out, std::size_t n, std::span<const Edge> edges);
void write_edge_list(std::ostream& out, const DiGraph& g);

}  // namespace vcc
