#pragma once

#include <cstddef>

#include "vcc/graph.hpp"
#include "vcc/twovcc.hpp"

namespace vcc {

/// Vertex set whose removal leaves a graph that is not strongly connected.
struct VertexCut {
  VertexSet vertices;

  [[nodiscard]] std::size_t size() const noexcept { return vertices.size(); }
  friend bool operator==(const VertexCut&, const VertexCut&) = default;
};

/// Minimum number of vertices whose removal destroys strong connectivity;
/// n-1 for complete bidirected graphs. Requires g strongly connected, n >= 2.
/// Throws Error(NotStronglyConnected).
std::size_t vertex_connectivity(const DiGraph& g);

/// A minimum vertex cut (ids local to g). Among the minimum cuts met by the
/// fixed search order, the lexicographically smallest is returned.
/// Throws Error(NotStronglyConnected) or Error(NoCutExists) for complete
/// bidirected graphs.
VertexCut min_vertex_cut(const DiGraph& g);

/// n >= k+1, strongly connected, and connectivity >= k.
bool is_k_vertex_connected(const DiGraph& g, std::size_t k);

/// Maximal k-vertex-connected subgraphs, each with at least k+1 vertices.
/// k = 2 delegates to two_vccs_split. Throws Error(InvalidK) for k < 2.
ComponentList k_vccs(const DiGraph& g, std::size_t k);

inline ComponentList three_vccs(const DiGraph& g) { return k_vccs(g, 3); }

}  // namespace vcc
