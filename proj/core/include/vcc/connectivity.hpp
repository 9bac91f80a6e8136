#pragma once

#include <vector>

#include "vcc/graph.hpp"

namespace vcc {

/// Strongly connected components in canonical order: each component sorted
/// ascending, the list sorted lexicographically. `component_of[v]` indexes
/// into `components`, or is -1 for an excluded vertex.
struct SccPartition {
  std::vector<int> component_of;
  std::vector<VertexSet> components;

  [[nodiscard]] std::size_t count() const noexcept { return components.size(); }
};

SccPartition strongly_connected_components(const DiGraph& g);

/// SCCs of g \ {excluded} without materializing the subgraph.
SccPartition strongly_connected_components(const DiGraph& g, Vertex excluded);

/// True iff g has exactly one SCC and at least one vertex.
bool is_strongly_connected(const DiGraph& g);

/// Vertex sets of the blocks (maximal 2-connected subgraphs, bridges included)
/// of an undirected graph. Isolated vertices belong to no block.
std::vector<VertexSet> undirected_biconnected_components(const UndirectedGraph& u);

}  // namespace vcc
