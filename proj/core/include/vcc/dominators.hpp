#pragma once

#include <vector>

#include "vcc/graph.hpp"

namespace vcc {

/// Immediate-dominator tree of the flowgraph (g, root).
struct DominatorTree {
  Vertex root = 0;
  /// idom[w] for w != root; -1 at the root.
  std::vector<Vertex> idom;
  /// Tree children of each vertex, ascending.
  std::vector<VertexSet> children;

  [[nodiscard]] std::size_t size() const noexcept { return idom.size(); }
  /// True iff a is an ancestor-or-self of b in the tree.
  [[nodiscard]] bool dominates(Vertex a, Vertex b) const noexcept;
};

/// Lengauer-Tarjan with path compression (the "simple" O(m log n) variant).
/// Throws Error(NotAFlowgraph) if some vertex is unreachable from `root`,
/// Error(VertexOutOfRange) if root is not a vertex.
DominatorTree dominator_tree(const DiGraph& g, Vertex root);

/// Non-root vertices with at least one tree child, i.e. D(root).
VertexSet nontrivial_dominators(const DominatorTree& t);

/// Children of the root (the set K(root)).
const VertexSet& root_children(const DominatorTree& t);

/// Children of w (the set M(w)). Throws Error(VertexOutOfRange).
const VertexSet& tree_children(const DominatorTree& t, Vertex w);

}  // namespace vcc
