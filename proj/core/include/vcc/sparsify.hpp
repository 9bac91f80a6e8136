#pragma once

#include <optional>
#include <vector>

#include "vcc/graph.hpp"
#include "vcc/twovcc.hpp"

namespace vcc {

/// Quotient of a digraph in which every union of overlapping 2-VCCs is
/// contracted to one super-vertex. Super-vertices are numbered by their
/// smallest member.
struct CoarsenedGraph {
  DiGraph graph;
  std::vector<VertexSet> members;  ///< super-vertex -> original vertices
  std::vector<Vertex> super_of;    ///< original vertex -> super-vertex
};

CoarsenedGraph coarsen(const DiGraph& g);

/// Minimum edge subset keeping every in- and out-degree >= 2, found as a
/// maximum deletion set under per-vertex budgets (a bipartite b-matching
/// solved by max-flow). Throws Error(NotTwoVertexConnected).
std::vector<Edge> min_degree2_subgraph(const DiGraph& g);

/// 1.5-approximate smallest 2-vertex-connected spanning subgraph: the
/// degree-2 core plus a deletion-minimal set of further edges.
/// Throws Error(NotTwoVertexConnected).
std::vector<Edge> approx_2vcss(const DiGraph& g);

/// Strongly connected spanning subgraph with at most 2n-2 edges: an
/// out-arborescence and an in-arborescence from vertex 0, the latter built to
/// reuse edges of the former, then deletion-minimalized.
/// Throws Error(NotStronglyConnected).
std::vector<Edge> approx_mscss(const DiGraph& g);

struct SparsifyResult {
  int problem = 1;
  std::size_t input_edge_count = 0;
  /// Retained edges E*, sorted.
  std::vector<Edge> retained;
  /// Edges kept inside each 2-VCC of the input (same order as `components`).
  std::vector<std::vector<Edge>> per_component;
  ComponentList components;
  /// 2-VCCs of (V, E*), recomputed independently of the construction.
  ComponentList certificate;
  /// Problem 2: whether (V, E*) is strongly connected.
  std::optional<bool> strongly_connected;
  /// Problem 3: 2-VCCs of coarsen(G) and of coarsen((V, E*)), as sets of
  /// super-vertex member lists in original ids.
  std::optional<ComponentList> coarse_components;
  std::optional<ComponentList> coarse_certificate;

  [[nodiscard]] std::size_t size() const noexcept { return retained.size(); }
  [[nodiscard]] bool verified() const;
};

SparsifyResult sparsify_problem1(const DiGraph& g);

/// Throws Error(NotStronglyConnected).
SparsifyResult sparsify_problem2(const DiGraph& g);

SparsifyResult sparsify_problem3(const DiGraph& g);

}  // namespace vcc
