#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace vcc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Immutable simple digraph on dense ids 0..n-1.
///
/// Out- and in-adjacency are stored in CSR form, each list sorted ascending.
/// Subgraphs are compact re-indexed copies; `origin(v)` maps a local id back
/// to the id it had in the top-level graph the subgraph was cut from. Origin
/// labels are strictly increasing in the local id.
class DiGraph {
 public:
  DiGraph() = default;

  /// Drops self-loops and collapses duplicate pairs.
  /// Throws Error(VertexOutOfRange) if an endpoint is outside [0, n).
  static DiGraph from_edge_list(std::size_t n, std::span<const Edge> edges);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return out_targets_.size(); }
  [[nodiscard]] bool empty() const noexcept { return n_ == 0; }

  [[nodiscard]] std::span<const Vertex> out(Vertex v) const noexcept {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  [[nodiscard]] std::span<const Vertex> in(Vertex v) const noexcept {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t out_degree(Vertex v) const noexcept { return out(v).size(); }
  [[nodiscard]] std::size_t in_degree(Vertex v) const noexcept { return in(v).size(); }

  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const noexcept;

  /// All edges, sorted by (u, v).
  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] Vertex origin(Vertex v) const noexcept { return origin_[v]; }
  [[nodiscard]] std::span<const Vertex> origin_labels() const noexcept { return origin_; }

  /// Maps a set of local ids through origin labels; the result is sorted.
  [[nodiscard]] VertexSet to_origin(std::span<const Vertex> local) const;

  /// Inverse of to_origin. Labels that are not in this graph are skipped.
  [[nodiscard]] VertexSet from_origin(std::span<const Vertex> labels) const;

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.n_ == b.n_ && a.out_targets_ == b.out_targets_ && a.out_offsets_ == b.out_offsets_;
  }

 private:
  friend DiGraph reverse(const DiGraph& g);
  friend DiGraph induced_subgraph(const DiGraph& g, std::span<const Vertex> s);
  friend DiGraph spanning_subgraph(const DiGraph& g, std::span<const Edge> edges);

  static DiGraph build(std::size_t n, std::vector<Edge> edges, std::vector<Vertex> origin);

  std::size_t n_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
  std::vector<Vertex> origin_;
};

/// Simple undirected graph; edges stored as (min, max) pairs, sorted.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

DiGraph reverse(const DiGraph& g);

/// G[s]. Local id i corresponds to the i-th smallest element of s.
DiGraph induced_subgraph(const DiGraph& g, std::span<const Vertex> s);

/// G \ x, i.e. the subgraph induced by the complement of x.
DiGraph remove_vertices(const DiGraph& g, std::span<const Vertex> x);

UndirectedGraph underlying_undirected(const DiGraph& g);

/// (V, edges) on the vertex set and labels of g. Edges use g's local ids.
/// Throws Error(VertexOutOfRange).
DiGraph spanning_subgraph(const DiGraph& g, std::span<const Edge> edges);

/// Sorts and deduplicates in place.
void canonicalize(VertexSet& s);

}  // namespace vcc
