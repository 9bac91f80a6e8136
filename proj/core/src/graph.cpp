#include "vcc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vcc/error.hpp"

namespace vcc {

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    throw Error(Errc::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not in [0," + std::to_string(n) + ")");
  }
}

}  // namespace

void canonicalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

DiGraph DiGraph::build(std::size_t n, std::vector<Edge> edges, std::vector<Vertex> origin) {
  std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  DiGraph g;
  g.n_ = n;
  g.origin_ = std::move(origin);
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++g.out_offsets_[u + 1];
    ++g.in_offsets_[v + 1];
  }
  std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(), g.out_offsets_.begin());
  std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(), g.in_offsets_.begin());

  g.out_targets_.resize(edges.size());
  g.in_sources_.resize(edges.size());
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  // edges are sorted by (u,v), so the out lists come out sorted, and filling
  // in-lists in this order sorts each in-list by source as well.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    g.out_targets_[i] = v;
    g.in_sources_[in_fill[v]++] = u;
  }
  return g;
}

DiGraph DiGraph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  for (const auto& [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
  }
  std::vector<Vertex> origin(n);
  std::iota(origin.begin(), origin.end(), 0);
  return build(n, {edges.begin(), edges.end()}, std::move(origin));
}

bool DiGraph::has_edge(Vertex u, Vertex v) const noexcept {
  auto succ = out(u);
  return std::binary_search(succ.begin(), succ.end(), v);
}

std::vector<Edge> DiGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count());
  for (Vertex u = 0; u < static_cast<Vertex>(n_); ++u) {
    for (Vertex v : out(u)) result.emplace_back(u, v);
  }
  return result;
}

VertexSet DiGraph::to_origin(std::span<const Vertex> local) const {
  VertexSet result;
  result.reserve(local.size());
  for (Vertex v : local) result.push_back(origin_[v]);
  std::sort(result.begin(), result.end());
  return result;
}

VertexSet DiGraph::from_origin(std::span<const Vertex> labels) const {
  VertexSet result;
  result.reserve(labels.size());
  for (Vertex label : labels) {
    const auto it = std::lower_bound(origin_.begin(), origin_.end(), label);
    if (it != origin_.end() && *it == label) result.push_back(static_cast<Vertex>(it - origin_.begin()));
  }
  std::sort(result.begin(), result.end());
  return result;
}

UndirectedGraph::UndirectedGraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (auto& e : edges) {
    check_vertex(n, e.first);
    check_vertex(n, e.second);
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adj_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

DiGraph reverse(const DiGraph& g) {
  DiGraph r;
  r.n_ = g.n_;
  r.origin_ = g.origin_;
  r.out_offsets_ = g.in_offsets_;
  r.out_targets_ = g.in_sources_;
  r.in_offsets_ = g.out_offsets_;
  r.in_sources_ = g.out_targets_;
  return r;
}

DiGraph induced_subgraph(const DiGraph& g, std::span<const Vertex> s) {
  const std::size_t n = g.vertex_count();
  VertexSet keep(s.begin(), s.end());
  for (Vertex v : keep) check_vertex(n, v);
  canonicalize(keep);

  std::vector<Vertex> local(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  std::vector<Vertex> origin;
  origin.reserve(keep.size());
  for (Vertex u : keep) {
    origin.push_back(g.origin(u));
    for (Vertex v : g.out(u)) {
      if (local[v] >= 0) edges.emplace_back(local[u], local[v]);
    }
  }
  return DiGraph::build(keep.size(), std::move(edges), std::move(origin));
}

DiGraph remove_vertices(const DiGraph& g, std::span<const Vertex> x) {
  const std::size_t n = g.vertex_count();
  std::vector<char> removed(n, 0);
  for (Vertex v : x) {
    check_vertex(n, v);
    removed[v] = 1;
  }
  VertexSet keep;
  keep.reserve(n);
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

DiGraph spanning_subgraph(const DiGraph& g, std::span<const Edge> edges) {
  for (const auto& [u, v] : edges) {
    check_vertex(g.vertex_count(), u);
    check_vertex(g.vertex_count(), v);
  }
  return DiGraph::build(g.vertex_count(), {edges.begin(), edges.end()}, g.origin_);
}

UndirectedGraph underlying_undirected(const DiGraph& g) {
  return UndirectedGraph(g.vertex_count(), g.edges());
}

}  // namespace vcc
