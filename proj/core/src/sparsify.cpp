#include "vcc/sparsify.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "flow_network.hpp"
#include "vcc/articulation.hpp"
#include "vcc/connectivity.hpp"
#include "vcc/error.hpp"

namespace vcc {

namespace {

void require_two_vertex_connected(const DiGraph& g) {
  if (!is_2vertex_connected(g)) {
    throw Error(Errc::NotTwoVertexConnected,
                "graph with " + std::to_string(g.vertex_count()) + " vertices");
  }
}

void require_strongly_connected(const DiGraph& g) {
  if (!is_strongly_connected(g)) {
    throw Error(Errc::NotStronglyConnected,
                "graph with " + std::to_string(g.vertex_count()) + " vertices");
  }
}

void canonicalize_edges(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

// Starting from `edges`, tries to delete each edge not in `fixed` in
// descending (u,v) order, keeping the deletion whenever `still_ok` holds.
template <typename Predicate>
std::vector<Edge> minimalize(const DiGraph& g, std::vector<Edge> edges,
                             const std::vector<Edge>& fixed, Predicate still_ok) {
  std::sort(edges.begin(), edges.end());
  std::vector<Edge> candidates;
  std::set_difference(edges.begin(), edges.end(), fixed.begin(), fixed.end(),
                      std::back_inserter(candidates));
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    auto pos = std::lower_bound(edges.begin(), edges.end(), *it);
    const Edge removed = *pos;
    edges.erase(pos);
    if (!still_ok(spanning_subgraph(g, edges))) {
      edges.insert(std::lower_bound(edges.begin(), edges.end(), removed), removed);
    }
  }
  return edges;
}

// Lexicographically smallest original edge for each coarsened edge.
std::map<Edge, Edge> coarse_representatives(const DiGraph& g, const CoarsenedGraph& c) {
  std::map<Edge, Edge> rep;
  for (const Edge& e : g.edges()) {
    const Edge ce{c.super_of[e.first], c.super_of[e.second]};
    if (ce.first != ce.second) rep.emplace(ce, e);
  }
  return rep;
}

// 2-VCCs of the coarsened graph written as unions of super-vertex members.
ComponentList expanded_coarse_components(const CoarsenedGraph& c) {
  ComponentList result;
  for (const auto& comp : two_vccs_split(c.graph)) {
    VertexSet members;
    for (Vertex s : comp) members.insert(members.end(), c.members[s].begin(), c.members[s].end());
    result.push_back(std::move(members));
  }
  canonicalize(result);
  return result;
}

}  // namespace

CoarsenedGraph coarsen(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& comp : two_vccs_split(g)) {
    const VertexSet local = g.from_origin(comp);
    for (Vertex v : local) {
      const Vertex a = find(local.front());
      const Vertex b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  CoarsenedGraph c;
  c.super_of.assign(n, -1);
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    const Vertex r = find(v);
    if (c.super_of[r] < 0) {
      c.super_of[r] = static_cast<Vertex>(c.members.size());
      c.members.emplace_back();
    }
    c.super_of[v] = c.super_of[r];
    c.members[c.super_of[v]].push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(c.super_of[u], c.super_of[v]);
  c.graph = DiGraph::from_edge_list(c.members.size(), edges);
  return c;
}

std::vector<Edge> min_degree2_subgraph(const DiGraph& g) {
  require_two_vertex_connected(g);
  using detail::FlowNetwork;
  const auto n = static_cast<int>(g.vertex_count());
  // source, out-side copies 0..n-1, in-side copies n..2n-1, sink.
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    net.add_arc(source, v, static_cast<int>(g.out_degree(v)) - 2);
    net.add_arc(n + v, sink, static_cast<int>(g.in_degree(v)) - 2);
  }
  const auto edges = g.edges();
  std::vector<int> arc_of(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    arc_of[i] = net.add_arc(edges[i].first, n + edges[i].second, 1);
  }
  net.max_flow(source, sink);

  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (net.flow_on(arc_of[i]) == 0) kept.push_back(edges[i]);
  }
  return kept;
}

std::vector<Edge> approx_2vcss(const DiGraph& g) {
  const auto core = min_degree2_subgraph(g);
  return minimalize(g, g.edges(), core, [](const DiGraph& h) { return is_2vertex_connected(h); });
}

std::vector<Edge> approx_mscss(const DiGraph& g) {
  require_strongly_connected(g);
  const auto n = static_cast<Vertex>(g.vertex_count());

  // Out-arborescence: DFS tree from 0.
  std::vector<Edge> tree;
  std::vector<char> seen(n, 0);
  std::vector<std::pair<Vertex, std::size_t>> frames{{0, 0}};
  seen[0] = 1;
  while (!frames.empty()) {
    auto& [v, pos] = frames.back();
    const auto succ = g.out(v);
    if (pos == succ.size()) {
      frames.pop_back();
      continue;
    }
    const Vertex w = succ[pos++];
    if (seen[w]) continue;
    seen[w] = 1;
    tree.emplace_back(v, w);
    frames.emplace_back(w, 0);
  }
  std::sort(tree.begin(), tree.end());
  const auto in_tree = [&](Vertex u, Vertex v) {
    return std::binary_search(tree.begin(), tree.end(), Edge{u, v});
  };

  // In-arborescence: fewest edges outside the out-tree on the way to 0
  // (0-1 BFS on the reversed graph), ties broken toward reused edges.
  constexpr int kUnseen = std::numeric_limits<int>::max();
  std::vector<int> dist(n, kUnseen);
  std::deque<Vertex> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const Vertex y = queue.front();
    queue.pop_front();
    for (Vertex x : g.in(y)) {
      const int w = in_tree(x, y) ? 0 : 1;
      if (dist[y] + w < dist[x]) {
        dist[x] = dist[y] + w;
        if (w == 0) {
          queue.push_front(x);
        } else {
          queue.push_back(x);
        }
      }
    }
  }
  std::vector<Edge> edges = tree;
  for (Vertex x = 1; x < n; ++x) {
    Edge best{-1, -1};
    bool best_reused = false;
    for (Vertex y : g.out(x)) {
      const bool reused = in_tree(x, y);
      if (dist[y] + (reused ? 0 : 1) != dist[x]) continue;
      if (best.first < 0 || (reused && !best_reused)) {
        best = {x, y};
        best_reused = reused;
      }
    }
    edges.push_back(best);
  }
  canonicalize_edges(edges);
  return minimalize(g, std::move(edges), {}, [](const DiGraph& h) { return is_strongly_connected(h); });
}

bool SparsifyResult::verified() const {
  if (certificate != components) return false;
  if (strongly_connected && !*strongly_connected) return false;
  if (coarse_components.has_value() != coarse_certificate.has_value()) return false;
  if (coarse_components && *coarse_components != *coarse_certificate) return false;
  return true;
}

SparsifyResult sparsify_problem1(const DiGraph& g) {
  SparsifyResult r;
  r.problem = 1;
  r.input_edge_count = g.edge_count();
  r.components = two_vccs_split(g);
  for (const auto& comp : r.components) {
    const VertexSet local = g.from_origin(comp);
    const DiGraph sub = induced_subgraph(g, local);
    std::vector<Edge> kept;
    for (const auto& [u, v] : approx_2vcss(sub)) kept.emplace_back(local[u], local[v]);
    r.retained.insert(r.retained.end(), kept.begin(), kept.end());
    r.per_component.push_back(std::move(kept));
  }
  std::sort(r.retained.begin(), r.retained.end());
  r.certificate = two_vccs_domtree(spanning_subgraph(g, r.retained));
  return r;
}

SparsifyResult sparsify_problem2(const DiGraph& g) {
  require_strongly_connected(g);
  SparsifyResult r = sparsify_problem1(g);
  r.problem = 2;
  const CoarsenedGraph c = coarsen(g);
  const auto rep = coarse_representatives(g, c);
  for (const Edge& ce : approx_mscss(c.graph)) r.retained.push_back(rep.at(ce));
  canonicalize_edges(r.retained);
  const DiGraph kept = spanning_subgraph(g, r.retained);
  r.certificate = two_vccs_domtree(kept);
  r.strongly_connected = is_strongly_connected(kept);
  return r;
}

SparsifyResult sparsify_problem3(const DiGraph& g) {
  SparsifyResult r = sparsify_problem1(g);
  r.problem = 3;
  const CoarsenedGraph c = coarsen(g);
  const auto rep = coarse_representatives(g, c);
  for (const Edge& ce : sparsify_problem1(c.graph).retained) r.retained.push_back(rep.at(ce));
  canonicalize_edges(r.retained);
  const DiGraph kept = spanning_subgraph(g, r.retained);
  r.certificate = two_vccs_domtree(kept);
  r.coarse_components = expanded_coarse_components(c);
  r.coarse_certificate = expanded_coarse_components(coarsen(kept));
  return r;
}

}  // namespace vcc
