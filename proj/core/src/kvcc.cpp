#include "vcc/kvcc.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "vcc/articulation.hpp"
#include "vcc/connectivity.hpp"
#include "vcc/error.hpp"
#include "flow_network.hpp"

namespace vcc {

namespace {

using detail::FlowNetwork;

// Vertex-split network: x becomes in(x) = 2x -> out(x) = 2x+1 with unit
// capacity (unbounded for the two terminals); each edge (u,v) becomes
// out(u) -> in(v) with unbounded capacity.
FlowNetwork split_network(const DiGraph& g, Vertex s, Vertex t) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  FlowNetwork net(2 * n);
  for (Vertex x = 0; x < n; ++x) {
    net.add_arc(2 * x, 2 * x + 1, (x == s || x == t) ? FlowNetwork::kInfinite : 1);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.out(u)) net.add_arc(2 * u + 1, 2 * v, FlowNetwork::kInfinite);
  }
  return net;
}

// Saturated vertex arcs on the source side of the residual min cut.
VertexSet source_side_cut(const FlowNetwork& net, int source, std::size_t n) {
  const auto reach = net.residual_reach(source);
  VertexSet cut;
  for (std::size_t x = 0; x < n; ++x) {
    if (reach[2 * x] && !reach[2 * x + 1]) cut.push_back(static_cast<Vertex>(x));
  }
  return cut;
}

struct CutSearch {
  std::size_t connectivity;
  std::optional<VertexSet> cut;
};

// Tries sources in order of increasing degree. A minimum cut X misses one of
// any |X|+1 sources s; some t is then cut off from s (or s from t) by X, so
// trying best+1 sources against every t finds the optimum.
CutSearch search_min_cut(const DiGraph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.in_degree(a) + g.out_degree(a) < g.in_degree(b) + g.out_degree(b);
  });

  CutSearch best{static_cast<std::size_t>(n - 1), std::nullopt};
  const auto consider = [&](Vertex s, Vertex t) {
    if (g.has_edge(s, t)) return;
    FlowNetwork net = split_network(g, s, t);
    const int limit = static_cast<int>(best.connectivity) + 1;
    const int flow = net.max_flow(2 * s + 1, 2 * t, limit);
    if (flow >= limit) return;
    VertexSet cut = source_side_cut(net, 2 * s + 1, g.vertex_count());
    if (static_cast<std::size_t>(flow) < best.connectivity || !best.cut || cut < *best.cut) {
      best.connectivity = static_cast<std::size_t>(flow);
      best.cut = std::move(cut);
    }
  };
  for (std::size_t i = 0; i < order.size() && i <= best.connectivity; ++i) {
    const Vertex s = order[i];
    for (Vertex t = 0; t < n; ++t) {
      if (t == s) continue;
      consider(s, t);
      consider(t, s);
    }
  }
  return best;
}

void require_strongly_connected(const DiGraph& g) {
  if (g.vertex_count() < 2 || !is_strongly_connected(g)) {
    throw Error(Errc::NotStronglyConnected,
                "graph with " + std::to_string(g.vertex_count()) + " vertices");
  }
}

VertexSet all_vertices(const DiGraph& g) {
  VertexSet all(g.vertex_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  return all;
}

// Drops every set strictly contained in another one.
void keep_maximal(ComponentList& comps) {
  ComponentList kept;
  for (const auto& c : comps) {
    const bool dominated = std::any_of(comps.begin(), comps.end(), [&](const VertexSet& d) {
      return d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end());
    });
    if (!dominated) kept.push_back(c);
  }
  comps = std::move(kept);
}

}  // namespace

std::size_t vertex_connectivity(const DiGraph& g) {
  require_strongly_connected(g);
  return search_min_cut(g).connectivity;
}

VertexCut min_vertex_cut(const DiGraph& g) {
  require_strongly_connected(g);
  auto found = search_min_cut(g);
  if (!found.cut) {
    throw Error(Errc::NoCutExists, "complete bidirected graph on " +
                                       std::to_string(g.vertex_count()) + " vertices");
  }
  return VertexCut{std::move(*found.cut)};
}

bool is_k_vertex_connected(const DiGraph& g, std::size_t k) {
  if (g.vertex_count() < k + 1 || !is_strongly_connected(g)) return false;
  if (k <= 1) return true;
  if (k == 2) return strong_articulation_points(g).empty();
  return search_min_cut(g).connectivity >= k;
}

ComponentList k_vccs(const DiGraph& g, std::size_t k) {
  if (k < 2) throw Error(Errc::InvalidK, "k = " + std::to_string(k));
  if (k == 2) return two_vccs_split(g);

  ComponentList result;
  std::set<VertexSet> processed;
  std::vector<DiGraph> work{g};
  while (!work.empty()) {
    const DiGraph h = std::move(work.back());
    work.pop_back();
    if (h.vertex_count() < k + 1) continue;
    VertexSet key = h.to_origin(all_vertices(h));
    if (!processed.insert(key).second) continue;

    if (is_k_vertex_connected(h, k)) {
      result.push_back(std::move(key));
    } else if (is_k_vertex_connected(h, k - 1)) {
      // Connectivity is exactly k-1 here, so the cut has k-1 vertices.
      const VertexSet cut = min_vertex_cut(h).vertices;
      VertexSet rest;
      for (Vertex v = 0; v < static_cast<Vertex>(h.vertex_count()); ++v) {
        if (!std::binary_search(cut.begin(), cut.end(), v)) rest.push_back(v);
      }
      const DiGraph without_cut = induced_subgraph(h, rest);
      for (const auto& comp : strongly_connected_components(without_cut).components) {
        VertexSet members = cut;
        for (Vertex v : comp) members.push_back(rest[v]);
        canonicalize(members);
        work.push_back(induced_subgraph(h, members));
      }
    } else {
      for (const auto& comp : k_vccs(h, k - 1)) work.push_back(induced_subgraph(h, h.from_origin(comp)));
    }
  }
  canonicalize(result);
  keep_maximal(result);
  return result;
}

}  // namespace vcc
