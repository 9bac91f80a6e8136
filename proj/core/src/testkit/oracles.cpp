#include "vcc/testkit/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "vcc/error.hpp"

namespace vcc::testkit {

namespace {

using Mask = std::uint32_t;

// Adjacency as bitmasks, built straight from the edge list.
struct Masks {
  int n = 0;
  std::array<Mask, kMaxOracleVertices> out{};
  std::array<Mask, kMaxOracleVertices> in{};

  Masks(int vertices, const std::vector<Edge>& edges) : n(vertices) {
    for (const auto& [u, v] : edges) {
      if (u == v) continue;
      out[u] |= Mask{1} << v;
      in[v] |= Mask{1} << u;
    }
  }

  [[nodiscard]] Mask all() const { return (Mask{1} << n) - 1; }
};

void guard_vertices(std::size_t n, const char* what) {
  if (n > kMaxOracleVertices) {
    throw Error(Errc::TooLarge, std::string(what) + ": " + std::to_string(n) + " vertices, limit " +
                                    std::to_string(kMaxOracleVertices));
  }
}

int lowest(Mask m) { return std::countr_zero(m); }

template <typename Adjacency>
Mask reach(const Adjacency& adj, Mask alive, int src) {
  Mask seen = Mask{1} << src;
  Mask frontier = seen;
  while (frontier) {
    const int v = lowest(frontier);
    frontier &= frontier - 1;
    const Mask fresh = adj[v] & alive & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

bool strongly_connected(const Masks& g, Mask alive) {
  if (!alive) return false;
  const int v = lowest(alive);
  return reach(g.out, alive, v) == alive && reach(g.in, alive, v) == alive;
}

int scc_count(const Masks& g, Mask alive) {
  int count = 0;
  Mask left = alive;
  while (left) {
    const int v = lowest(left);
    left &= ~(reach(g.out, alive, v) & reach(g.in, alive, v));
    ++count;
  }
  return count;
}

// |s| >= k+1 and s minus any set of fewer than k vertices strongly connected.
bool k_connected(const Masks& g, Mask s, std::size_t k) {
  if (static_cast<std::size_t>(std::popcount(s)) < k + 1) return false;
  // Enumerate every submask x of s.
  for (Mask x = s;; x = (x - 1) & s) {
    if (static_cast<std::size_t>(std::popcount(x)) < k && !strongly_connected(g, s & ~x)) return false;
    if (x == 0) break;
  }
  return true;
}

VertexSet to_set(Mask m) {
  VertexSet s;
  while (m) {
    s.push_back(lowest(m));
    m &= m - 1;
  }
  return s;
}

std::vector<Mask> maximal_k_connected(const Masks& g, std::size_t k) {
  std::vector<Mask> found;
  for (Mask s = 1; s <= g.all(); ++s) {
    if (k_connected(g, s, k)) found.push_back(s);
  }
  std::vector<Mask> maximal;
  for (Mask s : found) {
    const bool dominated =
        std::any_of(found.begin(), found.end(), [&](Mask t) { return t != s && (t & s) == s; });
    if (!dominated) maximal.push_back(s);
  }
  return maximal;
}

ComponentList to_list(const std::vector<Mask>& masks) {
  ComponentList comps;
  for (Mask m : masks) comps.push_back(to_set(m));
  std::sort(comps.begin(), comps.end());
  return comps;
}

Masks masks_of(const DiGraph& g) { return Masks(static_cast<int>(g.vertex_count()), g.edges()); }

// Quotient by unions of overlapping components.
struct Quotient {
  int n = 0;
  std::vector<int> super_of;
};

Quotient quotient(int n, const std::vector<Mask>& comps) {
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask c : comps) {
      int m = n;
      for (int v : to_set(c)) m = std::min(m, label[v]);
      for (int v = 0; v < n; ++v) {
        if ((c >> v & 1) && label[v] != m) {
          // relabel the whole class of v
          const int old = label[v];
          for (int& l : label) {
            if (l == old) l = m;
          }
          changed = true;
        }
      }
    }
  }
  Quotient q;
  q.super_of.assign(n, -1);
  std::vector<int> id(n, -1);
  for (int v = 0; v < n; ++v) {
    if (id[label[v]] < 0) id[label[v]] = q.n++;
    q.super_of[v] = id[label[v]];
  }
  return q;
}

std::vector<Edge> quotient_edges(const Quotient& q, const std::vector<Edge>& edges) {
  std::vector<Edge> result;
  for (const auto& [u, v] : edges) {
    if (q.super_of[u] != q.super_of[v]) result.emplace_back(q.super_of[u], q.super_of[v]);
  }
  return result;
}

// Each component of a subgraph-closed family is 2-vertex-connected in the
// candidate graph iff the candidate (a subgraph of the original) has exactly
// the same maximal family, so testing the known components suffices.
bool all_connected(const Masks& g, const std::vector<Mask>& comps) {
  return std::all_of(comps.begin(), comps.end(), [&](Mask c) { return k_connected(g, c, 2); });
}

// Degree-2 prefilter: inside each component every vertex keeps >= 2 in- and
// out-neighbours.
bool degrees_ok(const Masks& g, const std::vector<Mask>& comps) {
  for (Mask c : comps) {
    for (int v : to_set(c)) {
      if (std::popcount(g.out[v] & c) < 2 || std::popcount(g.in[v] & c) < 2) return false;
    }
  }
  return true;
}

std::size_t component_edge_bound(const std::vector<Mask>& comps) {
  std::size_t bound = 0;
  for (Mask c : comps) bound += 2 * static_cast<std::size_t>(std::popcount(c));
  return bound;
}

// Calls accept(subset) for every k-subset of `items` in increasing k from
// `from`, stopping at the first accepted one.
template <typename Accept>
std::vector<Edge> first_subset(const std::vector<Edge>& items, std::size_t from, Accept accept) {
  const std::size_t m = items.size();
  for (std::size_t k = from; k <= m; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Edge> chosen;
      chosen.reserve(k);
      for (std::size_t i : idx) chosen.push_back(items[i]);
      if (accept(chosen)) return chosen;
      // next combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return items;
}

}  // namespace

ComponentList brute_k_vccs(const DiGraph& g, std::size_t k) {
  guard_vertices(g.vertex_count(), "brute_k_vccs");
  return to_list(maximal_k_connected(masks_of(g), k));
}

ComponentList brute_two_vccs(const DiGraph& g) { return brute_k_vccs(g, 2); }

VertexSet brute_sap(const DiGraph& g) {
  guard_vertices(g.vertex_count(), "brute_sap");
  const Masks m = masks_of(g);
  const int base = scc_count(m, m.all());
  VertexSet result;
  for (int v = 0; v < m.n; ++v) {
    if (scc_count(m, m.all() & ~(Mask{1} << v)) > base) result.push_back(v);
  }
  return result;
}

std::vector<VertexSet> brute_dominators(const DiGraph& g, Vertex root) {
  guard_vertices(g.vertex_count(), "brute_dominators");
  const Masks m = masks_of(g);
  if (root < 0 || root >= m.n) throw Error(Errc::VertexOutOfRange, "root " + std::to_string(root));
  if (reach(m.out, m.all(), root) != m.all()) {
    throw Error(Errc::NotAFlowgraph, "not every vertex is reachable from " + std::to_string(root));
  }
  std::vector<VertexSet> dom(m.n);
  for (int u = 0; u < m.n; ++u) {
    if (u == root) {
      dom[u] = {root};
      continue;
    }
    Mask d = (Mask{1} << u) | (Mask{1} << root);
    for (int w = 0; w < m.n; ++w) {
      if (w == u || w == root) continue;
      if (!(reach(m.out, m.all() & ~(Mask{1} << w), root) >> u & 1)) d |= Mask{1} << w;
    }
    dom[u] = to_set(d);
  }
  return dom;
}

VertexCut brute_min_vertex_cut(const DiGraph& g) {
  guard_vertices(g.vertex_count(), "brute_min_vertex_cut");
  const Masks m = masks_of(g);
  if (m.n < 2 || !strongly_connected(m, m.all())) {
    throw Error(Errc::NotStronglyConnected, "graph with " + std::to_string(m.n) + " vertices");
  }
  for (int k = 1; k <= m.n - 2; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    const auto n = static_cast<std::size_t>(m.n);
    const auto kk = static_cast<std::size_t>(k);
    while (true) {
      Mask x = 0;
      for (std::size_t i : idx) x |= Mask{1} << i;
      if (!strongly_connected(m, m.all() & ~x)) return VertexCut{to_set(x)};
      std::size_t i = kk;
      while (i > 0 && idx[i - 1] == n - kk + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < kk; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw Error(Errc::NoCutExists, "complete bidirected graph on " + std::to_string(m.n) + " vertices");
}

std::vector<Edge> brute_opt_sparsifier(const DiGraph& g, int problem) {
  if (problem < 1 || problem > 3) throw Error(Errc::InvalidSpec, "problem " + std::to_string(problem));
  guard_vertices(g.vertex_count(), "brute_opt_sparsifier");
  const int n = static_cast<int>(g.vertex_count());
  const std::vector<Edge> edges = g.edges();
  const Masks full(n, edges);
  if (problem == 2 && !strongly_connected(full, full.all())) {
    throw Error(Errc::NotStronglyConnected, "graph with " + std::to_string(n) + " vertices");
  }
  const std::vector<Mask> comps = maximal_k_connected(full, 2);

  std::vector<Edge> candidates;
  if (problem == 1) {
    for (const auto& [u, v] : edges) {
      const bool inside = std::any_of(comps.begin(), comps.end(),
                                      [&](Mask c) { return (c >> u & 1) && (c >> v & 1); });
      if (inside) candidates.emplace_back(u, v);
    }
  } else {
    candidates = edges;
  }
  if (candidates.size() > kMaxOracleEdges) {
    throw Error(Errc::TooLarge, "brute_opt_sparsifier: " + std::to_string(candidates.size()) +
                                    " candidate edges, limit " + std::to_string(kMaxOracleEdges));
  }

  const Quotient q = quotient(n, comps);
  const Masks coarse_full(q.n, quotient_edges(q, edges));
  const std::vector<Mask> coarse_comps = maximal_k_connected(coarse_full, 2);

  // Sizes below these bounds cannot satisfy the degree conditions.
  std::size_t from = component_edge_bound(comps);
  if (problem == 2) from = std::max(from, static_cast<std::size_t>(n));
  if (problem == 3) from += component_edge_bound(coarse_comps);

  return first_subset(candidates, from, [&](const std::vector<Edge>& chosen) {
    const Masks h(n, chosen);
    if (!degrees_ok(h, comps)) return false;
    if (!all_connected(h, comps)) return false;
    if (problem == 2) return strongly_connected(h, h.all());
    if (problem == 3) {
      const Masks coarse(q.n, quotient_edges(q, chosen));
      return degrees_ok(coarse, coarse_comps) && all_connected(coarse, coarse_comps);
    }
    return true;
  });
}

std::vector<Edge> brute_min_scss(const DiGraph& g) {
  guard_vertices(g.vertex_count(), "brute_min_scss");
  const int n = static_cast<int>(g.vertex_count());
  const std::vector<Edge> edges = g.edges();
  const Masks full(n, edges);
  if (!strongly_connected(full, full.all())) {
    throw Error(Errc::NotStronglyConnected, "graph with " + std::to_string(n) + " vertices");
  }
  if (edges.size() > kMaxOracleEdges) {
    throw Error(Errc::TooLarge, "brute_min_scss: " + std::to_string(edges.size()) + " edges, limit " +
                                    std::to_string(kMaxOracleEdges));
  }
  const std::size_t from = n == 1 ? 0 : static_cast<std::size_t>(n);
  return first_subset(edges, from, [&](const std::vector<Edge>& chosen) {
    const Masks h(n, chosen);
    return strongly_connected(h, h.all());
  });
}

}  // namespace vcc::testkit
