#pragma once

#include <cstdint>
#include <vector>

#include "vcc/graph.hpp"
#include "vcc/testkit/generators.hpp"

namespace fixtures {

using vcc::DiGraph;
using vcc::Edge;

inline DiGraph graph(std::size_t n, const std::vector<Edge>& edges) { return DiGraph::from_edge_list(n, edges); }

inline DiGraph bidirected(std::size_t n, const std::vector<Edge>& pairs) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : pairs) {
    edges.emplace_back(u, v);
    edges.emplace_back(v, u);
  }
  return graph(n, edges);
}

inline const std::vector<Edge> kFig1Edges{{4, 7}, {0, 3}, {3, 5}, {4, 0}, {4, 5}, {5, 4},
                                          {6, 0}, {0, 6}, {7, 0}, {0, 7}, {7, 6}, {6, 7},
                                          {3, 0}, {5, 3}, {0, 4}, {2, 3}, {4, 1}, {1, 2}};

inline DiGraph fig1() { return graph(8, kFig1Edges); }
inline DiGraph c3() { return graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline DiGraph tri() { return bidirected(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline DiGraph k4b() { return bidirected(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline DiGraph bowtie() { return bidirected(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}); }
inline DiGraph cycle4b() { return bidirected(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

/// Seeded random digraphs with n in [lo, hi] and densities from sparse to
/// near-complete; about a quarter are planted.
inline std::vector<DiGraph> corpus(std::size_t count, std::size_t lo, std::size_t hi, std::uint64_t seed) {
  vcc::testkit::Rng rng(seed);
  std::vector<DiGraph> graphs;
  graphs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    vcc::testkit::GenSpec spec;
    spec.n = lo + rng.below(hi - lo + 1);
    spec.seed = rng.next();
    const std::size_t max_m = spec.n * (spec.n - 1);
    if (i % 4 == 3 && spec.n >= 3) {
      spec.model = vcc::testkit::GenModel::Planted;
      std::size_t left = spec.n - 1;
      while (left >= 2) {
        const std::size_t s = 2 + rng.below(std::min<std::size_t>(left, 4) - 1);
        spec.sizes.push_back(s + 1);
        left -= s;
        if (rng.below(2) == 0) break;
      }
      if (spec.sizes.empty()) spec.sizes.push_back(spec.n);
      spec.m = rng.below(2 * spec.n + 1);
    } else {
      // density in eighths of the complete graph
      spec.m = max_m * (1 + rng.below(7)) / 8;
      spec.strong = rng.below(2) == 0 && spec.m >= spec.n && spec.n >= 2;
    }
    graphs.push_back(vcc::testkit::gen_random(spec));
  }
  return graphs;
}

/// Sparse seeded digraphs (m between n and 4n) with n in [lo, hi]; half of
/// them carry planted bidirected cliques of size 3 to 6.
inline std::vector<DiGraph> sparse_corpus(std::size_t count, std::size_t lo, std::size_t hi, std::uint64_t seed) {
  vcc::testkit::Rng rng(seed);
  std::vector<DiGraph> graphs;
  graphs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    vcc::testkit::GenSpec spec;
    spec.n = lo + rng.below(hi - lo + 1);
    spec.seed = rng.next();
    spec.m = std::min(spec.n * (1 + rng.below(4)), spec.n * (spec.n - 1));
    if (i % 2 == 1 && spec.n >= 4) {
      spec.model = vcc::testkit::GenModel::Planted;
      std::size_t left = spec.n - 1;
      while (left >= 2 && spec.sizes.size() < spec.n / 4 + 1) {
        const std::size_t s = 2 + rng.below(std::min<std::size_t>(left, 5) - 1);
        spec.sizes.push_back(s + 1);
        left -= s;
      }
    } else {
      spec.strong = rng.below(2) == 0 && spec.n >= 2;
    }
    graphs.push_back(vcc::testkit::gen_random(spec));
  }
  return graphs;
}

}  // namespace fixtures
