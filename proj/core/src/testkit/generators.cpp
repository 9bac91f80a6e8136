#include "vcc/testkit/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "vcc/error.hpp"

namespace vcc::testkit {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

namespace {

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.below(i)]);
  }
}

std::vector<Vertex> permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Vertex>(i);
  shuffle(p, rng);
  return p;
}

// Adds uniformly random new pairs until `edges` holds `target` of them.
void fill_random(std::size_t n, std::size_t target, std::set<Edge>& edges, Rng& rng) {
  if (edges.size() >= target) return;
  const std::size_t pairs = n * (n - 1);
  if (target * 4 < pairs) {
    while (edges.size() < target) {
      const auto u = static_cast<Vertex>(rng.below(n));
      const auto v = static_cast<Vertex>(rng.below(n));
      if (u != v) edges.emplace(u, v);
    }
    return;
  }
  std::vector<Edge> rest;
  rest.reserve(pairs - edges.size());
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      if (u != v && !edges.contains({u, v})) rest.emplace_back(u, v);
    }
  }
  shuffle(rest, rng);
  for (std::size_t i = 0; edges.size() < target; ++i) edges.insert(rest[i]);
}

void invalid(const std::string& detail) { throw Error(Errc::InvalidSpec, detail); }

}  // namespace

DiGraph gen_random(const GenSpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) invalid("n must be positive");
  if (spec.m > n * (n - 1)) {
    invalid("m = " + std::to_string(spec.m) + " exceeds n(n-1) = " + std::to_string(n * (n - 1)));
  }
  Rng rng(spec.seed);
  std::set<Edge> edges;

  if (spec.model == GenModel::Uniform) {
    if (!spec.sizes.empty()) invalid("sizes apply to the planted model only");
    if (spec.strong && n >= 2) {
      if (spec.m < n) invalid("a strong graph on " + std::to_string(n) + " vertices needs m >= n");
      const auto p = permutation(n, rng);
      for (std::size_t i = 0; i < n; ++i) edges.emplace(p[i], p[(i + 1) % n]);
    }
    fill_random(n, spec.m, edges, rng);
  } else {
    if (spec.sizes.empty()) invalid("planted model needs at least one size");
    std::size_t needed = 1;
    for (std::size_t s : spec.sizes) {
      if (s < 2) invalid("planted sizes must be >= 2");
      needed += s - 1;
    }
    if (needed > n) invalid("planted sizes need " + std::to_string(needed) + " vertices, n = " + std::to_string(n));
    const auto p = permutation(n, rng);
    std::size_t used = 0;
    for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
      std::vector<Vertex> clique;
      if (i > 0) clique.push_back(p[rng.below(used)]);
      while (clique.size() < spec.sizes[i]) clique.push_back(p[used++]);
      for (Vertex a : clique) {
        for (Vertex b : clique) {
          if (a != b) edges.emplace(a, b);
        }
      }
    }
    fill_random(n, spec.m, edges, rng);
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  return DiGraph::from_edge_list(n, list);
}

}  // namespace vcc::testkit
