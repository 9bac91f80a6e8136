#include <doctest.h>

#include "support/fixtures.hpp"
#include "vcc/connectivity.hpp"
#include "vcc/error.hpp"
#include "vcc/testkit/generators.hpp"
#include "vcc/testkit/oracles.hpp"
#include "vcc/testkit/structure.hpp"

using namespace vcc;
using namespace vcc::testkit;
using namespace fixtures;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidSpec;
}

DiGraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return graph(n, edges);
}

}  // namespace

TEST_CASE("brute_two_vccs") {
  CHECK(brute_two_vccs(fig1()) == ComponentList{{0, 3, 4, 5}, {0, 6, 7}});
  CHECK(brute_two_vccs(c3()).empty());
  CHECK(brute_two_vccs(k4b()) == ComponentList{{0, 1, 2, 3}});
  CHECK(code_of([] { brute_two_vccs(path(13)); }) == Errc::TooLarge);
}

TEST_CASE("brute_sap") {
  CHECK(brute_sap(fig1()) == VertexSet{0, 1, 2, 3, 4});
  CHECK(brute_sap(tri()).empty());
  CHECK(brute_sap(c3()) == VertexSet{0, 1, 2});
  CHECK(code_of([] { brute_sap(path(13)); }) == Errc::TooLarge);
}

TEST_CASE("brute_dominators") {
  CHECK(brute_dominators(fig1(), 0)[2] == VertexSet{0, 1, 2, 4});
  CHECK(brute_dominators(c3(), 0)[2] == VertexSet{0, 1, 2});
  CHECK(brute_dominators(tri(), 0)[1] == VertexSet{0, 1});
  CHECK(brute_dominators(tri(), 0)[0] == VertexSet{0});
  CHECK(code_of([] { brute_dominators(graph(2, {{1, 0}}), 0); }) == Errc::NotAFlowgraph);
  CHECK(code_of([] { brute_dominators(path(13), 0); }) == Errc::TooLarge);
}

TEST_CASE("brute_min_vertex_cut") {
  CHECK(brute_min_vertex_cut(bowtie()).vertices == VertexSet{0});
  CHECK(brute_min_vertex_cut(cycle4b()).vertices == VertexSet{0, 2});
  CHECK(brute_min_vertex_cut(fig1()).vertices == VertexSet{0});
  CHECK(code_of([] { brute_min_vertex_cut(k4b()); }) == Errc::NoCutExists);
  CHECK(code_of([] { brute_min_vertex_cut(graph(2, {{0, 1}})); }) == Errc::NotStronglyConnected);
}

TEST_CASE("brute_opt_sparsifier") {
  CHECK(brute_opt_sparsifier(fig1(), 1).size() == 14);
  CHECK(brute_opt_sparsifier(fig1(), 2).size() == 17);
  CHECK(brute_opt_sparsifier(fig1(), 3).size() == 14);
  CHECK(brute_opt_sparsifier(tri(), 1).size() == 6);
  CHECK(brute_opt_sparsifier(k4b(), 1).size() == 8);
  CHECK(brute_opt_sparsifier(c3(), 1).empty());
  CHECK(code_of([] { brute_opt_sparsifier(k4b(), 4); }) == Errc::InvalidSpec);
  CHECK(code_of([] { brute_opt_sparsifier(graph(2, {{0, 1}}), 2); }) == Errc::NotStronglyConnected);
  // K5 bidirected: 20 edges is at the guard, K6 is beyond it
  std::vector<Edge> k6;
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = 0; v < 6; ++v) {
      if (u != v) k6.emplace_back(u, v);
    }
  }
  CHECK(code_of([&] { brute_opt_sparsifier(graph(6, k6), 1); }) == Errc::TooLarge);
}

TEST_CASE("brute_min_scss") {
  CHECK(brute_min_scss(tri()).size() == 3);
  CHECK(brute_min_scss(c3()).size() == 3);
  CHECK(brute_min_scss(k4b()).size() == 4);
  CHECK(brute_min_scss(graph(1, {})).empty());
  CHECK(code_of([] { brute_min_scss(graph(2, {{0, 1}})); }) == Errc::NotStronglyConnected);
}

TEST_CASE("check_domtree_structure") {
  CHECK(check_domtree_structure(fig1(), 0, brute_two_vccs(fig1())));
  CHECK(check_domtree_structure(tri(), 0, ComponentList{{0, 1, 2}}));
  CHECK_FALSE(check_domtree_structure(fig1(), 0, ComponentList{{1, 2, 3}}));
  CHECK(code_of([] { check_domtree_structure(graph(2, {{1, 0}}), 0, {}); }) == Errc::NotAFlowgraph);
}

TEST_CASE("gen_random is deterministic in the seed") {
  GenSpec spec;
  spec.n = 5;
  spec.m = 20;
  spec.seed = 1;
  CHECK(gen_random(spec) == gen_random(spec));
  CHECK(gen_random(spec).edge_count() == 20);

  spec.m = 8;
  const DiGraph a = gen_random(spec);
  spec.seed = 2;
  const DiGraph b = gen_random(spec);
  CHECK(a.edge_count() == 8);
  CHECK(b.edge_count() == 8);
}

TEST_CASE("gen_random models") {
  GenSpec one;
  CHECK(gen_random(one).vertex_count() == 1);
  CHECK(gen_random(one).edge_count() == 0);

  GenSpec planted;
  planted.model = GenModel::Planted;
  planted.n = 5;
  planted.sizes = {3, 3};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    planted.seed = seed;
    const DiGraph g = gen_random(planted);
    CHECK(g.edge_count() == 12);
    CHECK(brute_two_vccs(g).size() == 2);
  }

  GenSpec strong;
  strong.n = 30;
  strong.m = 30;
  strong.strong = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    strong.seed = seed;
    CHECK(is_strongly_connected(gen_random(strong)));
  }
}

TEST_CASE("planted components are recovered exactly without noise") {
  Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    GenSpec spec;
    spec.model = GenModel::Planted;
    spec.seed = rng.next();
    std::size_t needed = 1;
    const std::size_t count = 1 + rng.below(3);
    for (std::size_t c = 0; c < count; ++c) {
      spec.sizes.push_back(3 + rng.below(2));
      needed += spec.sizes.back() - 1;
    }
    spec.n = needed + rng.below(13 - needed);
    const ComponentList comps = brute_two_vccs(gen_random(spec));
    std::vector<std::size_t> sizes;
    for (const auto& c : comps) sizes.push_back(c.size());
    std::vector<std::size_t> expected = spec.sizes;
    std::sort(sizes.begin(), sizes.end());
    std::sort(expected.begin(), expected.end());
    CHECK(sizes == expected);
  }
}

TEST_CASE("gen_random rejects invalid specs") {
  GenSpec zero;
  zero.n = 0;
  CHECK(code_of([&] { gen_random(zero); }) == Errc::InvalidSpec);
  GenSpec dense;
  dense.n = 3;
  dense.m = 7;
  CHECK(code_of([&] { gen_random(dense); }) == Errc::InvalidSpec);
  GenSpec crowded;
  crowded.model = GenModel::Planted;
  crowded.n = 4;
  crowded.sizes = {3, 3};
  CHECK(code_of([&] { gen_random(crowded); }) == Errc::InvalidSpec);
  GenSpec empty_plant;
  empty_plant.model = GenModel::Planted;
  empty_plant.n = 4;
  CHECK(code_of([&] { gen_random(empty_plant); }) == Errc::InvalidSpec);
}

TEST_CASE("rng streams") {
  Rng a(5);
  Rng b(5);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng c(5);
  for (int i = 0; i < 1000; ++i) CHECK(c.below(7) < 7);
}
