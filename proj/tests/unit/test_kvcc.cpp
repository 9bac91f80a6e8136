#include <doctest.h>

#include "support/fixtures.hpp"
#include "vcc/connectivity.hpp"
#include "vcc/error.hpp"
#include "vcc/kvcc.hpp"
#include "vcc/testkit/oracles.hpp"

using namespace vcc;
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

// Two K4B blocks sharing vertices 0 and 1.
DiGraph twin_k4() {
  return bidirected(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
}

}  // namespace

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(bowtie()) == 1);
  CHECK(vertex_connectivity(k4b()) == 3);
  CHECK(vertex_connectivity(cycle4b()) == 2);
  CHECK(vertex_connectivity(c3()) == 1);
  CHECK(vertex_connectivity(graph(2, {{0, 1}, {1, 0}})) == 1);
  CHECK(code_of([] { vertex_connectivity(graph(2, {{0, 1}})); }) == Errc::NotStronglyConnected);
  CHECK(code_of([] { vertex_connectivity(graph(1, {})); }) == Errc::NotStronglyConnected);
}

TEST_CASE("minimum vertex cut") {
  CHECK(min_vertex_cut(bowtie()).vertices == VertexSet{0});
  CHECK(min_vertex_cut(cycle4b()).vertices == VertexSet{0, 2});
  CHECK(min_vertex_cut(fig1()).vertices == VertexSet{0});
  CHECK(code_of([] { min_vertex_cut(k4b()); }) == Errc::NoCutExists);
  CHECK(code_of([] { min_vertex_cut(graph(3, {{0, 1}})); }) == Errc::NotStronglyConnected);
}

TEST_CASE("is_k_vertex_connected") {
  CHECK(is_k_vertex_connected(k4b(), 3));
  CHECK_FALSE(is_k_vertex_connected(k4b(), 4));
  CHECK_FALSE(is_k_vertex_connected(induced_subgraph(fig1(), VertexSet{0, 3, 4, 5}), 3));
  CHECK(is_k_vertex_connected(tri(), 2));
  CHECK(is_k_vertex_connected(c3(), 1));
  CHECK_FALSE(is_k_vertex_connected(c3(), 2));
}

TEST_CASE("three_vccs and k_vccs on the fixtures") {
  CHECK(three_vccs(k4b()) == ComponentList{{0, 1, 2, 3}});
  CHECK(three_vccs(fig1()).empty());
  CHECK(three_vccs(twin_k4()) == ComponentList{{0, 1, 2, 3}, {0, 1, 4, 5}});
  CHECK(k_vccs(k4b(), 2) == ComponentList{{0, 1, 2, 3}});
  CHECK(k_vccs(fig1(), 2) == ComponentList{{0, 3, 4, 5}, {0, 6, 7}});
  CHECK(k_vccs(k4b(), 4).empty());
  CHECK(k_vccs(graph(0, {}), 3).empty());
  CHECK(code_of([] { k_vccs(k4b(), 1); }) == Errc::InvalidK);
}

TEST_CASE("cuts and connectivity agree with the removal oracle") {
  for (const DiGraph& g : corpus(300, 2, 9, 21)) {
    if (!is_strongly_connected(g)) continue;
    VertexCut brute;
    try {
      brute = testkit::brute_min_vertex_cut(g);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NoCutExists);
      CHECK(code_of([&] { min_vertex_cut(g); }) == Errc::NoCutExists);
      CHECK(vertex_connectivity(g) == g.vertex_count() - 1);
      continue;
    }
    const VertexCut fast = min_vertex_cut(g);
    CHECK(fast.size() == brute.size());
    CHECK(vertex_connectivity(g) == brute.size());
    CHECK_FALSE(is_strongly_connected(remove_vertices(g, fast.vertices)));
  }
}

TEST_CASE("k_vccs agree with the brute-force oracle") {
  for (const DiGraph& g : corpus(150, 1, 8, 23)) {
    for (std::size_t k : {3u, 4u}) {
      CAPTURE(k);
      CHECK(k_vccs(g, k) == testkit::brute_k_vccs(g, k));
    }
  }
}

TEST_CASE("k-VCCs are k-connected and maximal under single-vertex extension") {
  for (const DiGraph& g : corpus(150, 4, 10, 53)) {
    for (std::size_t k : {2u, 3u, 4u}) {
      for (const auto& c : k_vccs(g, k)) {
        CHECK(is_k_vertex_connected(induced_subgraph(g, c), k));
        for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
          if (std::binary_search(c.begin(), c.end(), v)) continue;
          VertexSet bigger = c;
          bigger.push_back(v);
          canonicalize(bigger);
          CHECK_FALSE(is_k_vertex_connected(induced_subgraph(g, bigger), k));
        }
      }
    }
  }
}
