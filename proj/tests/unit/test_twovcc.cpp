#include <doctest.h>

#include "support/fixtures.hpp"
#include "vcc/connectivity.hpp"
#include "vcc/error.hpp"
#include "vcc/testkit/oracles.hpp"
#include "vcc/twovcc.hpp"

using namespace vcc;
using namespace fixtures;

namespace {

const ComponentList kFig1Components{{0, 3, 4, 5}, {0, 6, 7}};

const TwoVccAlgorithm kAll[] = {TwoVccAlgorithm::ErusalimskiiSvetlov, TwoVccAlgorithm::Split,
                                TwoVccAlgorithm::DominatorTree, TwoVccAlgorithm::PerVertex};

}  // namespace

TEST_CASE("every variant on the fixtures") {
  for (auto algo : kAll) {
    CAPTURE(to_string(algo));
    CHECK(two_vccs(fig1(), algo) == kFig1Components);
    CHECK(two_vccs(c3(), algo).empty());
    CHECK(two_vccs(tri(), algo) == ComponentList{{0, 1, 2}});
    CHECK(two_vccs(k4b(), algo) == ComponentList{{0, 1, 2, 3}});
    CHECK(two_vccs(bowtie(), algo) == ComponentList{{0, 1, 2}, {0, 3, 4}});
    CHECK(two_vccs(graph(2, {{0, 1}, {1, 0}}), algo).empty());
    CHECK(two_vccs(graph(0, {}), algo).empty());
    CHECK(two_vccs(graph(1, {}), algo).empty());
  }
  CHECK(two_vccs_es(fig1()) == kFig1Components);
  CHECK(two_vccs_split(fig1()) == kFig1Components);
  CHECK(two_vccs_domtree(fig1()) == kFig1Components);
  CHECK(two_vccs_per_vertex(fig1()) == kFig1Components);
}

TEST_CASE("two_vccs_containing") {
  CHECK(two_vccs_containing(fig1(), 0) == kFig1Components);
  CHECK(two_vccs_containing(fig1(), 1).empty());
  CHECK(two_vccs_containing(fig1(), 6) == ComponentList{{0, 6, 7}});
  CHECK(two_vccs_containing(bowtie(), 3) == ComponentList{{0, 3, 4}});
  try {
    two_vccs_containing(fig1(), 8);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VertexOutOfRange);
  }
}

TEST_CASE("variant names") {
  CHECK(parse_two_vcc_algorithm("es") == TwoVccAlgorithm::ErusalimskiiSvetlov);
  CHECK(parse_two_vcc_algorithm("split") == TwoVccAlgorithm::Split);
  CHECK(parse_two_vcc_algorithm("domtree") == TwoVccAlgorithm::DominatorTree);
  CHECK(parse_two_vcc_algorithm("per-vertex") == TwoVccAlgorithm::PerVertex);
  for (auto algo : kAll) CHECK(parse_two_vcc_algorithm(to_string(algo)) == algo);
  try {
    parse_two_vcc_algorithm("bogus");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownVariant);
  }
}

TEST_CASE("es fixpoint on FIG1") {
  // 4->7 crosses SCCs of FIG1 minus 0; once it is gone, 1->2 and 2->3 cross
  // SCCs of the graph minus 4, and then 4->1 of the graph minus 0.
  const DiGraph h = es_fixpoint(fig1());
  CHECK(h.vertex_count() == 8);
  CHECK(h.edge_count() == 14);
  for (const Edge& e : {Edge{4, 7}, Edge{4, 1}, Edge{1, 2}, Edge{2, 3}}) CHECK_FALSE(h.has_edge(e.first, e.second));
}

TEST_CASE("components of disjoint pieces") {
  // TRI on {0,1,2}, C3 on {3,4,5}, joined one way
  const DiGraph g = graph(6, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
  for (auto algo : kAll) CHECK(two_vccs(g, algo) == ComponentList{{0, 1, 2}});
}

TEST_CASE("variants agree with the brute-force oracle") {
  for (const DiGraph& g : corpus(300, 1, 8, 3)) {
    const ComponentList brute = testkit::brute_two_vccs(g);
    for (auto algo : kAll) {
      CAPTURE(to_string(algo));
      CHECK(two_vccs(g, algo) == brute);
    }
  }
}

TEST_CASE("two_vccs_containing filters the full list") {
  for (const DiGraph& g : corpus(100, 3, 9, 5)) {
    const ComponentList all = two_vccs_split(g);
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
      ComponentList expected;
      for (const auto& c : all) {
        if (std::binary_search(c.begin(), c.end(), v)) expected.push_back(c);
      }
      CHECK(two_vccs_containing(g, v) == expected);
    }
  }
}

TEST_CASE("es fixpoint has no inter-SCC edges, also after removing any vertex") {
  const auto crossing_edges = [](const DiGraph& h) {
    const auto p = strongly_connected_components(h);
    std::size_t count = 0;
    for (const auto& [u, v] : h.edges()) {
      if (p.component_of[u] != p.component_of[v]) ++count;
    }
    return count;
  };
  for (const DiGraph& g : corpus(200, 1, 12, 29)) {
    const DiGraph h = es_fixpoint(g);
    CHECK(crossing_edges(h) == 0);
    for (Vertex v = 0; v < static_cast<Vertex>(h.vertex_count()); ++v) {
      CHECK(crossing_edges(remove_vertices(h, VertexSet{v})) == 0);
    }
  }
}

TEST_CASE("variants agree on larger sparse graphs") {
  for (const DiGraph& g : sparse_corpus(500, 10, 60, 37)) {
    const ComponentList ref = two_vccs_split(g);
    for (auto algo : kAll) CHECK(two_vccs(g, algo) == ref);
  }
}
