#include "vcc/twovcc.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "vcc/articulation.hpp"
#include "vcc/connectivity.hpp"
#include "vcc/dominators.hpp"
#include "vcc/error.hpp"

namespace vcc {

void canonicalize(ComponentList& comps) {
  for (auto& c : comps) canonicalize(c);
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
}

TwoVccAlgorithm parse_two_vcc_algorithm(std::string_view name) {
  if (name == "es") return TwoVccAlgorithm::ErusalimskiiSvetlov;
  if (name == "split") return TwoVccAlgorithm::Split;
  if (name == "domtree") return TwoVccAlgorithm::DominatorTree;
  if (name == "per-vertex") return TwoVccAlgorithm::PerVertex;
  throw Error(Errc::UnknownVariant, std::string(name));
}

std::string_view to_string(TwoVccAlgorithm algo) noexcept {
  switch (algo) {
    case TwoVccAlgorithm::ErusalimskiiSvetlov: return "es";
    case TwoVccAlgorithm::Split: return "split";
    case TwoVccAlgorithm::DominatorTree: return "domtree";
    case TwoVccAlgorithm::PerVertex: return "per-vertex";
  }
  return "?";
}

namespace {

// Pushes G[C] for every SCC C of g with |C| >= 3.
void push_nontrivial_sccs(const DiGraph& g, std::vector<DiGraph>& work) {
  const auto scc = strongly_connected_components(g);
  if (scc.count() == 1) {
    if (g.vertex_count() >= 3) work.push_back(g);
    return;
  }
  for (const auto& comp : scc.components) {
    if (comp.size() >= 3) work.push_back(induced_subgraph(g, comp));
  }
}

VertexSet all_vertices(const DiGraph& g) {
  VertexSet all(g.vertex_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  return all;
}

// Drops edges (u,v) whose endpoints lie in different SCCs; `excluded` is
// ignored when computing the partition and its edges are kept.
bool drop_cross_edges(std::vector<Edge>& edges, const SccPartition& scc) {
  const auto before = edges.size();
  std::erase_if(edges, [&](const Edge& e) {
    const int cu = scc.component_of[e.first];
    const int cv = scc.component_of[e.second];
    return cu >= 0 && cv >= 0 && cu != cv;
  });
  return edges.size() != before;
}

}  // namespace

DiGraph es_fixpoint(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  DiGraph current = g;
  std::vector<Edge> edges = current.edges();
  bool removed = true;
  while (removed) {
    removed = false;
    if (drop_cross_edges(edges, strongly_connected_components(current))) {
      removed = true;
      current = spanning_subgraph(g, edges);
    }
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      if (drop_cross_edges(edges, strongly_connected_components(current, v))) {
        removed = true;
        current = spanning_subgraph(g, edges);
      }
    }
  }
  return current;
}

ComponentList two_vccs_es(const DiGraph& g) {
  const DiGraph reduced = es_fixpoint(g);
  ComponentList result;
  for (auto& block : undirected_biconnected_components(underlying_undirected(reduced))) {
    if (block.size() < 3) continue;
    if (!is_2vertex_connected(induced_subgraph(reduced, block))) {
      throw std::logic_error("es: block of U(G') is not 2-vertex-connected");
    }
    result.push_back(g.to_origin(block));
  }
  canonicalize(result);
  return result;
}

ComponentList two_vccs_split(const DiGraph& g) {
  ComponentList result;
  std::vector<DiGraph> work;
  push_nontrivial_sccs(g, work);
  while (!work.empty()) {
    const DiGraph h = std::move(work.back());
    work.pop_back();
    // h is strongly connected with at least 3 vertices.
    const VertexSet saps = strong_articulation_points(h);
    if (saps.empty()) {
      result.push_back(h.to_origin(all_vertices(h)));
      continue;
    }
    const Vertex w = saps.front();
    for (auto comp : strongly_connected_components(h, w).components) {
      if (comp.size() < 2) continue;
      comp.push_back(w);
      push_nontrivial_sccs(induced_subgraph(h, comp), work);
    }
  }
  canonicalize(result);
  return result;
}

ComponentList two_vccs_containing(const DiGraph& g, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  ComponentList result;
  struct Item {
    DiGraph graph;
    Vertex v;
  };
  std::vector<Item> work;
  work.push_back({g, v});
  // Position of `v` in the compact ids of G[s] for sorted s.
  const auto local_id = [](const VertexSet& s, Vertex v) {
    return static_cast<Vertex>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
  };

  while (!work.empty()) {
    Item item = std::move(work.back());
    work.pop_back();

    const auto scc = strongly_connected_components(item.graph);
    const VertexSet& own = scc.components[scc.component_of[item.v]];
    if (own.size() < 3) continue;
    DiGraph h = own.size() == item.graph.vertex_count() ? std::move(item.graph)
                                                         : induced_subgraph(item.graph, own);
    const Vertex lv = local_id(own, item.v);

    const VertexSet saps = strong_articulation_points(h, lv);
    if (saps.empty()) {
      result.push_back(h.to_origin(all_vertices(h)));
      continue;
    }
    if (!std::binary_search(saps.begin(), saps.end(), lv)) {
      const DominatorTree forward = dominator_tree(h, lv);
      const DominatorTree backward = dominator_tree(reverse(h), lv);
      const VertexSet& k = root_children(forward);
      const VertexSet& kr = root_children(backward);
      VertexSet candidates;
      std::set_intersection(k.begin(), k.end(), kr.begin(), kr.end(),
                            std::back_inserter(candidates));
      // With fewer than two candidates no 2-VCC can contain v.
      if (candidates.size() < 2) continue;
      candidates.push_back(lv);
      canonicalize(candidates);
      work.push_back({induced_subgraph(h, candidates), local_id(candidates, lv)});
      continue;
    }
    for (auto comp : strongly_connected_components(h, lv).components) {
      if (comp.size() < 2) continue;
      comp.push_back(lv);
      canonicalize(comp);
      DiGraph sub = induced_subgraph(h, comp);
      if (!is_strongly_connected(sub)) continue;
      work.push_back({std::move(sub), local_id(comp, lv)});
    }
  }
  canonicalize(result);
  return result;
}

ComponentList two_vccs_per_vertex(const DiGraph& g) {
  ComponentList result;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    auto comps = two_vccs_containing(g, v);
    result.insert(result.end(), std::make_move_iterator(comps.begin()),
                  std::make_move_iterator(comps.end()));
  }
  canonicalize(result);
  return result;
}

ComponentList two_vccs_domtree(const DiGraph& g) {
  ComponentList result;
  std::vector<DiGraph> work;
  push_nontrivial_sccs(g, work);
  while (!work.empty()) {
    const DiGraph h = std::move(work.back());
    work.pop_back();
    const auto n = static_cast<Vertex>(h.vertex_count());
    const VertexSet saps = strong_articulation_points(h);
    if (saps.empty()) {
      result.push_back(h.to_origin(all_vertices(h)));
      continue;
    }
    // Smallest non-articulation vertex. If every vertex is an articulation
    // point (e.g. a directed cycle), any root works: some other articulation
    // point is then a non-trivial dominator in one of the two trees.
    Vertex root = 0;
    for (Vertex x = 0; x < n; ++x) {
      if (!std::binary_search(saps.begin(), saps.end(), x)) {
        root = x;
        break;
      }
    }
    DominatorTree forward = dominator_tree(h, root);
    DominatorTree backward = dominator_tree(reverse(h), root);
    const DominatorTree& tree =
        nontrivial_dominators(backward).size() > nontrivial_dominators(forward).size() ? backward
                                                                                        : forward;
    for (Vertex w = 0; w < n; ++w) {
      const VertexSet& children = tree_children(tree, w);
      if (children.size() < 2) continue;
      VertexSet members = children;
      members.push_back(w);
      canonicalize(members);
      push_nontrivial_sccs(induced_subgraph(h, members), work);
    }
  }
  canonicalize(result);
  return result;
}

ComponentList two_vccs(const DiGraph& g, TwoVccAlgorithm algo) {
  switch (algo) {
    case TwoVccAlgorithm::ErusalimskiiSvetlov: return two_vccs_es(g);
    case TwoVccAlgorithm::Split: return two_vccs_split(g);
    case TwoVccAlgorithm::DominatorTree: return two_vccs_domtree(g);
    case TwoVccAlgorithm::PerVertex: return two_vccs_per_vertex(g);
  }
  throw Error(Errc::UnknownVariant, std::to_string(static_cast<int>(algo)));
}

}  // namespace vcc
