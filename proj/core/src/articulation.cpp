#include "vcc/articulation.hpp"

#include <algorithm>
#include <string>

#include "vcc/connectivity.hpp"
#include "vcc/dominators.hpp"
#include "vcc/error.hpp"

namespace vcc {

VertexSet strong_articulation_points(const DiGraph& g) { return strong_articulation_points(g, 0); }

VertexSet strong_articulation_points(const DiGraph& g, Vertex pivot) {
  if (!is_strongly_connected(g)) {
    throw Error(Errc::NotStronglyConnected,
                "graph with " + std::to_string(g.vertex_count()) + " vertices");
  }
  if (pivot < 0 || static_cast<std::size_t>(pivot) >= g.vertex_count()) {
    throw Error(Errc::VertexOutOfRange, "pivot " + std::to_string(pivot));
  }
  // Removing the only vertex lowers the SCC count.
  if (g.vertex_count() == 1) return {};

  VertexSet result;
  if (strongly_connected_components(g, pivot).count() != 1) result.push_back(pivot);
  const auto forward = nontrivial_dominators(dominator_tree(g, pivot));
  const auto backward = nontrivial_dominators(dominator_tree(reverse(g), pivot));
  result.insert(result.end(), forward.begin(), forward.end());
  result.insert(result.end(), backward.begin(), backward.end());
  canonicalize(result);
  return result;
}

VertexSet all_strong_articulation_points(const DiGraph& g) {
  VertexSet result;
  for (const auto& comp : strongly_connected_components(g).components) {
    if (comp.size() < 3) continue;
    const DiGraph sub = induced_subgraph(g, comp);
    for (Vertex v : strong_articulation_points(sub)) result.push_back(comp[v]);
  }
  canonicalize(result);
  return result;
}

bool is_2vertex_connected(const DiGraph& g) {
  return g.vertex_count() >= 3 && is_strongly_connected(g) &&
         strong_articulation_points(g).empty();
}

}  // namespace vcc
