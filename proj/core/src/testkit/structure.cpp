#include "vcc/testkit/structure.hpp"

#include <algorithm>

#include "vcc/dominators.hpp"

namespace vcc::testkit {

bool check_domtree_structure(const DiGraph& g, Vertex root, const ComponentList& comps) {
  const DominatorTree t = dominator_tree(g, root);
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (const auto& labels : comps) {
    const VertexSet c = g.from_origin(labels);
    bool ok = false;
    for (Vertex w = 0; w < n && !ok; ++w) {
      const VertexSet& kids = tree_children(t, w);
      const bool w_in = std::binary_search(c.begin(), c.end(), w);
      VertexSet rest;
      for (Vertex v : c) {
        if (v != w) rest.push_back(v);
      }
      if (!w_in && std::includes(kids.begin(), kids.end(), c.begin(), c.end())) ok = true;
      if (w_in && std::includes(kids.begin(), kids.end(), rest.begin(), rest.end())) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace vcc::testkit
