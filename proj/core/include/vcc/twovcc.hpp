#pragma once

#include <string_view>
#include <vector>

#include "vcc/graph.hpp"

namespace vcc {

/// Vertex sets of maximal k-vertex-connected subgraphs, each sorted, the
/// list sorted lexicographically and free of duplicates.
///
/// Component vertex ids are expressed through the input graph's origin
/// labels, so for a top-level graph they are plain vertex ids and for a
/// subgraph they refer back to the graph it was cut from.
using ComponentList = std::vector<VertexSet>;

/// Sorts members, sorts the list and drops duplicates.
void canonicalize(ComponentList& comps);

enum class TwoVccAlgorithm {
  ErusalimskiiSvetlov,  ///< "es": edge-removal fixpoint + undirected blocks
  Split,                ///< "split": recursive splitting at an articulation point
  DominatorTree,        ///< "domtree": splitting along dominator-tree children
  PerVertex,            ///< "per-vertex": union of per-vertex searches
};

/// Parses es | split | domtree | per-vertex. Throws Error(UnknownVariant).
TwoVccAlgorithm parse_two_vcc_algorithm(std::string_view name);
std::string_view to_string(TwoVccAlgorithm algo) noexcept;

/// Repeatedly deletes edges joining different SCCs of G and of every G\{v}
/// until nothing changes. The result belongs to class L and has the same
/// 2-VCCs as g.
DiGraph es_fixpoint(const DiGraph& g);

ComponentList two_vccs_es(const DiGraph& g);

/// 2-VCCs of g that contain v. Throws Error(VertexOutOfRange).
ComponentList two_vccs_containing(const DiGraph& g, Vertex v);

ComponentList two_vccs_split(const DiGraph& g);

/// Accepts any digraph; strongly connected components are handled separately.
ComponentList two_vccs_domtree(const DiGraph& g);

ComponentList two_vccs_per_vertex(const DiGraph& g);

ComponentList two_vccs(const DiGraph& g, TwoVccAlgorithm algo);

}  // namespace vcc
