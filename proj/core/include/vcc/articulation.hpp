#pragma once

#include "vcc/graph.hpp"

namespace vcc {

/// Strong articulation points of a strongly connected graph, computed from
/// the dominator trees of G(v) and G^R(v) for the pivot v = 0.
/// Throws Error(NotStronglyConnected).
VertexSet strong_articulation_points(const DiGraph& g);

/// Same, with an explicit pivot. The result does not depend on the pivot.
VertexSet strong_articulation_points(const DiGraph& g, Vertex pivot);

/// Strong articulation points of an arbitrary digraph: the union over its
/// strongly connected components.
VertexSet all_strong_articulation_points(const DiGraph& g);

/// n >= 3, strongly connected, and no strong articulation points.
bool is_2vertex_connected(const DiGraph& g);

}  // namespace vcc
