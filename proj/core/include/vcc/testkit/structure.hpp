#pragma once

#include "vcc/graph.hpp"
#include "vcc/twovcc.hpp"

namespace vcc::testkit {

/// Checks that every component C is, in the dominator tree of (g, root),
/// either a subset of the children of some w outside C, or has C \ {w}
/// among the children of some w in C. Throws Error(NotAFlowgraph).
bool check_domtree_structure(const DiGraph& g, Vertex root, const ComponentList& comps);

}  // namespace vcc::testkit
