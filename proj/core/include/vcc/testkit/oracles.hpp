#pragma once

#include <cstddef>
#include <vector>

#include "vcc/graph.hpp"
#include "vcc/kvcc.hpp"
#include "vcc/twovcc.hpp"

// Definition-transcribed reference implementations. They read only the
// vertex count and edge list of their input and share no code with the
// algorithms they are used to check.
namespace vcc::testkit {

inline constexpr std::size_t kMaxOracleVertices = 12;
inline constexpr std::size_t kMaxOracleEdges = 20;

/// Maximal vertex sets (size >= 3) whose induced subgraph survives the
/// removal of any single vertex strongly connected. Throws Error(TooLarge).
ComponentList brute_two_vccs(const DiGraph& g);

/// Maximal k-vertex-connected vertex sets (size >= k+1), by enumerating
/// every subset and every removal set of size < k. Throws Error(TooLarge).
ComponentList brute_k_vccs(const DiGraph& g, std::size_t k);

/// {v : removing v increases the number of SCCs}. Throws Error(TooLarge).
VertexSet brute_sap(const DiGraph& g);

/// dom sets of the flowgraph (g, root): w dominates u iff u is unreachable
/// from root once w is removed. Throws Error(NotAFlowgraph), Error(TooLarge).
std::vector<VertexSet> brute_dominators(const DiGraph& g, Vertex root);

/// Lexicographically smallest minimum vertex cut, by increasing-size subset
/// enumeration. Throws Error(NotStronglyConnected), Error(NoCutExists),
/// Error(TooLarge).
VertexCut brute_min_vertex_cut(const DiGraph& g);

/// A minimum-cardinality edge set satisfying the contract of sparsification
/// problem 1, 2 or 3, by enumerating candidate edge subsets in increasing
/// size. Problem 1 only enumerates edges inside the 2-VCCs. Throws
/// Error(TooLarge) beyond kMaxOracleEdges candidates, Error(InvalidSpec)
/// for an unknown problem, Error(NotStronglyConnected) for problem 2 on a
/// graph that is not strongly connected.
std::vector<Edge> brute_opt_sparsifier(const DiGraph& g, int problem);

/// Minimum strongly connected spanning subgraph. Throws
/// Error(NotStronglyConnected), Error(TooLarge).
std::vector<Edge> brute_min_scss(const DiGraph& g);

}  // namespace vcc::testkit
