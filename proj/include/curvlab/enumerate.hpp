#pragma once

#include <cstdint>
#include <vector>

#include "curvlab/graph.hpp"

namespace curvlab {

inline constexpr int kCanonicalMaxOrder = 11;

/// Isomorphism-invariant code of a graph with at most 11 vertices: the
/// largest upper-triangle adjacency word over all leaves of an
/// individualisation-refinement search. Two graphs have equal codes iff
/// they are isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// Graph whose upper-triangle word (graph6 bit order, first pair most
/// significant) is `code`.
Graph graph_from_code(int n, std::uint64_t code);

/// Canonical codes of the connected graphs on exactly n vertices, one per
/// isomorphism class, ascending. Requires 1 <= n <= 11.
std::vector<std::uint64_t> connected_graph_codes(int n);

/// connected_graph_codes(n) decoded with graph_from_code.
std::vector<Graph> connected_graphs(int n);

/// connected_graphs(1) ++ ... ++ connected_graphs(max_n).
std::vector<Graph> connected_graphs_up_to(int max_n);

}  // namespace curvlab
