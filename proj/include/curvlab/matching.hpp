#pragma once

#include <optional>
#include <vector>

#include "curvlab/graph.hpp"

namespace curvlab {

struct Matching {
  std::vector<Edge> edges;  // u < v, sorted
  bool is_perfect = false;
};

/// Checks disjointness, edge membership and the is_perfect flag.
bool verify_matching(const Graph& g, const Matching& m);

/// Maximum cardinality matching by Edmonds' blossom algorithm. Free
/// vertices are processed in increasing order, so the result is a
/// deterministic function of the labelling.
Matching maximum_matching(const Graph& g);

inline constexpr int kBruteForceMatchingMaxEdges = 24;

/// Size of a maximum matching by exhaustive branching. Requires m <= 24.
int matching_bruteforce(const Graph& g);

inline constexpr int kTutteScanMaxOrder = 16;

/// A set S whose removal leaves more than |S| odd components, which rules
/// out a perfect matching; nullopt when no such set exists. Subsets are
/// scanned by size, then lexicographically. Requires n <= 16.
std::optional<std::vector<int>> tutte_violation(const Graph& g);

/// Number of odd components of G - S.
int odd_components_after_removal(const Graph& g, const std::vector<int>& removed);

}  // namespace curvlab
