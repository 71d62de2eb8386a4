#pragma once

#include <optional>
#include <vector>

#include "curvlab/graph.hpp"

namespace curvlab {

/// A bipartition (side, complement) together with the edges crossing it.
struct CutCertificate {
  std::vector<int> side;  // sorted
  std::vector<Edge> cut_edges;
  int value = 0;

  bool operator==(const CutCertificate&) const = default;
};

/// Certificate for the partition with `side` on one part. Throws
/// std::invalid_argument unless 0 < |side| < n.
CutCertificate make_cut(const Graph& g, std::vector<int> side);

/// Recomputes the crossing edges and checks every certificate invariant.
bool verify_cut(const Graph& g, const CutCertificate& cert);

/// True when one side of the cut is a single vertex.
bool is_star_cut(const Graph& g, const CutCertificate& cert);

struct EdgeConnectivity {
  int lambda = 0;
  std::optional<CutCertificate> cert;  // absent only for n = 1
};

/// Global minimum cut (Stoer–Wagner, unit weights). n = 1 gives λ = 0;
/// a disconnected graph gives λ = 0 with the component of vertex 0 as side.
/// Throws std::invalid_argument for n = 0.
EdgeConnectivity edge_connectivity(const Graph& g);

struct MinCutEnumeration {
  int lambda = 0;
  std::vector<CutCertificate> cuts;  // side contains vertex 0, sorted by side
};

inline constexpr int kBruteForceCutMaxOrder = 20;

/// Exhaustive scan of all 2^(n-1) - 1 bipartitions. Requires 2 <= n <= 20.
MinCutEnumeration min_cut_bruteforce(const Graph& g);

/// Maximum s-t flow between vertex groups in a unit-capacity undirected
/// graph, stopping early once `limit` is reached.
struct FlowResult {
  int value = 0;
  std::vector<int> source_side;  // reachable from the sources in the residual graph
};
FlowResult max_flow(const Graph& g, const std::vector<int>& sources, const std::vector<int>& sinks,
                    int limit);

struct RestrictedConnectivity {
  std::optional<int> lambda;  // nullopt means no such partition (∞)
  std::optional<CutCertificate> cert;
};

/// Minimum cut over bipartitions whose sides both have at least two
/// vertices. Requires n >= 4.
RestrictedConnectivity restricted_edge_connectivity(const Graph& g);

struct MinCutClassification {
  int lambda = 0;
  bool stars_only = false;
  std::optional<CutCertificate> witness;  // a non-star minimum cut
};

/// Whether every minimum cut isolates a single vertex. Requires a
/// connected graph with n >= 2.
MinCutClassification classify_min_cuts(const Graph& g);

}  // namespace curvlab
