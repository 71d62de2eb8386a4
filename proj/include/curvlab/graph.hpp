#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace curvlab {

/// Raised when a graph is constructed from inconsistent data.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge. Graph-produced edges always have u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted and symmetric; there are no loops and no
/// parallel edges.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  std::span<const int> neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(int u, int v) const;

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph from_edge_list(int n, std::span<const Edge> edges);

  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

/// Builds a graph from an edge list; duplicate edges are merged.
/// Throws GraphError for out-of-range endpoints or self-loops.
Graph from_edge_list(int n, std::span<const Edge> edges);

inline Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

struct StructureInfo {
  int min_degree = 0;
  int max_degree = 0;
  bool is_regular = true;
  bool is_connected = true;
  std::optional<int> girth;  // nullopt for forests
  std::vector<std::vector<int>> distances;  // -1 = unreachable
};

std::vector<int> bfs_distances(const Graph& g, int source);
std::vector<std::vector<int>> distance_matrix(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_regular(const Graph& g);
bool is_connected(const Graph& g);
std::optional<int> girth(const Graph& g);

/// Component label per vertex, labels assigned in order of lowest vertex.
std::vector<int> connected_components(const Graph& g);

StructureInfo structure_queries(const Graph& g);

}  // namespace curvlab
