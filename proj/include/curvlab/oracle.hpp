#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "curvlab/graph.hpp"

namespace curvlab {

/// Opaque vertex identifier for possibly infinite graphs: a tuple of integer
/// coordinates. Finite graphs use the single coordinate {v}; Cartesian
/// products concatenate the coordinates of their factors.
struct VertexId {
  std::vector<std::int64_t> coords;

  VertexId() = default;
  VertexId(std::initializer_list<std::int64_t> c) : coords(c) {}
  explicit VertexId(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  auto operator<=>(const VertexId&) const = default;
  bool operator==(const VertexId&) const = default;

  std::string to_string() const;
};

struct VertexIdHash {
  std::size_t operator()(const VertexId& v) const noexcept;
};

/// Lazy adjacency for a locally finite graph. Neighbor lists come back
/// sorted. Copies share the underlying generator.
class NeighborOracle {
 public:
  using NeighborFn = std::function<std::vector<VertexId>(const VertexId&)>;

  NeighborOracle(std::string name, std::size_t arity, NeighborFn fn);

  std::vector<VertexId> neighbors(const VertexId& v) const;
  std::size_t degree(const VertexId& v) const { return neighbors(v).size(); }

  /// Number of coordinates in every vertex identifier.
  std::size_t arity() const { return arity_; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::size_t arity_;
  std::shared_ptr<const NeighborFn> fn_;
};

/// Oracle view of a finite graph; vertex v is {v}.
NeighborOracle oracle_of(Graph g, std::string name = "graph");

/// Cartesian product oracle: (a, b) ~ (a', b) for a ~ a', and (a, b) ~ (a, b')
/// for b ~ b'.
NeighborOracle cartesian_product(const NeighborOracle& left, const NeighborOracle& right);

enum class Sphere : int { kCenter = 0, kFirst = 1, kSecond = 2 };

/// Induced subgraph on the ball of radius 1 or 2 around a center. Local
/// index 0 is the center, then the first sphere in sorted order, then the
/// second sphere in sorted order. This ordering is the basis used by
/// curvature forms.
struct Ball {
  Graph graph;
  std::vector<VertexId> ids;
  std::vector<Sphere> sphere;
  int first_size = 0;
  int second_size = 0;

  int first_begin() const { return 1; }
  int second_begin() const { return 1 + first_size; }
  int size() const { return static_cast<int>(ids.size()); }
  int index_of(const VertexId& v) const;  // -1 when absent
};

/// Throws std::invalid_argument unless radius is 1 or 2.
Ball ball(const NeighborOracle& oracle, const VertexId& center, int radius);

/// Ball around vertex x of a finite graph, without going through an oracle.
Ball ball(const Graph& g, int x, int radius);

}  // namespace curvlab
