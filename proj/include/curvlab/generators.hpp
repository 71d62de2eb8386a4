#pragma once

#include <memory>
#include <string>
#include <variant>

#include "curvlab/graph.hpp"
#include "curvlab/oracle.hpp"

namespace curvlab {

// Vertex labelling conventions (fixed so that reports are reproducible):
//   path(n), cycle(n), complete(n)   0..n-1 in path / cyclic order
//   complete_bipartite(m, n)          0..m-1 first part, m..m+n-1 second part
//   hypercube(d)                      bitmasks, edges at Hamming distance 1
//   petersen                          outer 5-cycle 0..4, spokes i~i+5,
//                                     inner pentagram 5+i ~ 5+(i+2)%5
//   triangular(n)                     2-subsets {i<j} in lexicographic order
//   hamming2(q)                       (i, j) -> i*q + j
//   paley(q)                          residues 0..q-1
//   cartesian_product(a, b)           (u, v) -> u*|V_b| + v
//   beta1_counterexample              two Petersen copies on 0..9, 10..19,
//                                     edge 0-1 removed in each, joined by
//                                     0-10 and 1-11
//   integer_line                      oracle ids {i}
//   line_times_complete(k)            oracle ids {i, j}, i in Z, j in 0..k-1

struct FamilySpec;

namespace family {
struct Path { int n; };
struct Cycle { int n; };
struct Complete { int n; };
struct CompleteBipartite { int m; int n; };
struct Hypercube { int d; };
struct Petersen {};
struct Triangular { int n; };
struct Hamming2 { int q; };
struct Paley { int q; };
struct CartesianProduct {
  std::shared_ptr<const FamilySpec> left;
  std::shared_ptr<const FamilySpec> right;
};
struct IntegerLine {};
struct LineTimesComplete { int k; };
struct Beta1Counterexample {};
}  // namespace family

struct FamilySpec {
  std::variant<family::Path, family::Cycle, family::Complete, family::CompleteBipartite,
               family::Hypercube, family::Petersen, family::Triangular, family::Hamming2,
               family::Paley, family::CartesianProduct, family::IntegerLine,
               family::LineTimesComplete, family::Beta1Counterexample>
      kind;

  bool is_finite() const;
};

FamilySpec product_spec(FamilySpec left, FamilySpec right);

/// Parses the CLI generator syntax, e.g. "hypercube:4", "kmn:3,3",
/// "paley:13", "zxk:3", "line", "cycle:4*path:3" (Cartesian product).
/// Throws std::invalid_argument on unknown names or bad parameters.
FamilySpec parse_family_spec(const std::string& text);
std::string to_string(const FamilySpec& spec);

/// Finite families; throws std::invalid_argument for invalid parameters or
/// for specs that denote infinite graphs.
Graph generate_graph(const FamilySpec& spec);

/// Any family as an oracle. Finite families use single-coordinate ids.
NeighborOracle generate_oracle(const FamilySpec& spec);

/// Finite specs yield a Graph, infinite specs a NeighborOracle.
std::variant<Graph, NeighborOracle> generate(const FamilySpec& spec);

// Direct constructors.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph hypercube_graph(int d);
Graph petersen_graph();
Graph triangular_graph(int n);
Graph hamming2_graph(int q);
Graph paley_graph(int q);
Graph cartesian_product(const Graph& a, const Graph& b);
Graph beta1_counterexample();
NeighborOracle integer_line();
NeighborOracle line_times_complete(int k);

}  // namespace curvlab
