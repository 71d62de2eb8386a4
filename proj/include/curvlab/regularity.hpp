#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvlab/graph.hpp"

namespace curvlab {

struct RegularityClass {
  enum class Kind { kNotRegular, kRegular, kEdgeRegular, kAmplyRegular };

  Kind kind = Kind::kNotRegular;
  int n = 0;
  int d = 0;      // valid from kRegular on
  int alpha = 0;  // valid from kEdgeRegular on
  int beta = 0;   // valid for kAmplyRegular
  /// Why the next-stronger class failed, e.g. the first pair with a
  /// mismatching common-neighbour count.
  std::string diagnostic;
  std::optional<std::pair<int, int>> first_violation;

  bool is_regular() const { return kind != Kind::kNotRegular; }
  bool is_edge_regular() const { return kind == Kind::kEdgeRegular || kind == Kind::kAmplyRegular; }
  bool is_amply_regular() const { return kind == Kind::kAmplyRegular; }
};

std::string to_string(RegularityClass::Kind kind);

/// Detects d-regularity, then α over adjacent pairs, then β over pairs at
/// distance two. Complete and edgeless graphs are never amply regular, and
/// β must be witnessed by at least one distance-two pair.
RegularityClass detect_regularity(const Graph& g);

/// Common-neighbour counts for all pairs, via adjacency bitsets.
std::vector<std::vector<int>> common_neighbor_counts(const Graph& g);

/// Closed-form curvature of an amply regular graph at a vertex from the
/// spectrum of its local graph:
///   2 + α/2 + min(0, (2d(β-2) - α²)/(2β) + (2/β) min_λ (λ - α/2)²).
/// Throws std::invalid_argument when β < 1 or the spectrum is empty.
double arg_curvature_formula(int d, int alpha, int beta, const std::vector<double>& local_spectrum);

/// Ascending adjacency spectrum of the subgraph induced on N1(x).
/// Throws std::domain_error at an isolated vertex.
std::vector<double> local_graph_spectrum(const Graph& g, int x);

/// (c, d, a, b) with c~d and a, b common neighbours of c and d, i.e. a
/// K_{2,1,1} subgraph (not necessarily induced); lowest edge first.
std::optional<std::array<int, 4>> contains_diamond(const Graph& g);

/// Same, but with a and b non-adjacent, i.e. an induced K_{2,1,1}.
std::optional<std::array<int, 4>> contains_induced_diamond(const Graph& g);

struct BcnVerdict {
  bool applicable = false;
  bool holds = true;  // diamond-free when applicable
  std::string reason;
  std::optional<std::array<int, 4>> diamond;
};

/// Induced-diamond-freeness of amply regular (d, α, 2) graphs with
/// d < α(α+3)/2. Non-induced diamonds do occur in this regime (K5□K5
/// contains K4), so only the induced pattern is forbidden.
BcnVerdict bcn_check(const Graph& g);

/// A vertex x with partitions X ⊔ X̄ = N1(x), A ⊔ Ā = N2(x).
struct PartitionSpec {
  int x = 0;
  std::vector<int> X;  // subset of N1(x)
  std::vector<int> A;  // subset of N2(x)
  double epsilon = 0.0;
  double K = 0.0;
};

/// LHS - RHS of the sphere-partition inequality implied by CD(∞,K) at x:
///   LHS = (1-ε)²[e(X,X̄) + e(X,Ā) + e(X̄,A)
///                - Σ_{z∈A} d_X̄(z)²/d_N1(z) - Σ_{z∈Ā} d_X(z)²/d_N1(z)]
///   RHS = ¼(2K+d(x)-3)(ε²|X| + |X̄|) + ¼(ε² e(X,N2) + e(X̄,N2))
///         - ½(ε|X| + |X̄|)²
/// Terms with d_N1(z) = 0 contribute 0. Throws std::invalid_argument for a
/// malformed partition.
double lemma1_gap(const Graph& g, const PartitionSpec& p);

/// e(X,X̄) + e(X,Ā) + e(X̄,A) - (2K + 2d - α - 4)|X||X̄|/(4d) for an
/// edge-regular graph. Throws std::invalid_argument otherwise.
double corollary2_gap(const Graph& g, int x, const std::vector<int>& X, const std::vector<int>& A,
                      double K);
/// Same, reusing an already detected regularity class of g.
double corollary2_gap(const Graph& g, const RegularityClass& regularity, int x,
                      const std::vector<int>& X, const std::vector<int>& A, double K);

}  // namespace curvlab
