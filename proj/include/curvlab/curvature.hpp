#pragma once

#include <Eigen/Dense>
#include <limits>
#include <optional>
#include <vector>

#include "curvlab/graph.hpp"
#include "curvlab/local_operators.hpp"
#include "curvlab/oracle.hpp"

namespace curvlab {

inline constexpr double kInfiniteDimension = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultEigenTolerance = 1e-10;
/// Curvatures at or above -kNonnegativeTolerance count as non-negative.
inline constexpr double kNonnegativeTolerance = 1e-8;

/// Γ2(·)(x) as a quadratic form in the values on the punctured 2-ball,
/// with f(x) = 0. Basis order: sphere 1 sorted, then sphere 2 sorted.
struct QuadraticForm {
  std::vector<VertexId> basis;
  int first_size = 0;
  Eigen::MatrixXd matrix;

  int dimension() const { return static_cast<int>(basis.size()); }
  double evaluate(const Eigen::VectorXd& f) const { return f.dot(matrix * f); }
};

/// Polarization of gamma2 over indicator functions of the basis vertices.
/// Throws std::domain_error at an isolated vertex.
QuadraticForm curvature_form(const NeighborOracle& o, const VertexId& x);
QuadraticForm curvature_form(const Ball& b);

/// Minimises out the sphere-2 variables: Q11 - Q12 Q22⁻¹ Q21 on sphere 1.
/// Throws NumericalError if the sphere-2 block is not positive definite.
QuadraticForm schur_reduce(const QuadraticForm& q);

/// Minimising sphere-2 completion f2 = -Q22⁻¹ Q21 f1 of a sphere-1 vector.
Eigen::VectorXd schur_extend(const QuadraticForm& q, const Eigen::VectorXd& f1);

/// Subtracts (1/N)(Σ_{y∈S1} f(y))², i.e. (1/N)(Δf(x))² under f(x)=0.
QuadraticForm with_dimension(QuadraticForm q, double dimension);

struct CurvatureReport {
  VertexId vertex;
  double curvature = 0.0;  // +inf at an isolated vertex
  double dimension = kInfiniteDimension;
  /// Minimiser on the 2-ball, f(x) = 0, unit norm on sphere 1; empty at an
  /// isolated vertex.
  VertexFunction witness;
  double eigen_tolerance = kDefaultEigenTolerance;
};

/// Largest K with CD(N, K) at x.
CurvatureReport bakry_emery_curvature(const NeighborOracle& o, const VertexId& x,
                                      double dimension = kInfiniteDimension,
                                      double tol = kDefaultEigenTolerance);
CurvatureReport bakry_emery_curvature(const Ball& b, double dimension = kInfiniteDimension,
                                      double tol = kDefaultEigenTolerance);
CurvatureReport bakry_emery_curvature(const Graph& g, int x,
                                      double dimension = kInfiniteDimension);

enum class CdMode {
  kEigen,     // compare against the eigenvalue route
  kCholesky,  // factorise Q_eff - (K/2) I directly
};

struct CdCheck {
  bool holds = true;
  std::optional<VertexFunction> violating;
};

/// Decides CD(N, K) at x. On failure returns a function violating the
/// inequality. `tol` absorbs round-off in the comparison.
CdCheck check_cd(const NeighborOracle& o, const VertexId& x, double dimension, double K,
                 CdMode mode = CdMode::kEigen, double tol = 1e-9);

/// K_BE(x) by bisection on positive definiteness, with no eigensolver.
double curvature_by_bisection(const Ball& b, double dimension = kInfiniteDimension);

/// Γ2(f)(x) - (1/N)(Δf(x))² - KΓ(f)(x), straight from the operators.
double cd_residual(const NeighborOracle& o, const VertexFunction& f, const VertexId& x,
                   double dimension, double K);

struct GraphCurvature {
  double curvature = 0.0;          // infimum over vertices
  std::vector<double> per_vertex;  // indexed by vertex
};

/// Throws std::invalid_argument for the empty graph. `threads` = 0 picks
/// default_thread_count(); output order never depends on it.
GraphCurvature graph_curvature(const Graph& g, double dimension = kInfiniteDimension,
                               std::size_t threads = 1);

}  // namespace curvlab
