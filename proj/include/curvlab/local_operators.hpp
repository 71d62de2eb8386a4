#pragma once

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <utility>

#include "curvlab/oracle.hpp"

namespace curvlab {

/// A lookup outside the declared domain of a VertexFunction.
class MissingValueError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Finitely supported real function on vertices. Reading a vertex that was
/// never assigned is an error, never an implicit zero.
class VertexFunction {
 public:
  VertexFunction() = default;

  void set(const VertexId& v, double value) { values_[v] = value; }
  double at(const VertexId& v) const;
  bool contains(const VertexId& v) const { return values_.contains(v); }
  std::size_t size() const { return values_.size(); }

  const std::map<VertexId, double>& values() const { return values_; }

  /// Pointwise f + c.
  VertexFunction shifted(double c) const;
  /// Pointwise s * f.
  VertexFunction scaled(double s) const;

 private:
  std::map<VertexId, double> values_;
};

/// Δf(x) = Σ_{y~x} (f(y) - f(x)). Needs f on {x} ∪ N1(x).
double laplacian_at(const NeighborOracle& o, const VertexFunction& f, const VertexId& x);

/// Γ(f,g)(x) = ½(Δ(fg) - (Δf)g - fΔg)(x). Needs f, g on {x} ∪ N1(x).
double gamma_at(const NeighborOracle& o, const VertexFunction& f, const VertexFunction& g,
                const VertexId& x);

/// Γ2(f,g)(x) = ½(ΔΓ(f,g) - Γ(Δf,g) - Γ(f,Δg))(x), composed from the
/// definitions above. Needs f, g on the 2-ball of x.
double gamma2_at(const NeighborOracle& o, const VertexFunction& f, const VertexFunction& g,
                 const VertexId& x);

/// Both sides of the sphere-decomposed CD(∞,K) inequality at x:
///   lhs = Σ_{z∈N2} Σ_{y∈N1,y~z} [¼(f(z)-f(y))² - ½(f(z)-f(y))(f(y)-f(x))]
///         + Σ_{yy'∈E, y,y'∈N1} (f(y)-f(y'))²
///   rhs = ((2K + d(x) - 3)/2) Γ(f)(x) - ½(Δf(x))²
/// lhs - rhs = Γ2(f)(x) - KΓ(f)(x), so CD(∞,K) holds at x iff lhs >= rhs
/// for every f.
std::pair<double, double> ph_sides(const NeighborOracle& o, const VertexFunction& f,
                                   const VertexId& x, double K);

namespace local {

// Dense kernels on a ball (center at local index 0). Values are indexed by
// local vertex; only the entries the operator reads need to be meaningful.

double laplacian(const Graph& g, const Eigen::VectorXd& f, int v);
double gamma(const Graph& g, const Eigen::VectorXd& f, const Eigen::VectorXd& h, int v);
double gamma2(const Ball& b, const Eigen::VectorXd& f, const Eigen::VectorXd& h);
std::pair<double, double> ph_sides(const Ball& b, const Eigen::VectorXd& f, double K);

/// Gathers f over the ball, throwing MissingValueError for absent vertices.
Eigen::VectorXd gather(const Ball& b, const VertexFunction& f);

}  // namespace local

}  // namespace curvlab
