#include "curvlab/curvature.hpp"

#include <cmath>
#include <stdexcept>

#include "curvlab/linalg.hpp"
#include "curvlab/parallel.hpp"

namespace curvlab {
namespace {

VertexFunction witness_on_ball(const QuadraticForm& q, const VertexId& center,
                               const Eigen::VectorXd& full) {
  VertexFunction f;
  f.set(center, 0.0);
  for (int i = 0; i < q.dimension(); ++i) f.set(q.basis[i], full[i]);
  return f;
}

QuadraticForm effective_form(const Ball& b, double dimension) {
  return schur_reduce(with_dimension(curvature_form(b), dimension));
}

}  // namespace

QuadraticForm curvature_form(const Ball& b) {
  if (b.first_size == 0) {
    throw std::domain_error("curvature form undefined at isolated vertex " + b.ids[0].to_string());
  }
  const int m = b.size() - 1;
  QuadraticForm q;
  q.basis.assign(b.ids.begin() + 1, b.ids.end());
  q.first_size = b.first_size;
  q.matrix.resize(m, m);

  auto indicator = [&](int i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(b.size());
    e[i + 1] = 1.0;
    return e;
  };
  Eigen::VectorXd diag(m);
  for (int i = 0; i < m; ++i) {
    const Eigen::VectorXd e = indicator(i);
    diag[i] = local::gamma2(b, e, e);
    q.matrix(i, i) = diag[i];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Eigen::VectorXd e = indicator(i) + indicator(j);
      const double value = 0.5 * (local::gamma2(b, e, e) - diag[i] - diag[j]);
      q.matrix(i, j) = value;
      q.matrix(j, i) = value;
    }
  }
  return q;
}

QuadraticForm curvature_form(const NeighborOracle& o, const VertexId& x) {
  return curvature_form(ball(o, x, 2));
}

QuadraticForm schur_reduce(const QuadraticForm& q) {
  QuadraticForm out;
  out.basis.assign(q.basis.begin(), q.basis.begin() + q.first_size);
  out.first_size = q.first_size;
  out.matrix = schur_complement(q.matrix, q.first_size);
  return out;
}

Eigen::VectorXd schur_extend(const QuadraticForm& q, const Eigen::VectorXd& f1) {
  const int s1 = q.first_size;
  const int s2 = q.dimension() - s1;
  Eigen::VectorXd full(q.dimension());
  full.head(s1) = f1;
  if (s2 > 0) {
    const Eigen::MatrixXd c = q.matrix.bottomRightCorner(s2, s2);
    const Eigen::MatrixXd bt = q.matrix.bottomLeftCorner(s2, s1);
    full.tail(s2) = -c.llt().solve(bt * f1);
  }
  return full;
}

QuadraticForm with_dimension(QuadraticForm q, double dimension) {
  if (!(dimension > 0)) throw std::invalid_argument("dimension N must be positive");
  if (std::isinf(dimension)) return q;
  q.matrix.topLeftCorner(q.first_size, q.first_size).array() -= 1.0 / dimension;
  return q;
}

CurvatureReport bakry_emery_curvature(const Ball& b, double dimension, double tol) {
  CurvatureReport report;
  report.vertex = b.ids[0];
  report.dimension = dimension;
  report.eigen_tolerance = tol;
  if (b.first_size == 0) {
    report.curvature = std::numeric_limits<double>::infinity();
    return report;
  }
  const QuadraticForm q = with_dimension(curvature_form(b), dimension);
  const QuadraticForm reduced = schur_reduce(q);
  const auto pair = min_eigenpair(reduced.matrix, tol);
  // Γ(f)(x) = ½|f1|² when f(x) = 0, hence the factor 2.
  report.curvature = 2.0 * pair.value;
  report.witness = witness_on_ball(q, b.ids[0], schur_extend(q, pair.vector));
  return report;
}

CurvatureReport bakry_emery_curvature(const NeighborOracle& o, const VertexId& x,
                                      double dimension, double tol) {
  return bakry_emery_curvature(ball(o, x, 2), dimension, tol);
}

CurvatureReport bakry_emery_curvature(const Graph& g, int x, double dimension) {
  return bakry_emery_curvature(ball(g, x, 2), dimension);
}

CdCheck check_cd(const NeighborOracle& o, const VertexId& x, double dimension, double K,
                 CdMode mode, double tol) {
  const Ball b = ball(o, x, 2);
  if (b.first_size == 0) return {};

  CdCheck result;
  if (mode == CdMode::kEigen) {
    const CurvatureReport report = bakry_emery_curvature(b, dimension);
    result.holds = K <= report.curvature + tol;
    if (!result.holds) result.violating = report.witness;
    return result;
  }

  const QuadraticForm reduced = effective_form(b, dimension);
  Eigen::MatrixXd shifted = reduced.matrix;
  shifted.diagonal().array() -= K / 2.0;
  result.holds = is_positive_definite(shifted, tol);
  if (!result.holds) result.violating = bakry_emery_curvature(b, dimension).witness;
  return result;
}

double curvature_by_bisection(const Ball& b, double dimension) {
  if (b.first_size == 0) return std::numeric_limits<double>::infinity();
  const Eigen::MatrixXd m = effective_form(b, dimension).matrix;

  // Gershgorin discs bracket the spectrum.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double radius = m.row(i).cwiseAbs().sum() - std::abs(m(i, i));
    lo = std::min(lo, m(i, i) - radius);
    hi = std::max(hi, m(i, i) + radius);
  }
  lo = 2.0 * lo - 1.0;
  hi = 2.0 * hi + 1.0;
  auto feasible = [&](double K) {
    Eigen::MatrixXd shifted = m;
    shifted.diagonal().array() -= K / 2.0;
    return is_positive_definite(shifted);
  };
  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * (1.0 + std::abs(lo)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double cd_residual(const NeighborOracle& o, const VertexFunction& f, const VertexId& x,
                   double dimension, double K) {
  const double lap = laplacian_at(o, f, x);
  const double inv_n = std::isinf(dimension) ? 0.0 : 1.0 / dimension;
  return gamma2_at(o, f, f, x) - inv_n * lap * lap - K * gamma_at(o, f, f, x);
}

GraphCurvature graph_curvature(const Graph& g, double dimension, std::size_t threads) {
  if (g.order() == 0) throw std::invalid_argument("curvature of the empty graph is undefined");
  if (threads == 0) threads = default_thread_count();
  GraphCurvature out;
  out.per_vertex = parallel_map(static_cast<std::size_t>(g.order()), threads, [&](std::size_t v) {
    return bakry_emery_curvature(g, static_cast<int>(v), dimension).curvature;
  });
  out.curvature = std::numeric_limits<double>::infinity();
  for (double k : out.per_vertex) out.curvature = std::min(out.curvature, k);
  return out;
}

}  // namespace curvlab
