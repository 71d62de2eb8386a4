#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvlab {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Input matrix failed a symmetry or definiteness precondition.
class NumericalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar tol) {
  using std::abs;
  if (m.rows() != m.cols()) return false;
  const auto scale = typename Derived::Scalar(1) + m.cwiseAbs().maxCoeff();
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

/// Full spectral decomposition of a symmetric matrix.
template <typename Scalar>
struct SymmetricEigen {
  DenseVector<Scalar> values;   // ascending
  DenseMatrix<Scalar> vectors;  // column i pairs with values[i]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal mass falls below
/// tol * ||M||_F. Dimensions here are at most a vertex degree, so the
/// O(n^3)-per-sweep cost is irrelevant and the accuracy is excellent.
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& m,
                                                      typename Derived::Scalar tol = 1e-14,
                                                      int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  using std::sqrt;
  const Eigen::Index n = m.rows();
  if (n == 0 || m.cols() != n) throw NumericalError("jacobi_eigen needs a non-empty square matrix");

  DenseMatrix<Scalar> a = m;
  DenseMatrix<Scalar> v = DenseMatrix<Scalar>::Identity(n, n);
  const Scalar norm = a.norm();
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    Scalar off = 0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (sqrt(off) <= tol * norm || off == Scalar(0)) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        // rotation angle that zeroes a(p,q)
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) /
                         (abs(theta) + sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  // Sort ascending; ties keep the lower original index first.
  std::vector<Eigen::Index> order(n);
  for (Eigen::Index i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
  SymmetricEigen<Scalar> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]);
    out.vectors.col(i) = v.col(order[i]);
  }
  out.sweeps = sweep;
  return out;
}

template <typename Scalar>
struct EigenPair {
  Scalar value;
  DenseVector<Scalar> vector;  // unit norm
};

/// Smallest eigenvalue and a unit eigenvector of a symmetric matrix.
/// The eigenvector sign is fixed so that its first nonzero entry is
/// positive. Throws NumericalError when m is not symmetric within tol.
template <typename Derived>
EigenPair<typename Derived::Scalar> min_eigenpair(const Eigen::MatrixBase<Derived>& m,
                                                  typename Derived::Scalar tol = 1e-10) {
  using Scalar = typename Derived::Scalar;
  if (!is_symmetric(m, tol)) throw NumericalError("min_eigenpair: matrix is not symmetric");
  const DenseMatrix<Scalar> sym = (m + m.transpose()) / Scalar(2);
  auto eig = jacobi_eigen(sym);
  EigenPair<Scalar> out{eig.values[0], eig.vectors.col(0).normalized()};
  for (Eigen::Index i = 0; i < out.vector.size(); ++i) {
    using std::abs;
    if (abs(out.vector[i]) > Scalar(1e-12)) {
      if (out.vector[i] < 0) out.vector = -out.vector;
      break;
    }
  }
  return out;
}

/// True when m + shift * I admits a Cholesky factorisation.
template <typename Derived>
bool is_positive_definite(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar shift = 0) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> a = m;
  a.diagonal().array() += shift;
  Eigen::LLT<DenseMatrix<Scalar>> llt(a);
  return llt.info() == Eigen::Success;
}

/// Schur complement of the trailing block: with m = [[A, B], [Bᵀ, C]] and
/// `leading` rows in A, returns A - B C⁻¹ Bᵀ. C must be positive definite.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> schur_complement(const Eigen::MatrixBase<Derived>& m,
                                                       Eigen::Index leading) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index trailing = m.rows() - leading;
  DenseMatrix<Scalar> a = m.topLeftCorner(leading, leading);
  if (trailing == 0) return a;
  const DenseMatrix<Scalar> c = m.bottomRightCorner(trailing, trailing);
  Eigen::LLT<DenseMatrix<Scalar>> llt(c);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("schur_complement: trailing block is not positive definite");
  }
  const DenseMatrix<Scalar> b = m.topRightCorner(leading, trailing);
  a -= b * llt.solve(b.transpose());
  return (a + a.transpose()) / Scalar(2);
}

}  // namespace curvlab
