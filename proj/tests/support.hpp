#pragma once

// Shared helpers for the test binaries: random graphs and oracles that are
// written independently of the library code paths they check.

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "curvlab/graph.hpp"
#include "curvlab/local_operators.hpp"
#include "curvlab/oracle.hpp"

namespace curvlab::support {

inline double uniform(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform(rng) < p) edges.push_back({u, v});
    }
  }
  return from_edge_list(n, edges);
}

/// G(n, p) plus a random spanning tree, so the result is connected.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    const int parent = order[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    edges.push_back({std::min(parent, order[i]), std::max(parent, order[i])});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform(rng) < p) edges.push_back({u, v});
    }
  }
  return from_edge_list(n, edges);
}

inline Eigen::VectorXd random_vector(std::mt19937_64& rng, int n, double scale = 1.0) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(rng, -scale, scale);
  return v;
}

/// Whole-graph operators from the Laplacian matrix L = A - D.
struct DenseOperators {
  explicit DenseOperators(const Graph& g) : L(Eigen::MatrixXd::Zero(g.order(), g.order())) {
    for (const Edge& e : g.edges()) {
      L(e.u, e.v) += 1;
      L(e.v, e.u) += 1;
      L(e.u, e.u) -= 1;
      L(e.v, e.v) -= 1;
    }
  }

  Eigen::VectorXd laplacian(const Eigen::VectorXd& f) const { return L * f; }

  Eigen::VectorXd gamma(const Eigen::VectorXd& f, const Eigen::VectorXd& g) const {
    const Eigen::VectorXd fg = f.cwiseProduct(g);
    return 0.5 * (L * fg - (L * f).cwiseProduct(g) - f.cwiseProduct(L * g));
  }

  Eigen::VectorXd gamma2(const Eigen::VectorXd& f, const Eigen::VectorXd& g) const {
    return 0.5 * (L * gamma(f, g) - gamma(L * f, g) - gamma(f, L * g));
  }

  Eigen::MatrixXd L;
};

/// K_BE(x) of a finite graph: Γ2 form on the punctured 2-ball from
/// DenseOperators, sphere-2 block eliminated with Eigen's LDLT, smallest
/// eigenvalue from SelfAdjointEigenSolver.
inline double dense_curvature(const Graph& g, int x, double dimension = 0.0 /* 0 means ∞ */) {
  const auto dist = bfs_distances(g, x);
  std::vector<int> s1, s2;
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] == 1) s1.push_back(v);
    if (dist[v] == 2) s2.push_back(v);
  }
  std::vector<int> basis = s1;
  basis.insert(basis.end(), s2.begin(), s2.end());
  const int m = static_cast<int>(basis.size());
  const DenseOperators ops(g);
  Eigen::MatrixXd q(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Eigen::VectorXd ei = Eigen::VectorXd::Zero(g.order());
      Eigen::VectorXd ej = Eigen::VectorXd::Zero(g.order());
      ei(basis[i]) = 1;
      ej(basis[j]) = 1;
      q(i, j) = ops.gamma2(ei, ej)(x);
    }
  }
  const int a = static_cast<int>(s1.size());
  const int b = m - a;
  Eigen::MatrixXd eff = q.topLeftCorner(a, a);
  if (b > 0) {
    const Eigen::MatrixXd q22 = q.bottomRightCorner(b, b);
    eff -= q.topRightCorner(a, b) * q22.ldlt().solve(q.bottomLeftCorner(b, a));
  }
  if (dimension > 0) eff -= Eigen::MatrixXd::Ones(a, a) / dimension;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(eff);
  return 2.0 * eig.eigenvalues()(0);
}

inline VertexFunction function_on_ball(const Ball& b, const Eigen::VectorXd& values) {
  VertexFunction f;
  for (int i = 0; i < b.size(); ++i) f.set(b.ids[i], values(i));
  return f;
}

inline VertexFunction function_on_graph(const Eigen::VectorXd& values) {
  VertexFunction f;
  for (int i = 0; i < values.size(); ++i) f.set(VertexId{i}, values(i));
  return f;
}

/// Diamond (K4 minus an edge, not necessarily induced) by scanning all
/// 4-subsets for at least five edges.
inline bool diamond_by_subsets(const Graph& g, bool induced_only = false) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          const int vs[4] = {a, b, c, d};
          int count = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) count += g.adjacent(vs[i], vs[j]);
          }
          if (induced_only ? count == 5 : count >= 5) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace curvlab::support
