#include "curvlab/regularity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "curvlab/linalg.hpp"

namespace curvlab {

std::string to_string(RegularityClass::Kind kind) {
  switch (kind) {
    case RegularityClass::Kind::kNotRegular: return "not_regular";
    case RegularityClass::Kind::kRegular: return "regular";
    case RegularityClass::Kind::kEdgeRegular: return "edge_regular";
    case RegularityClass::Kind::kAmplyRegular: return "amply_regular";
  }
  return "unknown";
}

namespace {

using Bitset = std::vector<std::uint64_t>;

std::vector<Bitset> adjacency_bitsets(const Graph& g) {
  const std::size_t words = (static_cast<std::size_t>(g.order()) + 63) / 64;
  std::vector<Bitset> rows(g.order(), Bitset(words, 0));
  for (int v = 0; v < g.order(); ++v) {
    for (int w : g.neighbors(v)) rows[v][w / 64] |= std::uint64_t{1} << (w % 64);
  }
  return rows;
}

int intersection_size(const Bitset& a, const Bitset& b) {
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += std::popcount(a[i] & b[i]);
  return count;
}

}  // namespace

std::vector<std::vector<int>> common_neighbor_counts(const Graph& g) {
  const auto rows = adjacency_bitsets(g);
  std::vector<std::vector<int>> out(g.order(), std::vector<int>(g.order(), 0));
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u; v < g.order(); ++v) out[u][v] = out[v][u] = intersection_size(rows[u], rows[v]);
  }
  return out;
}

RegularityClass detect_regularity(const Graph& g) {
  RegularityClass rc;
  rc.n = g.order();
  if (!is_regular(g)) {
    rc.kind = RegularityClass::Kind::kNotRegular;
    for (int v = 1; v < g.order(); ++v) {
      if (g.degree(v) != g.degree(0)) {
        rc.first_violation = std::pair{0, v};
        break;
      }
    }
    rc.diagnostic = "degrees differ";
    return rc;
  }
  rc.kind = RegularityClass::Kind::kRegular;
  rc.d = g.order() > 0 ? g.degree(0) : 0;
  if (g.size() == 0) {
    rc.diagnostic = "no edges, so alpha is unwitnessed";
    return rc;
  }

  const auto common = common_neighbor_counts(g);
  const auto edges = g.edges();
  rc.alpha = common[edges[0].u][edges[0].v];
  for (const Edge& e : edges) {
    if (common[e.u][e.v] != rc.alpha) {
      rc.first_violation = std::pair{e.u, e.v};
      rc.diagnostic = "adjacent pairs have different common-neighbour counts";
      rc.alpha = 0;
      return rc;
    }
  }
  rc.kind = RegularityClass::Kind::kEdgeRegular;
  if (rc.d == g.order() - 1) {
    rc.diagnostic = "complete graph is excluded from amply regular";
    return rc;
  }

  const auto dist = distance_matrix(g);
  std::optional<int> beta;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (dist[u][v] != 2) continue;
      if (!beta) beta = common[u][v];
      if (common[u][v] != *beta) {
        rc.first_violation = std::pair{u, v};
        rc.diagnostic = "distance-two pairs have different common-neighbour counts";
        return rc;
      }
    }
  }
  if (!beta) {
    rc.diagnostic = "no pair at distance two, so beta is unwitnessed";
    return rc;
  }
  rc.kind = RegularityClass::Kind::kAmplyRegular;
  rc.beta = *beta;
  return rc;
}

double arg_curvature_formula(int d, int alpha, int beta, const std::vector<double>& local_spectrum) {
  if (beta < 1) throw std::invalid_argument("arg_curvature_formula needs beta >= 1");
  if (local_spectrum.empty()) throw std::invalid_argument("local spectrum must be nonempty");
  const double half_alpha = alpha / 2.0;
  double closest = std::numeric_limits<double>::infinity();
  for (double lambda : local_spectrum) {
    closest = std::min(closest, (lambda - half_alpha) * (lambda - half_alpha));
  }
  const double inner = (2.0 * d * (beta - 2) - static_cast<double>(alpha) * alpha) / (2.0 * beta) +
                       2.0 / beta * closest;
  return 2.0 + half_alpha + std::min(0.0, inner);
}

std::vector<double> local_graph_spectrum(const Graph& g, int x) {
  const auto nbrs = g.neighbors(x);
  if (nbrs.empty()) throw std::domain_error("local graph of an isolated vertex is empty");
  const Graph local = induced_subgraph(g, nbrs);
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(local.order(), local.order());
  for (const Edge& e : local.edges()) adjacency(e.u, e.v) = adjacency(e.v, e.u) = 1.0;
  const auto eig = jacobi_eigen(adjacency);
  return {eig.values.data(), eig.values.data() + eig.values.size()};
}

std::optional<std::array<int, 4>> contains_diamond(const Graph& g) {
  for (const Edge& e : g.edges()) {
    std::vector<int> shared;
    for (int w : g.neighbors(e.u)) {
      if (g.adjacent(e.v, w)) {
        shared.push_back(w);
        if (shared.size() == 2) return std::array<int, 4>{e.u, e.v, shared[0], shared[1]};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 4>> contains_induced_diamond(const Graph& g) {
  for (const Edge& e : g.edges()) {
    std::vector<int> shared;
    for (int w : g.neighbors(e.u)) {
      if (g.adjacent(e.v, w)) shared.push_back(w);
    }
    for (std::size_t i = 0; i < shared.size(); ++i) {
      for (std::size_t j = i + 1; j < shared.size(); ++j) {
        if (!g.adjacent(shared[i], shared[j])) return std::array<int, 4>{e.u, e.v, shared[i], shared[j]};
      }
    }
  }
  return std::nullopt;
}

BcnVerdict bcn_check(const Graph& g) {
  BcnVerdict verdict;
  const RegularityClass rc = detect_regularity(g);
  if (!rc.is_amply_regular() || rc.beta != 2) {
    verdict.reason = "not amply regular with beta = 2";
    return verdict;
  }
  if (2 * rc.d >= rc.alpha * (rc.alpha + 3)) {
    verdict.reason = "d >= alpha(alpha+3)/2";
    return verdict;
  }
  verdict.applicable = true;
  verdict.diamond = contains_induced_diamond(g);
  verdict.holds = !verdict.diamond.has_value();
  verdict.reason = verdict.holds ? "no induced K_{2,1,1}" : "contains an induced K_{2,1,1}";
  return verdict;
}

namespace {

enum Label : signed char { kOther = -1, kCenter, kInX, kInXBar, kInA, kInABar };

// Edge and degree tallies for a partitioned 2-ball.
struct PartitionCounts {
  int size_x = 0;
  int size_xbar = 0;
  int e_x_xbar = 0;
  int e_x_abar = 0;
  int e_xbar_a = 0;
  int e_x_n2 = 0;
  int e_xbar_n2 = 0;
  double sum_a = 0.0;     // Σ_{z∈A} d_X̄(z)² / d_N1(z)
  double sum_abar = 0.0;  // Σ_{z∈Ā} d_X(z)² / d_N1(z)
};

PartitionCounts count_partition(const Graph& g, int x, const std::vector<int>& X,
                                const std::vector<int>& A) {
  if (x < 0 || x >= g.order()) throw std::invalid_argument("partition center out of range");
  std::vector<signed char> label(g.order(), kOther);
  label[x] = kCenter;
  for (int y : g.neighbors(x)) label[y] = kInXBar;
  for (int y : g.neighbors(x)) {
    for (int z : g.neighbors(y)) {
      if (label[z] == kOther) label[z] = kInABar;
    }
  }
  for (int v : X) {
    if (v < 0 || v >= g.order() || label[v] != kInXBar) {
      throw std::invalid_argument("X must be a duplicate-free subset of N1(x)");
    }
    label[v] = kInX;
  }
  for (int v : A) {
    if (v < 0 || v >= g.order() || label[v] != kInABar) {
      throw std::invalid_argument("A must be a duplicate-free subset of N2(x)");
    }
    label[v] = kInA;
  }

  PartitionCounts c;
  for (int v = 0; v < g.order(); ++v) {
    const Label lv = static_cast<Label>(label[v]);
    if (lv == kInX) ++c.size_x;
    if (lv == kInXBar) ++c.size_xbar;
    if (lv != kInA && lv != kInABar) continue;
    int to_x = 0;
    int to_xbar = 0;
    for (int w : g.neighbors(v)) {
      to_x += label[w] == kInX;
      to_xbar += label[w] == kInXBar;
    }
    const int to_n1 = to_x + to_xbar;
    c.e_x_n2 += to_x;
    c.e_xbar_n2 += to_xbar;
    if (lv == kInA) {
      c.e_xbar_a += to_xbar;
      if (to_n1 > 0) c.sum_a += static_cast<double>(to_xbar) * to_xbar / to_n1;
    } else {
      c.e_x_abar += to_x;
      if (to_n1 > 0) c.sum_abar += static_cast<double>(to_x) * to_x / to_n1;
    }
  }
  for (const Edge& e : g.edges()) {
    const int a = label[e.u];
    const int b = label[e.v];
    if ((a == kInX && b == kInXBar) || (a == kInXBar && b == kInX)) ++c.e_x_xbar;
  }
  return c;
}

}  // namespace

double lemma1_gap(const Graph& g, const PartitionSpec& p) {
  const PartitionCounts c = count_partition(g, p.x, p.X, p.A);
  const double eps = p.epsilon;
  const double degree = g.degree(p.x);
  const double lhs = (1.0 - eps) * (1.0 - eps) *
                     (c.e_x_xbar + c.e_x_abar + c.e_xbar_a - c.sum_a - c.sum_abar);
  const double mass = eps * c.size_x + c.size_xbar;
  const double rhs = 0.25 * (2.0 * p.K + degree - 3.0) * (eps * eps * c.size_x + c.size_xbar) +
                     0.25 * (eps * eps * c.e_x_n2 + c.e_xbar_n2) - 0.5 * mass * mass;
  return lhs - rhs;
}

double corollary2_gap(const Graph& g, const RegularityClass& regularity, int x,
                      const std::vector<int>& X, const std::vector<int>& A, double K) {
  if (!regularity.is_edge_regular()) {
    throw std::invalid_argument("corollary2_gap needs an edge-regular graph");
  }
  const PartitionCounts c = count_partition(g, x, X, A);
  const double d = regularity.d;
  const double lhs = c.e_x_xbar + c.e_x_abar + c.e_xbar_a;
  const double rhs = (2.0 * K + 2.0 * d - regularity.alpha - 4.0) / (4.0 * d) * c.size_x * c.size_xbar;
  return lhs - rhs;
}

double corollary2_gap(const Graph& g, int x, const std::vector<int>& X, const std::vector<int>& A,
                      double K) {
  return corollary2_gap(g, detect_regularity(g), x, X, A, K);
}

}  // namespace curvlab
