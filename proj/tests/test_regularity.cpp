#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "curvlab/curvature.hpp"
#include "curvlab/enumerate.hpp"
#include "curvlab/generators.hpp"
#include "curvlab/graph_io.hpp"
#include "curvlab/regularity.hpp"
#include "support.hpp"

using namespace curvlab;

namespace {

using Kind = RegularityClass::Kind;

void expect_amply(const Graph& g, int d, int alpha, int beta) {
  const RegularityClass rc = detect_regularity(g);
  EXPECT_EQ(rc.kind, Kind::kAmplyRegular) << rc.diagnostic;
  EXPECT_EQ(rc.d, d);
  EXPECT_EQ(rc.alpha, alpha);
  EXPECT_EQ(rc.beta, beta);
}

// Parameters recounted from A² (walks of length two) and the distance
// matrix, with no use of the library's common-neighbour code.
std::optional<std::array<int, 3>> amply_by_walks(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
  const Eigen::MatrixXi a2 = a * a;
  const auto dist = distance_matrix(g);
  std::set<int> degrees, alphas, betas;
  for (int u = 0; u < n; ++u) {
    degrees.insert(a2(u, u));
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (dist[u][v] == 1) alphas.insert(a2(u, v));
      if (dist[u][v] == 2) betas.insert(a2(u, v));
    }
  }
  if (degrees.size() != 1 || alphas.size() != 1 || betas.size() != 1) return std::nullopt;
  return std::array<int, 3>{*degrees.begin(), *alphas.begin(), *betas.begin()};
}

std::vector<Graph> amply_corpus() {
  return {cycle_graph(4),        complete_bipartite_graph(3, 3), complete_bipartite_graph(4, 4),
          hypercube_graph(2),    hypercube_graph(3),             hypercube_graph(4),
          hypercube_graph(5),    triangular_graph(5),            triangular_graph(6),
          triangular_graph(7),   hamming2_graph(3),              hamming2_graph(4),
          hamming2_graph(5),     paley_graph(13),                petersen_graph(),
          cycle_graph(5),        cycle_graph(7),                 beta1_counterexample()};
}

// Lemma sides recomputed term by term from vertex sets.
double lemma_gap_by_sets(const Graph& g, int x, const std::vector<int>& X, const std::vector<int>& A,
                         double eps, double K) {
  const auto dist = bfs_distances(g, x);
  const std::set<int> sx(X.begin(), X.end());
  const std::set<int> sa(A.begin(), A.end());
  std::set<int> sxbar, sabar, n1, n2;
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] == 1) {
      n1.insert(v);
      if (!sx.count(v)) sxbar.insert(v);
    } else if (dist[v] == 2) {
      n2.insert(v);
      if (!sa.count(v)) sabar.insert(v);
    }
  }
  auto e = [&](const std::set<int>& s, const std::set<int>& t) {
    int count = 0;
    for (int u : s) {
      for (int v : t) count += g.adjacent(u, v);
    }
    return count;
  };
  auto deg_into = [&](int z, const std::set<int>& s) {
    int count = 0;
    for (int v : s) count += g.adjacent(z, v);
    return count;
  };
  double sum_a = 0, sum_abar = 0;
  for (int z : sa) sum_a += std::pow(deg_into(z, sxbar), 2) / deg_into(z, n1);
  for (int z : sabar) sum_abar += std::pow(deg_into(z, sx), 2) / deg_into(z, n1);
  const double lhs = std::pow(1 - eps, 2) * (e(sx, sxbar) + e(sx, sabar) + e(sxbar, sa) - sum_a - sum_abar);
  const double nx = static_cast<double>(sx.size());
  const double nxbar = static_cast<double>(sxbar.size());
  const double rhs = 0.25 * (2 * K + g.degree(x) - 3) * (eps * eps * nx + nxbar) +
                     0.25 * (eps * eps * e(sx, n2) + e(sxbar, n2)) - 0.5 * std::pow(eps * nx + nxbar, 2);
  return lhs - rhs;
}

PartitionSpec random_partition(std::mt19937_64& rng, const Graph& g, int x, double K) {
  PartitionSpec p;
  p.x = x;
  p.K = K;
  p.epsilon = support::uniform(rng, -3, 3);
  const auto dist = bfs_distances(g, x);
  const double qx = support::uniform(rng);
  const double qa = support::uniform(rng);
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] == 1 && support::uniform(rng) < qx) p.X.push_back(v);
    if (dist[v] == 2 && support::uniform(rng) < qa) p.A.push_back(v);
  }
  return p;
}

}  // namespace

TEST(Regularity, KnownParameters) {
  expect_amply(cycle_graph(4), 2, 0, 2);
  expect_amply(complete_bipartite_graph(3, 3), 3, 0, 3);
  expect_amply(petersen_graph(), 3, 0, 1);
  expect_amply(hypercube_graph(3), 3, 0, 2);
  expect_amply(triangular_graph(5), 6, 3, 4);
  expect_amply(hamming2_graph(3), 4, 1, 2);
  expect_amply(paley_graph(13), 6, 2, 3);
  expect_amply(beta1_counterexample(), 3, 0, 1);
  expect_amply(cycle_graph(5), 2, 0, 1);
}

TEST(Regularity, WeakerClasses) {
  const RegularityClass k4 = detect_regularity(complete_graph(4));
  EXPECT_EQ(k4.kind, Kind::kEdgeRegular);
  EXPECT_EQ(k4.alpha, 2);
  const RegularityClass empty = detect_regularity(from_edge_list(4, {}));
  EXPECT_EQ(empty.kind, Kind::kRegular);
  EXPECT_EQ(empty.d, 0);
  const RegularityClass path = detect_regularity(path_graph(4));
  EXPECT_EQ(path.kind, Kind::kNotRegular);
  ASSERT_TRUE(path.first_violation.has_value());
  EXPECT_NE(path_graph(4).degree(path.first_violation->first), path_graph(4).degree(path.first_violation->second));
  // prism: 3-regular, edges on triangles have 1 common neighbour, rungs 0
  const Graph prism = cartesian_product(cycle_graph(3), path_graph(2));
  const RegularityClass pr = detect_regularity(prism);
  EXPECT_EQ(pr.kind, Kind::kRegular);
  ASSERT_TRUE(pr.first_violation.has_value());
  // K3□K4: edges along K3 have one common neighbour, along K4 two
  EXPECT_EQ(detect_regularity(cartesian_product(complete_graph(3), complete_graph(4))).kind, Kind::kRegular);
  expect_amply(hamming2_graph(4), 6, 2, 2);
  EXPECT_EQ(to_string(Kind::kAmplyRegular), "amply_regular");
}

TEST(Regularity, RecountByWalks) {
  for (const Graph& g : amply_corpus()) {
    const RegularityClass rc = detect_regularity(g);
    const auto walks = amply_by_walks(g);
    ASSERT_TRUE(walks.has_value());
    EXPECT_EQ((std::array<int, 3>{rc.d, rc.alpha, rc.beta}), *walks);
  }
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const RegularityClass rc = detect_regularity(g);
      const auto walks = amply_by_walks(g);
      const bool complete = g.size() == n * (n - 1) / 2;
      ASSERT_EQ(rc.is_amply_regular(), walks.has_value() && !complete);
      if (rc.is_amply_regular()) {
        ASSERT_EQ((std::array<int, 3>{rc.d, rc.alpha, rc.beta}), *walks);
      }
    }
  }
}

TEST(Regularity, CommonNeighbourCounts) {
  const Graph g = petersen_graph();
  const auto common = common_neighbor_counts(g);
  for (int u = 0; u < 10; ++u) {
    EXPECT_EQ(common[u][u], 3);
    for (int v = 0; v < 10; ++v) {
      if (u != v) {
        EXPECT_EQ(common[u][v], g.adjacent(u, v) ? 0 : 1);
      }
    }
  }
}

TEST(Regularity, LocalSpectrum) {
  const auto c4 = local_graph_spectrum(cycle_graph(4), 0);
  ASSERT_EQ(c4.size(), 2u);
  EXPECT_NEAR(c4[0], 0, 1e-12);
  EXPECT_NEAR(c4[1], 0, 1e-12);
  const auto k4 = local_graph_spectrum(complete_graph(4), 0);
  ASSERT_EQ(k4.size(), 3u);
  EXPECT_NEAR(k4[0], -1, 1e-12);
  EXPECT_NEAR(k4[1], -1, 1e-12);
  EXPECT_NEAR(k4[2], 2, 1e-12);
  for (double v : local_graph_spectrum(petersen_graph(), 3)) EXPECT_NEAR(v, 0, 1e-12);
  EXPECT_THROW(local_graph_spectrum(from_edge_list(2, {}), 0), std::domain_error);
}

TEST(Regularity, ClosedFormMatchesEigenvalueCurvature) {
  for (const Graph& g : amply_corpus()) {
    const RegularityClass rc = detect_regularity(g);
    for (int x = 0; x < g.order(); ++x) {
      const double formula = arg_curvature_formula(rc.d, rc.alpha, rc.beta, local_graph_spectrum(g, x));
      EXPECT_NEAR(formula, bakry_emery_curvature(g, x).curvature, 1e-8) << write_graph6(g) << " x=" << x;
    }
  }
  EXPECT_THROW(arg_curvature_formula(3, 0, 0, {0.0}), std::invalid_argument);
  EXPECT_THROW(arg_curvature_formula(3, 0, 1, {}), std::invalid_argument);
}

TEST(Regularity, DiamondMatchesSubsetScan) {
  EXPECT_TRUE(contains_diamond(complete_graph(4)).has_value());
  EXPECT_FALSE(contains_diamond(cycle_graph(5)).has_value());
  EXPECT_FALSE(contains_diamond(cycle_graph(4)).has_value());
  EXPECT_FALSE(contains_induced_diamond(complete_graph(4)).has_value());
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const Graph g = support::random_graph(rng, n, support::uniform(rng, 0.1, 0.7));
    const auto found = contains_diamond(g);
    ASSERT_EQ(found.has_value(), support::diamond_by_subsets(g));
    ASSERT_EQ(contains_induced_diamond(g).has_value(), support::diamond_by_subsets(g, true));
    if (found) {
      const auto [c, d, a, b] = *found;
      EXPECT_TRUE(g.adjacent(c, d) && g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(d, a) &&
                  g.adjacent(d, b) && a != b);
    }
  }
}

TEST(Regularity, BcnVerdicts) {
  EXPECT_FALSE(bcn_check(cycle_graph(4)).applicable);
  EXPECT_FALSE(bcn_check(hamming2_graph(3)).applicable);   // 4 < 2 fails
  EXPECT_FALSE(bcn_check(petersen_graph()).applicable);    // beta = 1
  EXPECT_FALSE(bcn_check(path_graph(4)).applicable);
  EXPECT_FALSE(bcn_check(cartesian_product(complete_graph(4), complete_graph(2))).applicable);
  // K5□K5 (d = 8, α = 3) is in the regime and contains K4, but no induced diamond
  const Graph k55 = hamming2_graph(5);
  const BcnVerdict v = bcn_check(k55);
  EXPECT_TRUE(v.applicable);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(contains_diamond(k55).has_value());
}

TEST(Regularity, LemmaGapHandValues) {
  const Graph c4 = cycle_graph(4);
  PartitionSpec p{0, {1, 3}, {2}, 1.0, 2.0};
  EXPECT_NEAR(lemma1_gap(c4, p), 0.0, 1e-12);
  // Corollary with |X| = 1: e(X,X̄) = 0, e(X,Ā) = 0, e(X̄,A) = 1; RHS = 4/8
  EXPECT_NEAR(corollary2_gap(c4, 0, {1}, {2}, 2.0), 0.5, 1e-12);
  EXPECT_NEAR(corollary2_gap(c4, 0, {}, {2}, 2.0), 2.0, 1e-12);  // LHS = e(X̄, A) = 2
  EXPECT_THROW(corollary2_gap(path_graph(4), 1, {0}, {3}, 0.0), std::invalid_argument);
  EXPECT_THROW(lemma1_gap(c4, PartitionSpec{0, {2}, {}, 0.5, 0.0}), std::invalid_argument);
  EXPECT_THROW(lemma1_gap(c4, PartitionSpec{0, {1}, {3}, 0.5, 0.0}), std::invalid_argument);
}

TEST(Regularity, LemmaMatchesSetRecount) {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = support::random_connected_graph(rng, 10, 0.3);
    const int x = std::uniform_int_distribution<int>(0, 9)(rng);
    const PartitionSpec p = random_partition(rng, g, x, support::uniform(rng, -2, 2));
    EXPECT_NEAR(lemma1_gap(g, p), lemma_gap_by_sets(g, x, p.X, p.A, p.epsilon, p.K), 1e-9);
  }
}

TEST(Regularity, LemmaAndCorollarySoundAtTrueCurvature) {
  std::mt19937_64 rng(4);
  for (const Graph& g : {petersen_graph(), hypercube_graph(3), paley_graph(13), triangular_graph(5)}) {
    const RegularityClass rc = detect_regularity(g);
    for (int x = 0; x < g.order(); ++x) {
      const double K = bakry_emery_curvature(g, x).curvature;
      for (int trial = 0; trial < 100; ++trial) {
        const PartitionSpec p = random_partition(rng, g, x, K);
        ASSERT_GE(lemma1_gap(g, p), -1e-9);
        ASSERT_GE(corollary2_gap(g, rc, x, p.X, p.A, K), -1e-9);
      }
    }
  }
}

// ---- enumeration -------------------------------------------------------------

TEST(Enumerate, ConnectedGraphCounts) {
  // OEIS A001349
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853, 11117, 261080};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(connected_graphs(n).size(), expected[n - 1]) << "n=" << n;
  EXPECT_EQ(connected_graph_codes(9).size(), expected[8]);
}

TEST(Enumerate, CanonicalCodeIsInvariant) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 11)(rng);
    const Graph g = support::random_graph(rng, n, support::uniform(rng));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    const Graph h = from_edge_list(n, edges);
    ASSERT_EQ(canonical_code(g), canonical_code(h));
    const std::uint64_t code = canonical_code(g);
    ASSERT_EQ(canonical_code(graph_from_code(n, code)), code);
  }
}

TEST(Enumerate, DistinguishesNonIsomorphic) {
  const Graph k33 = complete_bipartite_graph(3, 3);
  const Graph prism = cartesian_product(cycle_graph(3), path_graph(2));
  EXPECT_NE(canonical_code(k33), canonical_code(prism));
  std::set<std::uint64_t> codes;
  for (const Graph& g : connected_graphs(6)) codes.insert(canonical_code(g));
  EXPECT_EQ(codes.size(), 112u);
  for (const Graph& g : connected_graphs(6)) EXPECT_TRUE(is_connected(g));
  EXPECT_THROW(canonical_code(cycle_graph(12)), std::invalid_argument);
  EXPECT_THROW(connected_graphs(0), std::invalid_argument);
}
