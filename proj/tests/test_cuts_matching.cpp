#include <gtest/gtest.h>

#include <random>

#include "curvlab/cuts.hpp"
#include "curvlab/enumerate.hpp"
#include "curvlab/generators.hpp"
#include "curvlab/matching.hpp"
#include "support.hpp"

using namespace curvlab;

// ---- cuts --------------------------------------------------------------------

TEST(Cuts, KnownConnectivities) {
  EXPECT_EQ(edge_connectivity(cycle_graph(6)).lambda, 2);
  EXPECT_EQ(edge_connectivity(path_graph(5)).lambda, 1);
  EXPECT_EQ(edge_connectivity(complete_graph(6)).lambda, 5);
  EXPECT_EQ(edge_connectivity(petersen_graph()).lambda, 3);
  EXPECT_EQ(edge_connectivity(hypercube_graph(4)).lambda, 4);
  EXPECT_EQ(edge_connectivity(beta1_counterexample()).lambda, 2);
  EXPECT_EQ(edge_connectivity(from_edge_list(1, {})).lambda, 0);
  EXPECT_THROW(edge_connectivity(from_edge_list(0, {})), std::invalid_argument);
}

TEST(Cuts, DisconnectedGraphGivesComponentCut) {
  const Graph g = disjoint_union(cycle_graph(3), cycle_graph(4));
  const EdgeConnectivity ec = edge_connectivity(g);
  EXPECT_EQ(ec.lambda, 0);
  ASSERT_TRUE(ec.cert.has_value());
  EXPECT_EQ(ec.cert->side, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(verify_cut(g, *ec.cert));
}

TEST(Cuts, CertificateChecks) {
  const Graph g = cycle_graph(5);
  const CutCertificate c = make_cut(g, {0, 1});
  EXPECT_EQ(c.value, 2);
  EXPECT_TRUE(verify_cut(g, c));
  EXPECT_FALSE(is_star_cut(g, c));
  EXPECT_TRUE(is_star_cut(g, make_cut(g, {0, 1, 2, 3})));
  CutCertificate forged = c;
  forged.value = 1;
  EXPECT_FALSE(verify_cut(g, forged));
  EXPECT_THROW(make_cut(g, {}), std::invalid_argument);
  EXPECT_THROW(make_cut(g, {0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST(Cuts, StoerWagnerMatchesBruteForceExhaustive) {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const EdgeConnectivity ec = edge_connectivity(g);
      const MinCutEnumeration brute = min_cut_bruteforce(g);
      ASSERT_EQ(ec.lambda, brute.lambda);
      ASSERT_TRUE(ec.cert.has_value());
      ASSERT_TRUE(verify_cut(g, *ec.cert));
      ASSERT_EQ(ec.cert->value, ec.lambda);
    }
  }
}

TEST(Cuts, StoerWagnerMatchesBruteForceRandom) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 14)(rng);
    const Graph g = support::random_graph(rng, n, support::uniform(rng, 0.1, 0.9));
    EXPECT_EQ(edge_connectivity(g).lambda, min_cut_bruteforce(g).lambda);
  }
}

TEST(Cuts, MaxFlowMatchesMenger) {
  const Graph g = hypercube_graph(4);
  EXPECT_EQ(max_flow(g, {0}, {15}, 100).value, 4);
  EXPECT_EQ(max_flow(g, {0}, {15}, 2).value, 2);  // early stop
  const Graph p = path_graph(4);
  const FlowResult r = max_flow(p, {0}, {3}, 10);
  EXPECT_EQ(r.value, 1);
  EXPECT_TRUE(std::find(r.source_side.begin(), r.source_side.end(), 0) != r.source_side.end());
}

TEST(Cuts, RestrictedConnectivityMatchesBruteForce) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 10)(rng);
    const Graph g = support::random_connected_graph(rng, n, 0.35);
    const RestrictedConnectivity r = restricted_edge_connectivity(g);
    std::optional<int> best;
    for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
      std::vector<int> side{0};
      for (int v = 1; v < n; ++v) {
        if (mask >> (v - 1) & 1U) side.push_back(v);
      }
      const int other = n - static_cast<int>(side.size());
      if (side.size() < 2 || other < 2) continue;
      const int value = make_cut(g, side).value;
      if (!best || value < *best) best = value;
    }
    ASSERT_EQ(r.lambda, best);
    if (r.cert) {
      EXPECT_TRUE(verify_cut(g, *r.cert));
      EXPECT_EQ(r.cert->value, *r.lambda);
      EXPECT_GE(r.cert->side.size(), 2u);
      EXPECT_LE(r.cert->side.size(), static_cast<std::size_t>(n - 2));
    }
  }
  EXPECT_THROW(restricted_edge_connectivity(path_graph(3)), std::invalid_argument);
}

TEST(Cuts, ClassificationOfMinimumCuts) {
  const MinCutClassification c4 = classify_min_cuts(cycle_graph(4));
  EXPECT_FALSE(c4.stars_only);
  ASSERT_TRUE(c4.witness.has_value());
  EXPECT_FALSE(is_star_cut(cycle_graph(4), *c4.witness));
  EXPECT_TRUE(classify_min_cuts(hypercube_graph(3)).stars_only);
  EXPECT_TRUE(classify_min_cuts(petersen_graph()).stars_only);
  EXPECT_FALSE(classify_min_cuts(path_graph(4)).stars_only);  // the middle edge is a minimum cut
  EXPECT_FALSE(classify_min_cuts(beta1_counterexample()).stars_only);
}

TEST(Cuts, ClassificationMatchesBruteForceEnumeration) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const MinCutEnumeration all = min_cut_bruteforce(g);
      bool stars = true;
      for (const CutCertificate& c : all.cuts) stars = stars && is_star_cut(g, c);
      const MinCutClassification cls = classify_min_cuts(g);
      ASSERT_EQ(cls.stars_only, stars);
      if (cls.witness) {
        EXPECT_TRUE(verify_cut(g, *cls.witness));
        EXPECT_EQ(cls.witness->value, all.lambda);
        EXPECT_FALSE(is_star_cut(g, *cls.witness));
      }
    }
  }
}

// ---- matching ----------------------------------------------------------------

TEST(Matching, KnownGraphs) {
  EXPECT_TRUE(maximum_matching(petersen_graph()).is_perfect);
  EXPECT_TRUE(maximum_matching(hypercube_graph(5)).is_perfect);
  EXPECT_EQ(maximum_matching(cycle_graph(7)).edges.size(), 3u);
  EXPECT_FALSE(maximum_matching(complete_bipartite_graph(1, 3)).is_perfect);
  EXPECT_TRUE(maximum_matching(from_edge_list(0, {})).is_perfect);
  // three triangles hung on a center: the classic Tutte obstruction
  const Graph g = from_edge_list(10, {{0, 1}, {0, 4}, {0, 7}, {1, 2}, {2, 3}, {1, 3},
                                      {4, 5}, {5, 6}, {4, 6}, {7, 8}, {8, 9}, {7, 9}});
  const Matching m = maximum_matching(g);
  EXPECT_FALSE(m.is_perfect);
  EXPECT_EQ(m.edges.size(), 4u);
  const auto s = tutte_violation(g);
  ASSERT_TRUE(s.has_value());
  EXPECT_GT(odd_components_after_removal(g, *s), static_cast<int>(s->size()));
}

TEST(Matching, VerifyRejectsBadMatchings) {
  const Graph g = cycle_graph(4);
  Matching m = maximum_matching(g);
  EXPECT_TRUE(verify_matching(g, m));
  Matching overlap{{{0, 1}, {1, 2}}, false};
  EXPECT_FALSE(verify_matching(g, overlap));
  Matching missing{{{0, 2}}, false};
  EXPECT_FALSE(verify_matching(g, missing));
  m.is_perfect = false;
  EXPECT_FALSE(verify_matching(g, m));
}

TEST(Matching, BlossomMatchesBruteForce) {
  std::mt19937_64 rng(314);
  int checked = 0;
  while (checked < 400) {
    const int n = std::uniform_int_distribution<int>(1, 14)(rng);
    const Graph g = support::random_graph(rng, n, support::uniform(rng, 0.05, 0.6));
    if (g.size() > 20) continue;
    ++checked;
    const Matching m = maximum_matching(g);
    ASSERT_TRUE(verify_matching(g, m));
    ASSERT_EQ(static_cast<int>(m.edges.size()), matching_bruteforce(g));
  }
}

TEST(Matching, PerfectnessMatchesTutte) {
  std::mt19937_64 rng(271);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * std::uniform_int_distribution<int>(1, 6)(rng);
    const Graph g = support::random_graph(rng, n, support::uniform(rng, 0.1, 0.5));
    const bool perfect = maximum_matching(g).is_perfect;
    const auto s = tutte_violation(g);
    ASSERT_EQ(perfect, !s.has_value());
    if (s) {
      EXPECT_GT(odd_components_after_removal(g, *s), static_cast<int>(s->size()));
    }
  }
}
