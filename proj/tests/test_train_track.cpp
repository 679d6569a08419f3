#include <gtest/gtest.h>

#include <random>

#include "tautbraid/oracle.hpp"
#include "tautbraid/pipeline.hpp"

using namespace tautbraid;

namespace {

BoundarySector sector(int letter, KPosition a, KPosition b) {
  BoundarySector s;
  s.letter = letter;
  s.minus_end = a;
  s.plus_end = b;
  return s;
}

}  // namespace

TEST(Linking, InterleavingOnTheBoundary) {
  auto x = sector(0, {1, 0}, {5, 0});
  auto inside = sector(1, {2, 0}, {3, 0});
  auto across = sector(2, {4, 0}, {8, 0});
  auto apart = sector(3, {6, 0}, {7, 0});
  EXPECT_FALSE(sectors_linked(x, inside));
  EXPECT_TRUE(sectors_linked(x, across));
  EXPECT_TRUE(sectors_linked(across, x));
  EXPECT_FALSE(sectors_linked(x, apart));
  // sub-positions break ties inside one corner
  EXPECT_TRUE(sectors_linked(sector(0, {1, 0}, {1, 2}), sector(1, {1, 1}, {4, 0})));
  auto pairs = linked_pairs({x, inside, across, apart});
  EXPECT_EQ(pairs, (std::vector<std::pair<int, int>>{{0, 2}}));
  EXPECT_EQ(max_unlinked({x, inside, across, apart}), 3);
}

TEST(Linking, PretzelHasOneLinkedPair) {
  Analysis a = analyze_3braid(parse_braid("w=3: s1^7 s2^2 s1^2 s2"));
  EXPECT_EQ(a.evaluation.linked, (std::vector<std::pair<int, int>>{{7, 8}}));
  EXPECT_EQ(a.evaluation.k, 9);
  EXPECT_EQ(a.genus.two_g_minus_one, 9);
  ASSERT_TRUE(a.interval.has_value());
  EXPECT_EQ(a.interval->to_string(), "(-inf, 9)");
}

TEST(Linking, MaximalEndpointsFollowTheCusp) {
  Analysis a = analyze_3braid(parse_braid("w=3: s1^7 s2^2 s1^2 s2"));
  ASSERT_EQ(a.evaluation.endpoints.size(), a.evaluation.arcs.size());
  for (std::size_t i = 0; i < a.evaluation.arcs.size(); ++i)
    EXPECT_EQ(a.evaluation.endpoints[i].upper, a.evaluation.arcs[i].cusp == Cusp::Left);
}

TEST(IndependentSet, SmallGraphs) {
  EXPECT_EQ(max_independent_set(0, {}), 0);
  EXPECT_EQ(max_independent_set(3, {}), 3);
  EXPECT_EQ(max_independent_set(3, {{0, 1}, {1, 2}, {0, 2}}), 1);
  EXPECT_EQ(max_independent_set(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), 2);
  // Petersen graph
  std::vector<std::pair<int, int>> pet;
  for (int i = 0; i < 5; ++i) {
    pet.emplace_back(i, (i + 1) % 5);
    pet.emplace_back(i, i + 5);
    pet.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  EXPECT_EQ(max_independent_set(10, pet), 4);
}

TEST(IndependentSet, AgreesWithBruteForce) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 18);
    const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<int, int>> E;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (edge(rng)) E.emplace_back(a, b);
    EXPECT_EQ(max_independent_set(n, E), brute_force_mis(n, E));
  }
}

TEST(IndependentSet, WideGraphsUseSeveralWords) {
  // 130 isolated vertices plus a perfect matching on 70 more
  std::vector<std::pair<int, int>> E;
  for (int v = 130; v < 200; v += 2) E.emplace_back(v, v + 1);
  EXPECT_EQ(max_independent_set(200, E), 165);
}

TEST(SlopeInterval, Bounds) {
  std::vector<BoundarySector> one{sector(0, {0, 0}, {1, 0})};
  EXPECT_EQ(slope_interval(one, 1).upper_bound, 1);
  EXPECT_THROW(slope_interval({}, 0), Error);
  EXPECT_THROW(slope_interval(one, 2), Error);
}

TEST(Gamma, Table) {
  EXPECT_EQ(gamma_count({7, 4, 2}), 5);  // w odd, b even
  EXPECT_EQ(gamma_count({6, 2, 3}), 7);  // w even, b even
  EXPECT_EQ(gamma_count({6, 3, 3}), 8);  // w even, b odd
  EXPECT_EQ(gamma_count({7, 3, 2}), 5);  // w odd, b odd
  EXPECT_THROW(gamma_count({3, 1, 1}), Error);
}

TEST(Gamma, OneBridgeSweepReachesTheBound) {
  for (int w = 4; w <= 9; ++w)
    for (int b = 1; b <= w - 2; ++b)
      for (int t = 1; t <= 4; ++t) {
        OneBridgeBraid p{w, b, t};
        if (!closure_is_knot(braid_of_1bridge(p))) continue;
        Analysis a = analyze_1bridge(p);
        EXPECT_TRUE(a.passed()) << w << " " << b << " " << t;
        EXPECT_TRUE(a.evaluation.linked.empty());
        EXPECT_EQ(a.evaluation.k, gamma_count(p));
        EXPECT_GE(a.gamma, a.genus.genus);
      }
}
