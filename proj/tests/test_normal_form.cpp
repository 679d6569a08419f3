#include <gtest/gtest.h>

#include "tautbraid/normal_form.hpp"

using namespace tautbraid;

namespace {
NormalizedThreeBraid norm(const char* s) { return normalize_3braid(parse_braid(s)); }
}  // namespace

TEST(Normalize, PretzelIsAlreadyNormal) {
  auto r = normalize_search(parse_braid("w=3: s1^7 s2^2 s1^2 s2"));
  ASSERT_EQ(r.normal.kind, NormalizedThreeBraid::Kind::Blocks);
  EXPECT_EQ(r.normal.blocks, (std::vector<Block>{{7, 2}, {2, 1}}));
  EXPECT_TRUE(r.moves.empty());
}

TEST(Normalize, SingleBlockWithOneS2IsATorusKnot) {
  auto n = norm("w=3: s1^5 s2");
  EXPECT_EQ(n.kind, NormalizedThreeBraid::Kind::ReducedTorus);
  EXPECT_EQ(n.torus_n, 5);
}

TEST(Normalize, FullTwistPower) {
  auto n = norm("w=3: (s1 s2)^4");
  ASSERT_EQ(n.kind, NormalizedThreeBraid::Kind::Blocks);
  EXPECT_EQ(n.blocks, (std::vector<Block>{{3, 1}, {3, 1}}));
  EXPECT_EQ(genus_3braid(n).genus, 3);
}

TEST(Normalize, DegenerateWords) {
  EXPECT_EQ(norm("w=3: s1 s2").kind, NormalizedThreeBraid::Kind::Unknot);
  EXPECT_EQ(norm("w=2: s1").kind, NormalizedThreeBraid::Kind::Unknot);
  auto t = norm("w=3: s1^3 s2");
  EXPECT_EQ(t.kind, NormalizedThreeBraid::Kind::ReducedTorus);
  EXPECT_EQ(t.torus_n, 3);
  auto u = norm("w=3: s1 s2^5");
  EXPECT_EQ(u.kind, NormalizedThreeBraid::Kind::ReducedTorus);
  EXPECT_EQ(u.torus_n, 5);
  auto v = norm("w=2: s1^7");
  EXPECT_EQ(v.kind, NormalizedThreeBraid::Kind::ReducedTorus);
  EXPECT_EQ(v.torus_n, 7);
}

TEST(Normalize, IsolatedS1IsEliminated) {
  // s1 s2^2 s1^2 s2 reduces to a torus knot after destabilization.
  auto n = norm("w=3: s1 s2^2 s1^2 s2");
  EXPECT_EQ(n.kind, NormalizedThreeBraid::Kind::ReducedTorus);
  EXPECT_EQ(n.torus_n, 5);
}

TEST(Normalize, RejectsLinksAndWideBraids) {
  EXPECT_THROW(norm("w=3: s1^2 s2^2"), Error);
  EXPECT_THROW(norm("w=4: s1 s2 s3"), Error);
}

TEST(Normalize, SmallDepthBoundIsAnExplicitFailure) {
  NormalizationOptions o;
  o.depth_bound = 1;
  try {
    normalize_search(parse_braid("w=3: (s1 s2)^4"), o);
    FAIL() << "expected a normalization error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Normalization);
  }
}

TEST(Normalize, MovesReplayToTheResult) {
  for (const char* s : {"w=3: (s1 s2)^4", "w=3: s2 s1^7 s2^2 s1^2", "w=3: s1 s2^2 s1^2 s2", "w=3: s2^3 s1^3"}) {
    BraidWord b = parse_braid(s);
    auto r = normalize_search(b);
    WordState st{b.strand_count, b.letters};
    ASSERT_EQ(r.path.size(), r.moves.size() + 1);
    for (std::size_t i = 0; i < r.moves.size(); ++i) {
      auto next = apply_move(st, r.moves[i]);
      ASSERT_TRUE(next.has_value());
      const Move& m = r.moves[i];
      if (m.kind == MoveKind::Destabilize) {
        EXPECT_EQ(next->strand_count, st.strand_count - 1);
        EXPECT_EQ(next->letters.size() + 1, st.letters.size());
      } else {
        EXPECT_EQ(next->letters.size(), st.letters.size());
        EXPECT_EQ(cycle_type(strand_permutation({next->strand_count, next->letters})),
                  cycle_type(strand_permutation({st.strand_count, st.letters})));
      }
      st = *next;
      EXPECT_EQ(st, r.path[i + 1]);
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(NormalizedThreeBraid::from_blocks({{3, 3}})).cls, BraidClass::TypeA);
  EXPECT_EQ(classify(NormalizedThreeBraid::from_blocks({{3, 1}, {3, 1}})).cls, BraidClass::TypeB);
  EXPECT_EQ(classify(NormalizedThreeBraid::from_blocks({{7, 2}, {2, 1}})).cls, BraidClass::TypeC);
  EXPECT_EQ(classify(NormalizedThreeBraid::reduced_torus(3)).cls, BraidClass::ReducedTorus);
  EXPECT_EQ(classify(NormalizedThreeBraid::unknot()).cls, BraidClass::Unknot);
}

TEST(Classify, TwoBlockRotationPutsLongS2RunFirst) {
  auto c = classify(NormalizedThreeBraid::from_blocks({{2, 1}, {3, 2}}));
  EXPECT_EQ(c.cls, BraidClass::TypeC);
  EXPECT_EQ(c.rotation, 1);
  EXPECT_EQ(rotate_blocks({{2, 1}, {3, 2}}, c.rotation), (std::vector<Block>{{3, 2}, {2, 1}}));
  // Three or more blocks are used as given.
  EXPECT_EQ(classify(NormalizedThreeBraid::from_blocks({{2, 1}, {2, 1}, {2, 2}})).rotation, 0);
}

TEST(Genus, ThreeBraids) {
  auto g = genus_3braid(NormalizedThreeBraid::from_blocks({{7, 2}, {2, 1}}));
  EXPECT_EQ(g.two_g_minus_one, 9);
  EXPECT_EQ(g.genus, 5);
  EXPECT_EQ(g.euler_characteristic, -9);
  EXPECT_EQ(genus_3braid(NormalizedThreeBraid::reduced_torus(3)).genus, 1);
  EXPECT_EQ(genus_3braid(NormalizedThreeBraid::from_blocks({{2, 1}, {2, 1}})).two_g_minus_one, 3);
  auto u = genus_3braid(NormalizedThreeBraid::unknot());
  EXPECT_TRUE(u.degenerate);
  EXPECT_EQ(u.genus, 0);
}

TEST(Genus, OneBridgeFormulaMatchesBandCount) {
  EXPECT_EQ(genus_1bridge({7, 4, 2}).genus, 5);
  for (int w = 4; w <= 9; ++w)
    for (int b = 1; b <= w - 2; ++b)
      for (int t = 1; t <= 4; ++t) {
        OneBridgeBraid p{w, b, t};
        BraidWord word = braid_of_1bridge(p);
        if (!closure_is_knot(word)) {
          EXPECT_THROW(genus_1bridge(p), Error);
          continue;
        }
        GenusData g = genus_1bridge(p);
        EXPECT_EQ(g.genus, genus_of_positive_braid(word).genus);
        EXPECT_EQ(g.euler_characteristic, 1 - 2 * g.genus);
        EXPECT_EQ(g.two_g_minus_one, 2 * g.genus - 1);
      }
}

TEST(Genus, SmallestOneBridgeParametersGiveALink) {
  // chi = 4 - (3 + 1) = 0 is even, so K(4,1,1) closes up to two components.
  EXPECT_EQ(closure_component_count(braid_of_1bridge({4, 1, 1})), 2);
  EXPECT_THROW(genus_1bridge({4, 1, 1}), Error);
}
