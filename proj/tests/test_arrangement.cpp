#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tautbraid/arrangement.hpp"

using namespace tautbraid;

TEST(Arrangement, EmptyDiskIsOneFace) {
  Arrangement A = build_arrangement(5, {});
  ASSERT_EQ(A.faces.size(), 1u);
  EXPECT_EQ(A.faces[0].circle_edges.size(), 5u);
  EXPECT_TRUE(A.faces[0].chord_sides.empty());
}

TEST(Arrangement, SingleChordSplitsTheDisk) {
  Arrangement A = build_arrangement(5, {{0, 3}});
  ASSERT_EQ(A.faces.size(), 2u);
  const int inner = A.face_of_circle_edge[1];
  EXPECT_EQ(A.face_of_circle_edge[0], inner);
  EXPECT_EQ(A.face_of_circle_edge[2], inner);
  EXPECT_NE(A.face_of_circle_edge[3], inner);
  EXPECT_EQ(A.face_of_circle_edge[4], A.face_of_circle_edge[3]);
  const auto& f = A.faces[static_cast<std::size_t>(inner)];
  ASSERT_EQ(f.chord_sides.size(), 1u);
  EXPECT_TRUE(f.chord_sides[0].interval_side);
  const auto& g = A.faces[static_cast<std::size_t>(A.face_of_circle_edge[3])];
  ASSERT_EQ(g.chord_sides.size(), 1u);
  EXPECT_FALSE(g.chord_sides[0].interval_side);
}

TEST(Arrangement, TwoCrossingChords) {
  Arrangement A = build_arrangement(4, {{0, 2}, {1, 3}});
  ASSERT_EQ(A.crossings.size(), 1u);
  ASSERT_EQ(A.faces.size(), 4u);
  for (const auto& f : A.faces) {
    EXPECT_EQ(f.crossings, std::vector<int>{0});
    EXPECT_EQ(f.chord_sides.size(), 2u);
    EXPECT_EQ(f.circle_edges.size(), 1u);
  }
  // Only the face cut off by both intervals sees both interval sides.
  int both = 0;
  for (const auto& f : A.faces)
    both += std::all_of(f.chord_sides.begin(), f.chord_sides.end(), [](const ChordSide& s) { return s.interval_side; });
  EXPECT_EQ(both, 1);
}

TEST(Arrangement, NestedChordsDoNotCross) {
  Arrangement A = build_arrangement(6, {{0, 5}, {1, 4}, {2, 3}});
  EXPECT_TRUE(A.crossings.empty());
  EXPECT_EQ(A.faces.size(), 4u);
}

TEST(Arrangement, FaceCountMatchesEulerFormula) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int nc = 1 + static_cast<int>(rng() % 8);
    const int N = 2 * nc + static_cast<int>(rng() % 4);
    std::vector<int> st(static_cast<std::size_t>(N));
    std::iota(st.begin(), st.end(), 0);
    std::shuffle(st.begin(), st.end(), rng);
    std::vector<std::pair<int, int>> chords;
    for (int c = 0; c < nc; ++c) {
      auto [a, b] = std::minmax(st[static_cast<std::size_t>(2 * c)], st[static_cast<std::size_t>(2 * c + 1)]);
      chords.emplace_back(a, b);
    }
    Arrangement A = build_arrangement(N, chords);
    EXPECT_EQ(A.faces.size(), 1 + chords.size() + A.crossings.size());
    // every circle edge and every chord side belongs to exactly one face
    std::size_t edges = 0, sides = 0, corners = 0;
    for (const auto& f : A.faces) {
      edges += f.circle_edges.size();
      sides += f.chord_sides.size();
      corners += f.crossings.size();
    }
    EXPECT_EQ(edges, static_cast<std::size_t>(N));
    EXPECT_GE(sides, 2 * chords.size());
    EXPECT_EQ(corners, 4 * A.crossings.size());
  }
}
