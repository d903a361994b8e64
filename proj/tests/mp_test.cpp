#include "dmpsat/constructions.hpp"
#include "dmpsat/enumerate.hpp"
#include "dmpsat/mp.hpp"
#include "dmpsat/oracle.hpp"

#include "brute.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dmpsat;
using namespace dmpsat::testing_support;

TEST(Mp, Examples) {
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(mp(edgeless(n)), 1);
  EXPECT_EQ(mp(p3_box_kt(2)), 4);
  EXPECT_EQ(mp(bowtie()), 3);
  for (int n = 3; n <= 9; ++n)
    EXPECT_EQ(mp(star(n)), 2);
  EXPECT_EQ(mp(path(4)), 3);
  EXPECT_EQ(mp(cycle(6)), 6);
  EXPECT_EQ(mp(k4_minus_e()), 3);
  for (int m = 1; m <= 8; ++m)
    EXPECT_EQ(mp(complete(m)), m);
}

TEST(Mp, WitnessIsValid) {
  const auto w = mp_witness(p3_box_kt(2));
  EXPECT_EQ(w.size(), 4);
  EXPECT_TRUE(is_degree_monotone_path(p3_box_kt(2), w.vertices));
  for (std::size_t i = 1; i < w.degrees.size(); ++i)
    EXPECT_LE(w.degrees[i - 1], w.degrees[i]);
  const auto leaf_centre = mp_witness(star(5));
  ASSERT_EQ(leaf_centre.size(), 2);
  EXPECT_EQ(leaf_centre.vertices.back(), 0);
  EXPECT_EQ(mp_witness(complete(3)).size(), 3);
}

TEST(Mp, RejectsInvalidPath) {
  EXPECT_THROW((void)make_dm_path(path(4), {0, 2}), std::invalid_argument);
  EXPECT_THROW((void)make_dm_path(path(4), {0, 1, 0}), std::invalid_argument);
  EXPECT_NO_THROW((void)make_dm_path(path(4), {0, 1}));
}

TEST(MpProperty, MatchesOracleOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n)
    for (const auto & g : enumerate_graphs(n))
      ASSERT_EQ(mp(g), mp_oracle(g)) << graph6_encode(g);
}

TEST(MpProperty, MatchesOracleOnRandomEightVertexGraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(rng, 8, 0.2 + 0.6 * (trial % 5) / 4.0);
    ASSERT_EQ(mp(g), mp_oracle(g)) << graph6_encode(g);
  }
}

TEST(MpProperty, OrientationsAgree) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = random_graph(rng, 2 + trial % 11, 0.4);
    EXPECT_EQ(mp_oriented(g, Direction::non_decreasing), mp_oriented(g, Direction::non_increasing));
  }
}

TEST(MpProperty, LabelInvariance) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 11;
    const Graph g = random_graph(rng, n, 0.4);
    EXPECT_EQ(mp(g), mp(g.relabelled(random_permutation(rng, n))));
  }
}

TEST(MpProperty, DisjointUnionTakesMaximum) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph a = random_graph(rng, 1 + trial % 7, 0.5);
    const Graph b = random_graph(rng, 1 + trial % 6, 0.5);
    EXPECT_EQ(mp(disjoint_union({a, b})), std::max(mp(a), mp(b)));
  }
}

TEST(MpProperty, EdgeAdditionCanRaiseOrNot) {
  // Joining a leaf to a non-adjacent hub never helps; the cycle-plus-hub
  // family gains two vertices from one edge.
  const Graph p = path(4);
  EXPECT_EQ(mp(add_edge(p, 0, 2)), mp(p));
  const Graph g = g_counterexample(4);
  const auto e = g_counterexample_gap_edge(4);
  EXPECT_EQ(mp(g), 3);
  EXPECT_EQ(mp(add_edge(g, e.u, e.v)), 5);
}

TEST(Mp, FindPathRespectsScopeAndTarget) {
  const Graph g = disjoint_union({complete(4), path(3)});
  const auto hit = find_monotone_path(g, 4);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->size(), 4);
  EXPECT_FALSE(find_monotone_path(g, 3, bit(4) | bit(5) | bit(6)).has_value());
}
