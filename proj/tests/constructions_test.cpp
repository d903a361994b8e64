#include "dmpsat/canonical.hpp"
#include "dmpsat/constructions.hpp"
#include "dmpsat/mp.hpp"
#include "dmpsat/saturation.hpp"

#include <gtest/gtest.h>

using namespace dmpsat;

TEST(Constructions, ProductExamples) {
  const Graph g2 = p3_box_kt(2);
  EXPECT_EQ(g2.order(), 6);
  EXPECT_EQ(g2.edge_count(), 7);
  EXPECT_EQ(mp(g2), 4);
  EXPECT_TRUE(are_isomorphic(p3_box_kt(1), path(3)));
  EXPECT_EQ(mp(p3_box_kt(1)), 2);
  const Graph g3 = p3_box_kt(3);
  EXPECT_EQ(g3.order(), 9);
  EXPECT_EQ(g3.edge_count(), 15);
  EXPECT_EQ(mp(g3), 6);
  EXPECT_EQ(g3.degree(0), 3);
  EXPECT_EQ(g3.degree(3), 4);
  EXPECT_EQ(g3.degree(6), 3);
}

TEST(Constructions, Cones) {
  const Graph h = cone(p3_box_kt(2));
  EXPECT_EQ(h.order(), 7);
  EXPECT_EQ(h.edge_count(), 13);
  EXPECT_EQ(mp(h), 5);
  EXPECT_TRUE(saturated(h));
  EXPECT_EQ(h.degree(6), 6);
  EXPECT_TRUE(are_isomorphic(cone(edgeless(4)), star(5)));
  EXPECT_TRUE(cone(complete(3)) == complete(4));
}

TEST(Constructions, HubFamily) {
  const Graph g3 = g_counterexample(3);
  EXPECT_EQ(g3.order(), 7);
  EXPECT_EQ(g3.edge_count(), 9);
  const Graph g4 = g_counterexample(4);
  EXPECT_EQ(g4.order(), 9);
  EXPECT_EQ(g4.edge_count(), 12);
  EXPECT_EQ(mp(g4), 3);
  EXPECT_TRUE(k_saturated(g4, 5));
  // n = 3: the hub ties the odd cycle vertices at degree 3, so a 4-vertex
  // monotone path exists (v2 v1 w v3).
  EXPECT_EQ(mp(g3), 4);
  EXPECT_TRUE(is_degree_monotone_path(g3, std::vector<Vertex>{1, 0, 6, 2}));
  EXPECT_TRUE(k_saturated(g3, 5));
  // n = 5: the chord v1 v5 keeps mp at 4.
  EXPECT_FALSE(k_saturated(g_counterexample(5), 5));
  EXPECT_EQ(mp(add_edge(g_counterexample(5), 0, 4)), 4);
  for (int n = 3; n <= 5; ++n) {
    const auto e = g_counterexample_gap_edge(n);
    EXPECT_EQ(mp(add_edge(g_counterexample(n), e.u, e.v)), 5);
  }
}

TEST(Constructions, H4Extremal) {
  EXPECT_TRUE(h4_extremal(6) == copies(complete(3), 2));
  EXPECT_EQ(h4_extremal(7).edge_count(), 8);
  EXPECT_TRUE(h4_extremal(5) == bowtie());
  for (int n = 3; n <= 20; ++n) {
    const Graph g = h4_extremal(n);
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(g.edge_count(), n % 3 == 0 ? n : n + 1);
    EXPECT_TRUE(k_saturated(g, 4)) << n;
  }
}

TEST(Constructions, FiveSatMix) {
  EXPECT_EQ(five_sat_mix(12).edge_count(), 14);
  EXPECT_EQ(five_sat_mix(13).edge_count(), 21);
  EXPECT_EQ(five_sat_mix(10).edge_count(), 13);
  EXPECT_EQ(five_sat_mix(11).edge_count(), 16);
  for (int n = 8; n <= 24; ++n) {
    const Graph g = five_sat_mix(n);
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(g.edge_count(), five_sat_mix_edges(n));
    EXPECT_TRUE(k_saturated(g, 5)) << n;
  }
  EXPECT_THROW((void)five_sat_mix(7), std::invalid_argument);
}

TEST(Constructions, SmallK) {
  const Graph m = matching(6);
  EXPECT_EQ(m.edge_count(), 3);
  EXPECT_EQ(mp(m), 2);
  EXPECT_TRUE(k_saturated(m, 3));
  const Graph mp3 = matching_plus_p3(7);
  EXPECT_EQ(mp3.edge_count(), 4);
  EXPECT_EQ(mp(mp3), 2);
  EXPECT_TRUE(k_saturated(mp3, 3));
  const Graph k5 = k5_minus_e();
  EXPECT_EQ(k5.order(), 5);
  EXPECT_EQ(k5.edge_count(), 9);
  EXPECT_EQ(mp(k5), 4);
}

TEST(Constructions, FamilyBuilder) {
  FamilySpec spec;
  spec.family = *family_from_name("p3xkt");
  spec.t = 2;
  spec.coned = true;
  spec.copies = 2;
  const Graph g = build(spec);
  EXPECT_EQ(g.order(), 14);
  EXPECT_EQ(g.edge_count(), 26);
  EXPECT_FALSE(family_from_name("no-such-family").has_value());
  EXPECT_THROW((void)build(FamilySpec{Family::star, std::nullopt, std::nullopt, false, 1}), std::invalid_argument);
  EXPECT_THROW((void)build(FamilySpec{Family::complete, std::nullopt, 40, false, 2}), std::invalid_argument);
  for (const auto & entry : kFamilyNames)
    EXPECT_EQ(family_from_name(entry.name), entry.family);
}
