#include "dmpsat/canonical.hpp"
#include "dmpsat/constructions.hpp"

#include "brute.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace dmpsat;
using namespace dmpsat::testing_support;

TEST(Canonical, PathVersusClaw) {
  EXPECT_FALSE(are_isomorphic(path(4), star(4)));
  EXPECT_TRUE(are_isomorphic(path(4), path(4).relabelled(std::vector<Vertex>{2, 0, 3, 1})));
}

TEST(Canonical, ElevenClassesOnFourVertices) {
  std::set<CanonicalForm> forms;
  std::set<std::uint64_t> brute;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = graph_from_mask(4, mask);
    forms.insert(canonical_form(g));
    brute.insert(brute_canonical_key(g));
  }
  EXPECT_EQ(forms.size(), 11u);
  EXPECT_EQ(brute.size(), 11u);
}

TEST(Canonical, AgreesWithBruteForcePartition) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    const Graph a = random_graph(rng, n, 0.5);
    const Graph b = random_graph(rng, n, 0.5);
    EXPECT_EQ(canonical_form(a) == canonical_form(b), brute_canonical_key(a) == brute_canonical_key(b));
  }
}

TEST(CanonicalProperty, PermutationInvariance) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 20;
    const Graph g = random_graph(rng, n, 0.35);
    const Graph h = g.relabelled(random_permutation(rng, n));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_TRUE(are_isomorphic(canonical_graph(g), g));
  }
}

TEST(CanonicalProperty, RegularAndSymmetricGraphs) {
  std::mt19937_64 rng(13);
  const std::vector<Graph> graphs{cycle(20), copies(cycle(4), 5), cartesian_product(cycle(4), cycle(4)),
                                  complete(12), copies(complete(3), 8), p3_box_kt(5)};
  for (const auto & g : graphs) {
    const auto form = canonical_form(g);
    EXPECT_EQ(canonical_form(g.relabelled(random_permutation(rng, g.order()))), form);
    EXPECT_EQ(form.edge_count(), g.edge_count());
  }
  EXPECT_NE(canonical_form(cycle(12)), canonical_form(copies(cycle(6), 2)));
}

TEST(Canonical, LabellingMapsToForm) {
  const Graph g = star(5).relabelled(std::vector<Vertex>{3, 0, 1, 2, 4});
  const auto labelling = canonical_labelling(g);
  std::vector<Vertex> mapping(g.order());
  for (int i = 0; i < g.order(); ++i)
    mapping[labelling.position[i]] = i;
  EXPECT_TRUE(g.relabelled(mapping) == labelling.form.graph());
}

TEST(Canonical, RejectsLargeGraphs) {
  EXPECT_THROW((void)canonical_form(path(33)), std::out_of_range);
  EXPECT_NO_THROW((void)canonical_form(path(32)));
}
