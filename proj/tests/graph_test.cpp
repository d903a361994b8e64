#include "dmpsat/constructions.hpp"
#include "dmpsat/graph.hpp"

#include "brute.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dmpsat;
using testing_support::random_graph;

TEST(Graph, EmptyAndBasicQueries) {
  const Graph g(4, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.degree(3), 0);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_EQ(g.min_degree(), 0);
  EXPECT_EQ(g.neighbours(1), bit(0) | bit(2));
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(65), std::out_of_range);
  EXPECT_THROW(Graph(-1), std::out_of_range);
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::out_of_range);
  const Graph g(3, {{0, 1}});
  EXPECT_THROW((void)add_edge(g, 0, 1), std::invalid_argument);
  EXPECT_THROW((void)add_edge(g, 2, 2), std::invalid_argument);
}

TEST(Graph, SixtyFourVertices) {
  Graph g = path(64);
  EXPECT_EQ(g.order(), 64);
  EXPECT_EQ(g.edge_count(), 63);
  EXPECT_TRUE(g.adjacent(62, 63));
  EXPECT_TRUE(is_connected(g));
}

TEST(Graph, NonEdgesInLexicographicOrder) {
  const Graph g(4, {{0, 1}, {2, 3}});
  const std::vector<Edge> expected{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  EXPECT_EQ(non_edges(g), expected);
  EXPECT_TRUE(non_edges(complete(5)).empty());
}

TEST(Graph, CartesianProductLabels) {
  const Graph g = cartesian_product(path(3), complete(2));
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.edge_count(), 7);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(0, 3));
}

TEST(Graph, ComponentsAndInducedSubgraph) {
  const Graph g = disjoint_union({path(3), complete(3), Graph(1)});
  EXPECT_EQ(connected_components(g).size(), 3u);
  EXPECT_FALSE(is_connected(g));
  const Graph h = induced_subgraph(g, bit(3) | bit(4) | bit(5));
  EXPECT_TRUE(h == complete(3));
}

TEST(GraphProperty, UnionAndProductArithmetic) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph a = random_graph(rng, 1 + trial % 6, 0.5);
    const Graph b = random_graph(rng, 1 + trial % 5, 0.4);
    const Graph u = disjoint_union({a, b});
    EXPECT_EQ(u.order(), a.order() + b.order());
    EXPECT_EQ(u.edge_count(), a.edge_count() + b.edge_count());
    const Graph p = cartesian_product(a, b);
    EXPECT_EQ(p.order(), a.order() * b.order());
    EXPECT_EQ(p.edge_count(), a.edge_count() * b.order() + b.edge_count() * a.order());
    const Graph c = cone(a);
    EXPECT_EQ(c.order(), a.order() + 1);
    EXPECT_EQ(c.edge_count(), a.edge_count() + a.order());
  }
}

TEST(GraphProperty, DegreeSumAndRelabelling) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    const Graph g = random_graph(rng, n, 0.3);
    int sum = 0;
    for (int v = 0; v < n; ++v)
      sum += g.degree(v);
    EXPECT_EQ(sum, 2 * g.edge_count());
    const auto perm = testing_support::random_permutation(rng, n);
    const Graph h = g.relabelled(perm);
    EXPECT_EQ(h.edge_count(), g.edge_count());
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        EXPECT_EQ(g.adjacent(u, v), h.adjacent(perm[u], perm[v]));
  }
}
