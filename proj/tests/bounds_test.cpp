#include "dmpsat/bounds.hpp"
#include "dmpsat/constructions.hpp"

#include <gtest/gtest.h>

using namespace dmpsat;

TEST(Bounds, ExactValues) {
  EXPECT_EQ(exact_h(9, 4), 9);
  EXPECT_EQ(exact_h(8, 3), 4);
  EXPECT_EQ(exact_h(7, 3), 4);
  EXPECT_EQ(exact_h(5, 2), 0);
  EXPECT_EQ(exact_h(7, 4), 8);
  EXPECT_THROW((void)exact_h(8, 5), std::invalid_argument);
  EXPECT_THROW((void)exact_h(2, 4), std::invalid_argument);
}

TEST(Bounds, LowerBound) {
  EXPECT_EQ(lower_bound(9, 5), 9);
  EXPECT_EQ(lower_bound(3, 4), 3);
  EXPECT_EQ(lower_bound(20, 6), 20);
  EXPECT_THROW((void)lower_bound(2, 5), std::invalid_argument);
  EXPECT_THROW((void)lower_bound(5, 3), std::invalid_argument);
}

TEST(Bounds, UpperBoundExamples) {
  EXPECT_EQ(upper_bound_odd(12, 5), 14);
  EXPECT_EQ(upper_bound_odd(9, 7), 15);
  EXPECT_EQ(upper_bound_even(7, 6), 13);
  EXPECT_EQ(upper_bound_5(13), 21);
  EXPECT_THROW((void)upper_bound_odd(10, 5), std::invalid_argument);
  EXPECT_THROW((void)upper_bound_odd(12, 6), std::invalid_argument);
  EXPECT_THROW((void)upper_bound_even(8, 6), std::invalid_argument);
  EXPECT_THROW((void)upper_bound_5(7), std::invalid_argument);
}

TEST(BoundsProperty, FormulasMatchConstructions) {
  for (int t = 1; t <= 6; ++t)
    for (int p = 1; p <= 3; ++p) {
      const int k = 2 * t + 1;
      const Graph g = copies(p3_box_kt(t), p);
      EXPECT_EQ(upper_bound_odd(g.order(), k), g.edge_count());
      EXPECT_EQ(12 * g.edge_count(), g.order() * (3 * k - 1));
    }
  for (int t = 1; t <= 5; ++t)
    for (int p = 1; p <= 3; ++p) {
      const int k = 2 * t + 2;
      const Graph g = copies(cone(p3_box_kt(t)), p);
      EXPECT_EQ(upper_bound_even(g.order(), k), g.edge_count());
      EXPECT_EQ(4 * (3 * k - 4) * g.edge_count(), g.order() * (3 * k + 8) * (k - 2));
    }
  for (int n = 8; n <= 60; ++n) {
    if (n % 6 == 5)
      EXPECT_EQ(6 * five_sat_mix_edges(n), 7 * n + 19);
    else
      EXPECT_EQ(upper_bound_5(n), five_sat_mix_edges(n)) << n;
  }
}

TEST(Bounds, TableRows) {
  const auto exact = bound_row(6, 4);
  EXPECT_EQ(exact.exact, 6);
  EXPECT_EQ(exact.sources, std::vector<std::string>{"exact"});
  const auto five = bound_row(11, 5);
  EXPECT_EQ(five.lower, 11);
  EXPECT_EQ(five.upper, 16);
  const auto even = bound_row(7, 6);
  EXPECT_EQ(even.upper, 13);
  EXPECT_FALSE(bound_row(14, 6).upper.has_value());
  EXPECT_EQ(bound_table(4, 6, 3, 10).size(), 24u);
}
