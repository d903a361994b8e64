#pragma once

// Closed-form values and bounds for h(n, k), the minimum edge count of a
// k-saturated graph on n vertices.

#include "dmpsat/constructions.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmpsat {

namespace detail {

inline auto domain_error(const std::string & what) -> std::invalid_argument {
  return std::invalid_argument(what);
}

} // namespace detail

/// h(n,2) = 0; h(n,3) = ceil(n/2); h(n,4) = n for n = 0 mod 3, else n + 1.
[[nodiscard]] inline auto exact_h(int n, int k) -> int {
  switch (k) {
  case 2:
    if (n < 1)
      throw detail::domain_error("h(n,2) needs n >= 1");
    return 0;
  case 3:
    if (n < 2)
      throw detail::domain_error("h(n,3) needs n >= 2");
    return n % 2 == 0 ? n / 2 : (n + 1) / 2;
  case 4:
    if (n < 3)
      throw detail::domain_error("h(n,4) needs n >= 3");
    return n % 3 == 0 ? n : n + 1;
  default:
    throw detail::domain_error("no closed form for k = " + std::to_string(k));
  }
}

[[nodiscard]] inline auto has_exact_h(int n, int k) -> bool {
  return (k == 2 && n >= 1) || (k == 3 && n >= 2) || (k == 4 && n >= 3);
}

/// h(n,k) >= n for n >= 3 and k >= 4.
[[nodiscard]] inline auto lower_bound(int n, int k) -> int {
  if (n < 3 || k < 4)
    throw detail::domain_error("lower bound needs n >= 3 and k >= 4");
  return n;
}

/// Vertices of one P3 x K_t block for odd k (t = (k-1)/2).
[[nodiscard]] constexpr auto odd_block_order(int k) -> int { return 3 * (k - 1) / 2; }

/// Vertices of one cone(P3 x K_t) block for even k (t = (k-2)/2).
[[nodiscard]] constexpr auto even_block_order(int k) -> int { return (3 * k - 4) / 2; }

/// n(3k-1)/12 for odd k >= 3 and n = 0 mod 3(k-1)/2.
[[nodiscard]] inline auto upper_bound_odd(int n, int k) -> int {
  if (k < 3 || k % 2 == 0)
    throw detail::domain_error("odd-k upper bound needs odd k >= 3");
  if (n < 1 || n % odd_block_order(k) != 0)
    throw detail::domain_error("odd-k upper bound needs n divisible by " + std::to_string(odd_block_order(k)));
  const long p = n / odd_block_order(k);
  return static_cast<int>(p * (k - 1) * (3 * k - 1) / 8);
}

/// n(3k+8)(k-2)/(4(3k-4)) for even k >= 4 and n = 0 mod (3k-4)/2.
[[nodiscard]] inline auto upper_bound_even(int n, int k) -> int {
  if (k < 4 || k % 2 != 0)
    throw detail::domain_error("even-k upper bound needs even k >= 4");
  if (n < 1 || n % even_block_order(k) != 0)
    throw detail::domain_error("even-k upper bound needs n divisible by " + std::to_string(even_block_order(k)));
  const long p = n / even_block_order(k);
  return static_cast<int>(p * (3 * k + 8) * (k - 2) / 8);
}

inline constexpr int kFiveResidueOffset[6] = {0, 35, 16, 27, 8, 28};

/// floor((7n + c(n mod 6)) / 6) for n >= 8. The quotient is exact except for
/// n = 5 mod 6, where the tabulated offset 28 does not make it integral; the
/// residue-5 construction itself has (7n + 19) / 6 edges (see five_sat_mix_edges).
[[nodiscard]] inline auto upper_bound_5(int n) -> int {
  if (n < 8)
    throw detail::domain_error("h(n,5) upper bound needs n >= 8");
  return (7 * n + kFiveResidueOffset[n % 6]) / 6;
}

struct BoundRow {
  int n = 0;
  int k = 0;
  int lower = 0;
  std::optional<int> upper;
  std::optional<int> exact;
  std::vector<std::string> sources;
};

/// Best known lower bound, constructive upper bound and exact value for (n, k).
[[nodiscard]] inline auto bound_row(int n, int k) -> BoundRow {
  if (n < 1 || k < 2)
    throw detail::domain_error("bound table needs n >= 1 and k >= 2");
  BoundRow row{n, k, 0, std::nullopt, std::nullopt, {}};
  if (has_exact_h(n, k)) {
    row.exact = exact_h(n, k);
    row.lower = *row.exact;
    row.upper = *row.exact;
    row.sources.push_back("exact");
    return row;
  }
  if (n >= 3 && k >= 4) {
    row.lower = lower_bound(n, k);
    row.sources.push_back("lower:n");
  }
  auto offer = [&](int value, const char * tag) {
    if (!row.upper || value < *row.upper)
      row.upper = value;
    row.sources.push_back(tag);
  };
  if (k % 2 == 1 && k >= 3 && n % odd_block_order(k) == 0)
    offer(upper_bound_odd(n, k), "upper:p3xkt");
  // Only a single coned block: disjoint copies of it are not k-saturated for k >= 6.
  if (k % 2 == 0 && k >= 4 && n == even_block_order(k))
    offer(upper_bound_even(n, k), "upper:cone-p3xkt");
  if (k == 5 && n >= 8) {
    offer(upper_bound_5(n), "upper:five-formula");
    offer(five_sat_mix_edges(n), "upper:five-sat-mix");
  }
  return row;
}

[[nodiscard]] inline auto bound_table(int k_min, int k_max, int n_min, int n_max) -> std::vector<BoundRow> {
  std::vector<BoundRow> rows;
  for (int k = k_min; k <= k_max; ++k)
    for (int n = n_min; n <= n_max; ++n)
      rows.push_back(bound_row(n, k));
  return rows;
}

} // namespace dmpsat
