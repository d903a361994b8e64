#pragma once

// Exact h(n, k) by isomorph-free exhaustive search.
//
// Edge-count levels are scanned in ascending order, so the first level that
// contains a k-saturated class is the minimum. Every k-saturated class at
// that level is returned, sorted by canonical form. Disconnected graphs are
// included. Each level is split across `jobs` workers; per-worker results
// are merged in canonical order, so output does not depend on scheduling.

#include "dmpsat/canonical.hpp"
#include "dmpsat/enumerate.hpp"
#include "dmpsat/saturation.hpp"

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmpsat {

struct SearchResult {
  int n = 0;
  int k = 0;
  /// Minimum edge count; empty when no k-saturated graph exists on n vertices.
  std::optional<int> h_value;
  std::vector<CanonicalForm> certificates;
  std::size_t classes_examined = 0;
  std::chrono::duration<double> elapsed{};
};

struct SearchOptions {
  int jobs = 1;
};

/// Canonical forms in `level` that are k-saturated, in input order.
[[nodiscard]] inline auto k_saturated_in(std::span<const CanonicalForm> level, int k, int jobs = 1)
    -> std::vector<CanonicalForm> {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, level.size()));
  std::vector<std::vector<CanonicalForm>> partial(workers);
  detail::run_partitioned(level.size(), static_cast<int>(workers),
                          [&](std::size_t begin, std::size_t end, std::size_t w) {
                            for (std::size_t i = begin; i < end; ++i)
                              if (k_saturated(level[i].graph(), k))
                                partial[w].push_back(level[i]);
                          });
  std::vector<CanonicalForm> result;
  for (auto & part : partial)
    result.insert(result.end(), part.begin(), part.end());
  return result;
}

[[nodiscard]] inline auto h_search(int n, int k, SearchOptions options = {}) -> SearchResult {
  if (n < 1 || n > kEnumerationMaxVertices)
    throw std::out_of_range("h search supports 1.." + std::to_string(kEnumerationMaxVertices) +
                            " vertices, got " + std::to_string(n));
  if (k < 2)
    throw std::invalid_argument("h search needs k >= 2");
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  result.n = n;
  result.k = k;
  for_each_level(
      n,
      [&](int m, std::span<const CanonicalForm> level) {
        result.classes_examined += level.size();
        auto found = k_saturated_in(level, k, options.jobs);
        if (found.empty())
          return true;
        result.h_value = m;
        result.certificates = std::move(found);
        return false;
      },
      EnumerationOptions{options.jobs, std::nullopt});
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

} // namespace dmpsat
