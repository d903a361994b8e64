#pragma once

// Isomorph-free generation of all graphs on n vertices, one edge-count level
// at a time. Level m+1 is the set of canonical forms of every single-edge
// augmentation of level m; each level is kept sorted by canonical form, so
// the stream order is deterministic and independent of the worker count.

#include "dmpsat/canonical.hpp"
#include "dmpsat/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace dmpsat {

/// Desk-scale limit: n = 10 already has 12,005,168 classes.
inline constexpr int kEnumerationMaxVertices = 10;

struct EnumerationOptions {
  int jobs = 1;
  /// Stop after this edge-count level (inclusive).
  std::optional<int> max_edges;
};

namespace detail {

inline auto check_enumeration_order(int n) -> void {
  if (n < 1 || n > kEnumerationMaxVertices)
    throw std::out_of_range("enumeration supports 1.." + std::to_string(kEnumerationMaxVertices) +
                            " vertices, got " + std::to_string(n));
}

inline auto sort_unique(std::vector<CanonicalForm> & forms) -> void {
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
}

inline auto augment_range(std::span<const CanonicalForm> parents) -> std::vector<CanonicalForm> {
  std::vector<CanonicalForm> children;
  for (const auto & parent : parents) {
    const Graph g = parent.graph();
    for (auto e : non_edges(g))
      children.push_back(canonical_form(add_edge(g, e.u, e.v)));
    if (children.size() > (std::size_t{1} << 20))
      sort_unique(children);
  }
  sort_unique(children);
  return children;
}

/// Splits [0, count) into `jobs` contiguous chunks and runs work(begin, end) on each.
template <class Work>
auto run_partitioned(std::size_t count, int jobs, Work && work) -> void {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  if (workers == 1) {
    work(0, count, 0);
    return;
  }
  std::vector<std::thread> threads;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&work, begin, end, w] { work(begin, end, w); });
  }
  for (auto & t : threads)
    t.join();
}

inline auto next_level(std::span<const CanonicalForm> level, int jobs) -> std::vector<CanonicalForm> {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, level.size()));
  std::vector<std::vector<CanonicalForm>> partial(workers);
  run_partitioned(level.size(), static_cast<int>(workers), [&](std::size_t begin, std::size_t end, std::size_t w) {
    partial[w] = augment_range(level.subspan(begin, end - begin));
  });
  std::vector<CanonicalForm> merged = std::move(partial[0]);
  for (std::size_t w = 1; w < partial.size(); ++w) {
    std::vector<CanonicalForm> out;
    out.reserve(merged.size() + partial[w].size());
    std::set_union(merged.begin(), merged.end(), partial[w].begin(), partial[w].end(),
                   std::back_inserter(out));
    merged = std::move(out);
  }
  return merged;
}

} // namespace detail

/// Calls visit(m, level) for m = 0, 1, ... with every isomorphism class of
/// graphs on n vertices and m edges, sorted by canonical form. The visitor
/// returns false to stop early.
inline auto for_each_level(int n, const std::function<bool(int, std::span<const CanonicalForm>)> & visit,
                           EnumerationOptions options = {}) -> void {
  detail::check_enumeration_order(n);
  const int top = std::min(n * (n - 1) / 2, options.max_edges.value_or(n * (n - 1) / 2));
  std::vector<CanonicalForm> level{canonical_form(Graph(n))};
  for (int m = 0; m <= top; ++m) {
    if (!visit(m, level))
      return;
    if (m < top)
      level = detail::next_level(level, options.jobs);
  }
}

/// Canonical forms of every class on n vertices, optionally restricted to m edges.
[[nodiscard]] inline auto enumerate_forms(int n, std::optional<int> m = {}, int jobs = 1)
    -> std::vector<CanonicalForm> {
  detail::check_enumeration_order(n);
  std::vector<CanonicalForm> result;
  if (m && (*m < 0 || *m > n * (n - 1) / 2))
    return result;
  EnumerationOptions options{jobs, m};
  for_each_level(
      n,
      [&](int edges, std::span<const CanonicalForm> level) {
        if (!m || edges == *m)
          result.insert(result.end(), level.begin(), level.end());
        return true;
      },
      options);
  return result;
}

/// One canonically labelled representative per isomorphism class.
[[nodiscard]] inline auto enumerate_graphs(int n, std::optional<int> m = {}, int jobs = 1)
    -> std::vector<Graph> {
  std::vector<Graph> result;
  for (const auto & form : enumerate_forms(n, m, jobs))
    result.push_back(form.graph());
  return result;
}

} // namespace dmpsat
