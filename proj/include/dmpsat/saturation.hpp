#pragma once

// Saturation predicates for mp.
//
//   saturated:    mp(G + e) > mp(G) for every non-edge e (vacuous for K_m).
//   k-saturated:  mp(G) < k and mp(G + e) >= k for every non-edge e. K_m with
//                 m <= k - 1 satisfies this vacuously; K_m with m >= k does not.
//
// Adding e only changes degrees inside the components of its endpoints, so
// mp(G + e) is the larger of mp over the untouched components (cached) and a
// search restricted to the merged component.

#include "dmpsat/graph.hpp"
#include "dmpsat/mp.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace dmpsat {

struct Violation {
  Edge edge;
  /// Exact mp of G plus this edge.
  int mp_after = 0;
};

struct Witness {
  Edge edge;
  /// Monotone path in G plus this edge long enough to satisfy every tested predicate.
  DmPath path;
};

struct SaturationReport {
  int mp_value = 0;
  bool saturated = false;
  std::optional<int> k;
  std::optional<bool> k_saturated;
  /// Non-edges with mp(G + e) <= mp(G).
  std::vector<Violation> violations;
  /// Non-edges with mp(G + e) < k (k mode only).
  std::vector<Violation> k_violations;
  std::vector<Witness> witnesses;
  int non_edges_checked = 0;
};

struct SaturationOptions {
  /// Stop as soon as every verdict in the report is decided.
  bool fast = false;
};

namespace detail {

class AdditionOracle {
public:
  explicit AdditionOracle(const Graph & g) : g_(g), components_(component_sets(g)) {
    component_of_.fill(-1);
    for (std::size_t c = 0; c < components_.size(); ++c) {
      for_each_vertex(components_[c], [&](Vertex v) { component_of_[v] = static_cast<int>(c); });
      component_mp_.push_back(static_cast<int>(
          longest_monotone_path(g, Direction::non_decreasing, kNoTarget, components_[c]).size()));
    }
    mp_ = components_.empty() ? 0 : *std::max_element(component_mp_.begin(), component_mp_.end());
  }

  [[nodiscard]] auto mp() const -> int { return mp_; }

  struct Outcome {
    int mp_after;                   // exact when `reached` is false
    bool reached;                   // a path of at least `target` vertices exists
    std::vector<Vertex> path;       // in G + e
  };

  // Searches G + e for a path of `target` vertices; exact mp(G + e) if none.
  auto probe(Edge e, int target) const -> Outcome {
    const int cu = component_of_[e.u];
    const int cv = component_of_[e.v];
    int rest = 0;
    for (std::size_t c = 0; c < components_.size(); ++c)
      if (static_cast<int>(c) != cu && static_cast<int>(c) != cv)
        rest = std::max(rest, component_mp_[c]);
    const Graph h = add_edge(g_, e.u, e.v);
    if (rest >= target) {
      for (std::size_t c = 0; c < components_.size(); ++c)
        if (static_cast<int>(c) != cu && static_cast<int>(c) != cv && component_mp_[c] == rest)
          return {rest, true,
                  longest_monotone_path(h, Direction::non_decreasing, kNoTarget, components_[c])};
    }
    auto path = longest_monotone_path(h, Direction::non_decreasing, target, components_[cu] | components_[cv]);
    const int found = static_cast<int>(path.size());
    return {std::max(found, rest), found >= target, std::move(path)};
  }

private:
  const Graph & g_;
  std::vector<VertexSet> components_;
  std::array<int, kMaxVertices> component_of_{};
  std::vector<int> component_mp_;
  int mp_ = 0;
};

inline auto check(const Graph & g, std::optional<int> k, SaturationOptions options) -> SaturationReport {
  detail::require_vertices(g);
  if (k && *k < 2)
    throw std::invalid_argument("k-saturation needs k >= 2");
  AdditionOracle oracle(g);
  SaturationReport report;
  report.mp_value = oracle.mp();
  report.k = k;
  report.saturated = true;
  if (k)
    report.k_saturated = report.mp_value < *k;

  const int target = k ? std::max(*k, report.mp_value + 1) : report.mp_value + 1;
  for (auto e : non_edges(g)) {
    const bool sat_open = report.saturated;
    const bool k_open = k && *report.k_saturated;
    if (options.fast && !sat_open && !k_open)
      break;
    ++report.non_edges_checked;
    auto outcome = oracle.probe(e, target);
    if (outcome.reached) {
      report.witnesses.push_back({e, make_dm_path(add_edge(g, e.u, e.v), std::move(outcome.path))});
      continue;
    }
    if (outcome.mp_after <= report.mp_value) {
      report.saturated = false;
      report.violations.push_back({e, outcome.mp_after});
    }
    if (k && outcome.mp_after < *k) {
      report.k_saturated = false;
      report.k_violations.push_back({e, outcome.mp_after});
    }
  }
  return report;
}

} // namespace detail

[[nodiscard]] inline auto is_saturated(const Graph & g, SaturationOptions options = {}) -> SaturationReport {
  return detail::check(g, std::nullopt, options);
}

[[nodiscard]] inline auto is_k_saturated(const Graph & g, int k, SaturationOptions options = {})
    -> SaturationReport {
  return detail::check(g, k, options);
}

/// Verdict-only saturation test with early exit.
[[nodiscard]] inline auto saturated(const Graph & g) -> bool {
  detail::require_vertices(g);
  detail::AdditionOracle oracle(g);
  for (auto e : non_edges(g))
    if (!oracle.probe(e, oracle.mp() + 1).reached)
      return false;
  return true;
}

/// Verdict-only k-saturation test with early exit.
[[nodiscard]] inline auto k_saturated(const Graph & g, int k) -> bool {
  detail::require_vertices(g);
  if (k < 2)
    throw std::invalid_argument("k-saturation needs k >= 2");
  if (find_monotone_path(g, k))
    return false;
  detail::AdditionOracle oracle(g);
  for (auto e : non_edges(g))
    if (!oracle.probe(e, k).reached)
      return false;
  return true;
}

} // namespace dmpsat
