#pragma once

// Executable checks of the structural results about mp-saturation. Each claim
// is checked exhaustively over enumerated graphs (bounded by max_n) or over a
// fixed parameter range of the relevant construction, and every failing case
// is reported with its graph6 string.

#include "dmpsat/bounds.hpp"
#include "dmpsat/canonical.hpp"
#include "dmpsat/constructions.hpp"
#include "dmpsat/enumerate.hpp"
#include "dmpsat/graph6.hpp"
#include "dmpsat/mp.hpp"
#include "dmpsat/saturation.hpp"
#include "dmpsat/search.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dmpsat {

enum class Claim {
  leaf_hub,          // leaf not adjacent to a max-degree vertex: joining them never raises mp
  hub_gap_family,    // cycle-plus-hub family: mp 3, 5-saturated, hub edge gives mp 5
  saturated_trees,   // a tree on n >= 3 vertices is saturated iff it is a star
  lower_bound,       // h(n,k) >= n for n >= 3, k >= 4
  odd_products,      // p copies of P3 x K_t: mp 2t, (2t+1)-saturated, edge count bound
  cone,              // coning a saturated graph raises mp by one and keeps it saturated
  even_cones,        // p copies of cone(P3 x K_t): mp 2t+1, (2t+2)-saturated, edge count bound
  five_mix,          // mixtures of P3 x K2, K5 - e, K4 are 5-saturated; residue edge counts
  small_k,           // h(n,2) = 0 and h(n,3) = ceil(n/2)
  sparse_connected,  // connected, |E| <= |V|, mp in {2,3}: saturated iff star or K3
  exact_k4,          // h(n,4) = n or n + 1 by residue, attained by the extremal family
};

struct ClaimInfo {
  Claim claim;
  std::string_view name;
  /// Default bound on exhaustive enumeration order; 0 for construction-only suites.
  int default_max_n;
};

inline constexpr std::array kClaims{
    ClaimInfo{Claim::leaf_hub, "leaf-hub", 8},
    ClaimInfo{Claim::hub_gap_family, "hub-gap-family", 0},
    ClaimInfo{Claim::saturated_trees, "saturated-trees", 9},
    ClaimInfo{Claim::lower_bound, "lower-bound", 7},
    ClaimInfo{Claim::odd_products, "odd-products", 0},
    ClaimInfo{Claim::cone, "cone", 7},
    ClaimInfo{Claim::even_cones, "even-cones", 0},
    ClaimInfo{Claim::five_mix, "five-mix", 0},
    ClaimInfo{Claim::small_k, "small-k", 9},
    ClaimInfo{Claim::sparse_connected, "sparse-connected", 9},
    ClaimInfo{Claim::exact_k4, "exact-k4", 9},
};

[[nodiscard]] inline auto claim_info(Claim claim) -> const ClaimInfo & {
  for (const auto & info : kClaims)
    if (info.claim == claim)
      return info;
  throw std::invalid_argument("unknown claim");
}

[[nodiscard]] inline auto claim_from_name(std::string_view name) -> std::optional<Claim> {
  for (const auto & info : kClaims)
    if (info.name == name)
      return info.claim;
  return std::nullopt;
}

struct Counterexample {
  std::string graph6;
  std::string detail;
};

struct VerifyReport {
  Claim claim = Claim::leaf_hub;
  std::string name;
  std::size_t cases = 0;
  std::vector<Counterexample> counterexamples;

  [[nodiscard]] auto passed() const -> bool { return counterexamples.empty(); }
};

struct VerifyOptions {
  /// Overrides the claim's default enumeration bound.
  std::optional<int> max_n;
  int jobs = 1;
};

namespace detail {

class Checker {
public:
  explicit Checker(VerifyReport & report) : report_(report) {}

  auto expect(bool ok, const Graph & g, const std::string & detail) -> void {
    ++report_.cases;
    if (!ok)
      report_.counterexamples.push_back({graph6_encode(g), detail});
  }

private:
  VerifyReport & report_;
};

// Visits every connected class on 1..max_n vertices with at most max_edges(n) edges.
inline auto for_each_connected(int max_n, const std::function<int(int)> & max_edges,
                               const std::function<void(const Graph &)> & visit, int jobs) -> void {
  for (int n = 1; n <= max_n; ++n)
    for_each_level(
        n,
        [&](int, std::span<const CanonicalForm> level) {
          for (const auto & form : level) {
            const Graph g = form.graph();
            if (is_connected(g))
              visit(g);
          }
          return true;
        },
        EnumerationOptions{jobs, max_edges(n)});
}

inline auto is_star(const Graph & g) -> bool {
  return g.order() >= 2 && g.edge_count() == g.order() - 1 && g.max_degree() == g.order() - 1;
}

inline auto describe(std::string_view what, long expected, long actual) -> std::string {
  return std::string(what) + ": expected " + std::to_string(expected) + ", got " + std::to_string(actual);
}

inline auto verify_leaf_hub(Checker & check, int max_n, int jobs) -> void {
  for_each_connected(
      max_n, [](int n) { return n * (n - 1) / 2; },
      [&](const Graph & g) {
        const int top = g.max_degree();
        if (top < 2)
          return;
        const int base = mp(g);
        for (Vertex u = 0; u < g.order(); ++u) {
          if (g.degree(u) != 1)
            continue;
          for (Vertex v = 0; v < g.order(); ++v) {
            if (v == u || g.degree(v) != top || g.adjacent(u, v))
              continue;
            const int after = mp(add_edge(g, u, v));
            check.expect(after <= base, g,
                         "adding " + std::to_string(u) + "-" + std::to_string(v) + " raised mp from " +
                             std::to_string(base) + " to " + std::to_string(after));
          }
        }
      },
      jobs);
}

inline auto verify_hub_gap_family(Checker & check) -> void {
  for (int n = 3; n <= 5; ++n) {
    const Graph g = g_counterexample(n);
    check.expect(g.order() == 2 * n + 1 && g.edge_count() == 3 * n, g, "vertex or edge count");
    check.expect(mp(g) == 3, g, describe("mp", 3, mp(g)));
    check.expect(k_saturated(g, 5), g, "not 5-saturated");
    const auto e = g_counterexample_gap_edge(n);
    const int after = mp(add_edge(g, e.u, e.v));
    check.expect(after == 5, g, describe("mp after hub edge", 5, after));
  }
}

inline auto verify_saturated_trees(Checker & check, int max_n, int jobs) -> void {
  for (int n = 3; n <= max_n; ++n)
    for (const auto & form : enumerate_forms(n, n - 1, jobs)) {
      const Graph g = form.graph();
      if (!is_connected(g))
        continue;
      const bool sat = saturated(g);
      check.expect(sat == is_star(g), g, sat ? "saturated tree that is not a star" : "star that is not saturated");
    }
}

inline auto verify_lower_bound(Checker & check, int max_n, int jobs) -> void {
  for (int k = 4; k <= 6; ++k)
    for (int n = 3; n <= max_n; ++n) {
      const auto result = h_search(n, k, {jobs});
      const Graph witness = result.certificates.empty() ? Graph(n) : result.certificates.front().graph();
      check.expect(result.h_value && *result.h_value >= lower_bound(n, k), witness,
                   "h(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                       (result.h_value ? std::to_string(*result.h_value) : std::string("none")) + " below n");
    }
}

inline auto verify_odd_products(Checker & check) -> void {
  for (int t = 1; t <= 5; ++t)
    for (int p = 1; p <= 3; ++p) {
      const int k = 2 * t + 1;
      const Graph g = copies(p3_box_kt(t), p);
      const int value = mp(g);
      check.expect(value == 2 * t, g, describe("mp", 2 * t, value));
      check.expect(k_saturated(g, k), g, "not " + std::to_string(k) + "-saturated");
      check.expect(g.edge_count() == upper_bound_odd(g.order(), k), g,
                   describe("edge count", upper_bound_odd(g.order(), k), g.edge_count()));
    }
}

inline auto verify_cone(Checker & check, int max_n, int jobs) -> void {
  for (int n = 1; n < max_n; ++n)
    for (const auto & form : enumerate_forms(n, std::nullopt, jobs)) {
      const Graph g = form.graph();
      if (!saturated(g))
        continue;
      const Graph h = cone(g);
      const int before = mp(g);
      const int after = mp(h);
      check.expect(after == before + 1, g, describe("mp of cone", before + 1, after));
      check.expect(saturated(h), g, "cone is not saturated");
    }
}

inline auto verify_even_cones(Checker & check) -> void {
  for (int t = 1; t <= 3; ++t) {
    const int k = 2 * t + 2;
    for (int p = 1; p <= 3; ++p) {
      const Graph g = copies(cone(p3_box_kt(t)), p);
      const int value = mp(g);
      check.expect(value == 2 * t + 1, g, describe("mp", 2 * t + 1, value));
      check.expect(k_saturated(g, k), g, "not " + std::to_string(k) + "-saturated");
      check.expect(g.edge_count() == upper_bound_even(g.order(), k), g,
                   describe("edge count", upper_bound_even(g.order(), k), g.edge_count()));
    }
    for (int p = 1; p <= 2; ++p) {
      const Graph g = cone(copies(p3_box_kt(t), p));
      check.expect(mp(g) == 2 * t + 1, g, describe("mp", 2 * t + 1, mp(g)));
      check.expect(k_saturated(g, k), g, "not " + std::to_string(k) + "-saturated");
    }
  }
}

inline auto verify_five_mix(Checker & check) -> void {
  for (int n = 8; n <= 40; ++n) {
    const Graph g = five_sat_mix(n);
    check.expect(g.order() == n, g, describe("order", n, g.order()));
    const int offset = kFiveResidueOffset[n % 6];
    check.expect(6 * g.edge_count() == 7 * n + offset, g,
                 "edge count " + std::to_string(g.edge_count()) + " differs from (7n + " + std::to_string(offset) +
                     ")/6 = " + std::to_string(7 * n + offset) + "/6");
    check.expect(k_saturated(g, 5), g, "not 5-saturated");
  }
  const Graph blocks[] = {p3_box_kt(2), k5_minus_e(), complete(4)};
  for (int x = 0; 6 * x <= 20; ++x)
    for (int y = 0; 6 * x + 5 * y <= 20; ++y)
      for (int z = 0; 6 * x + 5 * y + 4 * z <= 20; ++z) {
        if (x + y + z == 0)
          continue;
        std::vector<Graph> parts;
        parts.insert(parts.end(), x, blocks[0]);
        parts.insert(parts.end(), y, blocks[1]);
        parts.insert(parts.end(), z, blocks[2]);
        const Graph g = disjoint_union(parts);
        check.expect(k_saturated(g, 5), g, "mixture is not 5-saturated");
      }
}

inline auto verify_small_k(Checker & check, int max_n, int jobs) -> void {
  for (int n = 2; n <= max_n; ++n) {
    const auto two = h_search(n, 2, {jobs});
    const bool edgeless_cert = two.certificates.size() == 1 && two.certificates.front().edge_count() == 0;
    check.expect(two.h_value == 0 && edgeless_cert, Graph(n), "h(" + std::to_string(n) + ",2) is not 0");
    const auto three = h_search(n, 3, {jobs});
    const Graph witness = three.certificates.empty() ? Graph(n) : three.certificates.front().graph();
    check.expect(three.h_value == exact_h(n, 3), witness,
                 describe("h(" + std::to_string(n) + ",3)", exact_h(n, 3), three.h_value.value_or(-1)));
  }
  for (int n = 2; n <= 40; ++n) {
    const Graph g = n % 2 == 0 ? matching(n) : matching_plus_p3(n);
    check.expect(g.edge_count() == exact_h(n, 3), g, describe("edge count", exact_h(n, 3), g.edge_count()));
    check.expect(mp(g) == 2 && k_saturated(g, 3), g, "not 3-saturated with mp 2");
  }
}

inline auto verify_sparse_connected(Checker & check, int max_n, int jobs) -> void {
  for_each_connected(
      max_n, [](int n) { return n; },
      [&](const Graph & g) {
        const int value = mp(g);
        if (value != 2 && value != 3)
          return;
        const bool expected = (value == 2 && is_star(g)) || (value == 3 && g.order() == 3 && g.is_complete());
        const bool sat = saturated(g);
        check.expect(sat == expected, g,
                     sat ? "saturated but neither a star nor K3" : "star or K3 that is not saturated");
        if (value == 2 && is_star(g) && g.order() >= 3)
          check.expect(k_saturated(g, 3), g, "star is not 3-saturated");
      },
      jobs);
}

inline auto verify_exact_k4(Checker & check, int max_n, int jobs) -> void {
  for (int n = 3; n <= max_n; ++n) {
    const auto result = h_search(n, 4, {jobs});
    const Graph witness = result.certificates.empty() ? Graph(n) : result.certificates.front().graph();
    check.expect(result.h_value == exact_h(n, 4), witness,
                 describe("h(" + std::to_string(n) + ",4)", exact_h(n, 4), result.h_value.value_or(-1)));
  }
  for (int n = 3; n <= 40; ++n) {
    const Graph g = h4_extremal(n);
    check.expect(g.edge_count() == exact_h(n, 4), g, describe("edge count", exact_h(n, 4), g.edge_count()));
    check.expect(mp(g) == 3 && k_saturated(g, 4), g, "not 4-saturated with mp 3");
  }
}

} // namespace detail

[[nodiscard]] inline auto verify(Claim claim, VerifyOptions options = {}) -> VerifyReport {
  const auto & info = claim_info(claim);
  VerifyReport report;
  report.claim = claim;
  report.name = std::string(info.name);
  const int max_n = options.max_n.value_or(info.default_max_n);
  if (info.default_max_n > 0 && (max_n < 1 || max_n > kEnumerationMaxVertices))
    throw std::out_of_range("max_n must lie in 1.." + std::to_string(kEnumerationMaxVertices));
  detail::Checker check(report);
  switch (claim) {
  case Claim::leaf_hub: detail::verify_leaf_hub(check, max_n, options.jobs); break;
  case Claim::hub_gap_family: detail::verify_hub_gap_family(check); break;
  case Claim::saturated_trees: detail::verify_saturated_trees(check, max_n, options.jobs); break;
  case Claim::lower_bound: detail::verify_lower_bound(check, max_n, options.jobs); break;
  case Claim::odd_products: detail::verify_odd_products(check); break;
  case Claim::cone: detail::verify_cone(check, max_n, options.jobs); break;
  case Claim::even_cones: detail::verify_even_cones(check); break;
  case Claim::five_mix: detail::verify_five_mix(check); break;
  case Claim::small_k: detail::verify_small_k(check, max_n, options.jobs); break;
  case Claim::sparse_connected: detail::verify_sparse_connected(check, max_n, options.jobs); break;
  case Claim::exact_k4: detail::verify_exact_k4(check, max_n, options.jobs); break;
  }
  return report;
}

} // namespace dmpsat
