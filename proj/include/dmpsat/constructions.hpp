#pragma once

/**
 * Generators for the graph families used in the bounds.
 *
 * Labelling conventions (fixed so that graph6 output is reproducible):
 *  - star(n): centre 0, leaves 1..n-1.
 *  - path(n): 0-1-...-(n-1).  cycle(n): path plus (n-1)-0.
 *  - matching(n): edges (2i, 2i+1).
 *  - matching_plus_p3(n): (n-3)/2 copies of K2, then P3 on the last three labels.
 *  - k4_minus_e(): K4 without edge 2-3.  k5_minus_e(): K5 without edge 3-4.
 *  - bowtie(): triangles 0-1-2 and 0-3-4 sharing vertex 0.
 *  - p3_box_kt(t): top row u_i = i, middle row v_i = t + i, bottom row
 *    w_i = 2t + i for i = 0..t-1 (degrees t, t+1, t when t >= 2).
 *  - cone(G): the new apex is the last label.
 *  - g_counterexample(n): cycle v_1..v_{2n} on labels 0..2n-1, hub w = 2n
 *    joined to v_1, v_3, ..., v_{2n-1} (labels 0, 2, 4, ...).
 *  - disjoint unions place parts in the order listed.
 */

#include "dmpsat/graph.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dmpsat {

namespace detail {

inline auto require(bool ok, const std::string & what) -> void {
  if (!ok)
    throw std::invalid_argument(what);
}

} // namespace detail

[[nodiscard]] inline auto edgeless(int n) -> Graph {
  detail::require(n >= 1, "edgeless graph needs n >= 1");
  return Graph(n);
}

[[nodiscard]] inline auto complete(int n) -> Graph {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

[[nodiscard]] inline auto star(int n) -> Graph {
  detail::require(n >= 2, "star K_{1,n-1} needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    edges.push_back({0, v});
  return Graph::from_edges(n, edges);
}

[[nodiscard]] inline auto path(int n) -> Graph {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v)
    edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

[[nodiscard]] inline auto cycle(int n) -> Graph {
  detail::require(n >= 3, "cycle needs n >= 3");
  auto edges = path(n).edges();
  edges.push_back({0, n - 1});
  return Graph::from_edges(n, edges);
}

[[nodiscard]] inline auto matching(int n) -> Graph {
  detail::require(n >= 2 && n % 2 == 0, "matching needs an even n >= 2");
  return copies(complete(2), n / 2);
}

[[nodiscard]] inline auto matching_plus_p3(int n) -> Graph {
  detail::require(n >= 3 && n % 2 == 1, "matching plus P3 needs an odd n >= 3");
  if (n == 3)
    return path(3);
  return disjoint_union({matching(n - 3), path(3)});
}

[[nodiscard]] inline auto triangle_packing(int n) -> Graph {
  detail::require(n >= 3 && n % 3 == 0, "triangle packing needs n divisible by 3");
  return copies(complete(3), n / 3);
}

[[nodiscard]] inline auto k4_minus_e() -> Graph {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

[[nodiscard]] inline auto k5_minus_e() -> Graph {
  std::vector<Edge> edges;
  for (auto e : complete(5).edges())
    if (e != Edge{3, 4})
      edges.push_back(e);
  return Graph::from_edges(5, edges);
}

[[nodiscard]] inline auto bowtie() -> Graph {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

[[nodiscard]] inline auto p3_box_kt(int t) -> Graph {
  detail::require(t >= 1, "P3 x K_t needs t >= 1");
  return cartesian_product(path(3), complete(t));
}

/// G plus a new vertex joined to every vertex of G.
[[nodiscard]] inline auto cone(const Graph & g) -> Graph {
  const int n = g.order();
  auto edges = g.edges();
  for (int v = 0; v < n; ++v)
    edges.push_back({v, n});
  return Graph::from_edges(n + 1, edges);
}

[[nodiscard]] inline auto g_counterexample(int n) -> Graph {
  detail::require(n >= 3, "counterexample family needs n >= 3");
  auto edges = cycle(2 * n).edges();
  for (int i = 0; i < 2 * n; i += 2)
    edges.push_back({i, 2 * n});
  return Graph::from_edges(2 * n + 1, edges);
}

/// The hub w and cycle vertex v_2 of g_counterexample(n).
[[nodiscard]] inline auto g_counterexample_gap_edge(int n) -> Edge {
  detail::require(n >= 3, "counterexample family needs n >= 3");
  return {1, 2 * n};
}

/// 4-saturated graph with n edges (n = 0 mod 3) or n + 1 edges otherwise:
/// triangles, plus one K4 - e (n = 1 mod 3) or one bowtie (n = 2 mod 3).
[[nodiscard]] inline auto h4_extremal(int n) -> Graph {
  detail::require(n >= 3, "h4 extremal graph needs n >= 3");
  switch (n % 3) {
  case 0:
    return triangle_packing(n);
  case 1:
    detail::require(n >= 4, "h4 extremal graph with n = 1 mod 3 needs n >= 4");
    return n == 4 ? k4_minus_e() : disjoint_union({triangle_packing(n - 4), k4_minus_e()});
  default:
    detail::require(n >= 5, "h4 extremal graph with n = 2 mod 3 needs n >= 5");
    return n == 5 ? bowtie() : disjoint_union({triangle_packing(n - 5), bowtie()});
  }
}

/// Copies of each building block in five_sat_mix(n).
struct FiveSatRecipe {
  int products = 0;   // P3 x K2
  int k5_minus_e = 0;
  int k4 = 0;
};

[[nodiscard]] inline auto five_sat_recipe(int n) -> FiveSatRecipe {
  detail::require(n >= 8, "five_sat_mix needs n >= 8");
  switch (n % 6) {
  case 0: return {n / 6, 0, 0};
  case 1: return {(n - 13) / 6, 1, 2};
  case 2: return {(n - 8) / 6, 0, 2};
  case 3: return {(n - 9) / 6, 1, 1};
  case 4: return {(n - 4) / 6, 0, 1};
  default: return {(n - 5) / 6, 1, 0};
  }
}

/// Edge count of five_sat_mix(n), from the recipe alone.
[[nodiscard]] inline auto five_sat_mix_edges(int n) -> int {
  const auto recipe = five_sat_recipe(n);
  return 7 * recipe.products + 9 * recipe.k5_minus_e + 6 * recipe.k4;
}

/// 5-saturated graph on n >= 8 vertices: products first, then K4s, then K5 - e.
[[nodiscard]] inline auto five_sat_mix(int n) -> Graph {
  const auto recipe = five_sat_recipe(n);
  std::vector<Graph> parts;
  parts.insert(parts.end(), recipe.products, p3_box_kt(2));
  parts.insert(parts.end(), recipe.k4, complete(4));
  parts.insert(parts.end(), recipe.k5_minus_e, k5_minus_e());
  return disjoint_union(parts);
}

enum class Family {
  edgeless,
  star,
  matching,
  matching_plus_p3,
  triangle_packing,
  k4_minus_e,
  bowtie,
  k5_minus_e,
  complete,
  path,
  cycle,
  p3_box_kt,
  cone,
  g_counterexample,
  h4_extremal,
  five_sat_mix,
};

struct FamilySpec {
  Family family = Family::complete;
  std::optional<int> t;
  std::optional<int> n;
  /// Applied first: replace the base graph by its cone.
  bool coned = false;
  /// Applied second: disjoint copies of the (possibly coned) base graph.
  int copies = 1;
};

struct FamilyName {
  std::string_view name;
  Family family;
};

inline constexpr std::array kFamilyNames{
    FamilyName{"edgeless", Family::edgeless},
    FamilyName{"star", Family::star},
    FamilyName{"matching", Family::matching},
    FamilyName{"matching-p3", Family::matching_plus_p3},
    FamilyName{"triangles", Family::triangle_packing},
    FamilyName{"k4-e", Family::k4_minus_e},
    FamilyName{"bowtie", Family::bowtie},
    FamilyName{"k5-e", Family::k5_minus_e},
    FamilyName{"complete", Family::complete},
    FamilyName{"path", Family::path},
    FamilyName{"cycle", Family::cycle},
    FamilyName{"p3xkt", Family::p3_box_kt},
    FamilyName{"cone", Family::cone},
    FamilyName{"g-counterexample", Family::g_counterexample},
    FamilyName{"h4-extremal", Family::h4_extremal},
    FamilyName{"five-sat-mix", Family::five_sat_mix},
};

[[nodiscard]] inline auto family_from_name(std::string_view name) -> std::optional<Family> {
  for (const auto & entry : kFamilyNames)
    if (entry.name == name)
      return entry.family;
  return std::nullopt;
}

[[nodiscard]] inline auto build(const FamilySpec & spec) -> Graph {
  auto need_n = [&] {
    detail::require(spec.n.has_value(), "this family needs --n");
    return *spec.n;
  };
  auto need_t = [&] {
    detail::require(spec.t.has_value(), "this family needs --t");
    return *spec.t;
  };
  Graph base;
  switch (spec.family) {
  case Family::edgeless: base = edgeless(need_n()); break;
  case Family::star: base = star(need_n()); break;
  case Family::matching: base = matching(need_n()); break;
  case Family::matching_plus_p3: base = matching_plus_p3(need_n()); break;
  case Family::triangle_packing: base = triangle_packing(need_n()); break;
  case Family::k4_minus_e: base = k4_minus_e(); break;
  case Family::bowtie: base = bowtie(); break;
  case Family::k5_minus_e: base = k5_minus_e(); break;
  case Family::complete: base = complete(need_n()); break;
  case Family::path: base = path(need_n()); break;
  case Family::cycle: base = cycle(need_n()); break;
  case Family::p3_box_kt: base = p3_box_kt(need_t()); break;
  // The cone family is the cone of P3 x K_t, the even-k building block.
  case Family::cone: base = cone(p3_box_kt(need_t())); break;
  case Family::g_counterexample: base = g_counterexample(need_n()); break;
  case Family::h4_extremal: base = h4_extremal(need_n()); break;
  case Family::five_sat_mix: base = five_sat_mix(need_n()); break;
  }
  if (spec.coned)
    base = cone(base);
  detail::require(spec.copies >= 1, "copy count must be at least 1");
  detail::require(static_cast<long>(base.order()) * spec.copies <= kMaxVertices,
                  "construction exceeds " + std::to_string(kMaxVertices) + " vertices");
  return spec.copies == 1 ? base : copies(base, spec.copies);
}

} // namespace dmpsat
