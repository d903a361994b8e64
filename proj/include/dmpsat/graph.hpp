#pragma once

/**
 * Simple undirected graphs on at most 64 vertices, stored as one 64-bit
 * adjacency word per vertex. Vertices are the dense labels 0..order()-1.
 *
 * Graph values are immutable once built: the mutating operations below
 * (add_edge, disjoint_union, ...) all return fresh values.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmpsat {

using Vertex = int;
using VertexSet = std::uint64_t;

/// Hard cap on the number of vertices. Every construction used at desk scale
/// (the largest is three copies of P3 x K5, 45 vertices) fits.
inline constexpr int kMaxVertices = 64;

[[nodiscard]] constexpr auto bit(Vertex v) -> VertexSet {
  return VertexSet{1} << v;
}

[[nodiscard]] constexpr auto low_bits(int n) -> VertexSet {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Calls f(v) for every vertex in the set, in ascending order.
template <class F>
constexpr auto for_each_vertex(VertexSet set, F && f) -> void {
  while (set) {
    f(std::countr_zero(set));
    set &= set - 1;
  }
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge &) const = default;
};

class Graph {
public:
  Graph() = default;

  explicit Graph(int order) : order_(order) {
    if (order < 0 || order > kMaxVertices)
      throw std::out_of_range("graph order " + std::to_string(order) + " outside 0.." +
                              std::to_string(kMaxVertices));
  }

  Graph(int order, std::initializer_list<Edge> edges) : Graph(order) {
    for (auto e : edges)
      link(e.u, e.v);
  }

  static auto from_edges(int order, std::span<const Edge> edges) -> Graph {
    Graph g(order);
    for (auto e : edges)
      g.link(e.u, e.v);
    return g;
  }

  /// Rebuilds a graph from adjacency rows; rows must be symmetric and loop-free.
  static auto from_rows(int order, std::span<const VertexSet> rows) -> Graph {
    Graph g(order);
    if (static_cast<int>(rows.size()) != order)
      throw std::invalid_argument("adjacency row count does not match order");
    for (int v = 0; v < order; ++v) {
      if (rows[v] & ~low_bits(order))
        throw std::invalid_argument("adjacency row refers to a vertex out of range");
      if (rows[v] & bit(v))
        throw std::invalid_argument("adjacency row contains a loop");
      g.adj_[v] = rows[v];
    }
    for (int v = 0; v < order; ++v)
      for_each_vertex(rows[v], [&](Vertex u) {
        if (!(rows[u] & bit(v)))
          throw std::invalid_argument("adjacency rows are not symmetric");
      });
    return g;
  }

  [[nodiscard]] auto order() const -> int { return order_; }

  [[nodiscard]] auto edge_count() const -> int {
    int twice = 0;
    for (int v = 0; v < order_; ++v)
      twice += std::popcount(adj_[v]);
    return twice / 2;
  }

  [[nodiscard]] auto vertices() const -> VertexSet { return low_bits(order_); }

  [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool {
    check_vertex(u);
    check_vertex(v);
    return adj_[u] & bit(v);
  }

  [[nodiscard]] auto neighbours(Vertex v) const -> VertexSet {
    check_vertex(v);
    return adj_[v];
  }

  [[nodiscard]] auto degree(Vertex v) const -> int { return std::popcount(neighbours(v)); }

  [[nodiscard]] auto degrees() const -> std::vector<int> {
    std::vector<int> result(order_);
    for (int v = 0; v < order_; ++v)
      result[v] = std::popcount(adj_[v]);
    return result;
  }

  [[nodiscard]] auto max_degree() const -> int {
    int best = 0;
    for (int v = 0; v < order_; ++v)
      best = std::max(best, std::popcount(adj_[v]));
    return best;
  }

  [[nodiscard]] auto min_degree() const -> int {
    if (order_ == 0)
      return 0;
    int best = order_;
    for (int v = 0; v < order_; ++v)
      best = std::min(best, std::popcount(adj_[v]));
    return best;
  }

  [[nodiscard]] auto is_complete() const -> bool {
    return 2 * edge_count() == order_ * (order_ - 1);
  }

  /// Edges (u, v) with u < v in lexicographic order.
  [[nodiscard]] auto edges() const -> std::vector<Edge> {
    std::vector<Edge> result;
    for (int u = 0; u < order_; ++u)
      for_each_vertex(adj_[u] & ~low_bits(u + 1), [&](Vertex v) { result.push_back({u, v}); });
    return result;
  }

  /// The graph with vertex v renamed to mapping[v]; mapping must be a permutation.
  [[nodiscard]] auto relabelled(std::span<const Vertex> mapping) const -> Graph {
    if (static_cast<int>(mapping.size()) != order_)
      throw std::invalid_argument("relabelling has the wrong length");
    VertexSet seen = 0;
    for (auto image : mapping) {
      check_vertex(image);
      seen |= bit(image);
    }
    if (seen != vertices())
      throw std::invalid_argument("relabelling is not a permutation");
    Graph g(order_);
    for (int u = 0; u < order_; ++u)
      for_each_vertex(adj_[u], [&](Vertex v) { g.adj_[mapping[u]] |= bit(mapping[v]); });
    return g;
  }

  friend auto operator==(const Graph & a, const Graph & b) -> bool {
    return a.order_ == b.order_ &&
           std::equal(a.adj_.begin(), a.adj_.begin() + a.order_, b.adj_.begin());
  }

private:
  friend auto add_edge(const Graph & g, Vertex u, Vertex v) -> Graph;
  friend auto disjoint_union(std::span<const Graph> parts) -> Graph;
  friend auto cartesian_product(const Graph & g, const Graph & h) -> Graph;

  auto check_vertex(Vertex v) const -> void {
    if (v < 0 || v >= order_)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                              std::to_string(order_ - 1));
  }

  auto link(Vertex u, Vertex v) -> void {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw std::invalid_argument("loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  int order_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// G + uv. Rejects loops and edges that are already present.
[[nodiscard]] inline auto add_edge(const Graph & g, Vertex u, Vertex v) -> Graph {
  if (u == v)
    throw std::invalid_argument("cannot add a loop at vertex " + std::to_string(u));
  if (g.adjacent(u, v))
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " already present");
  Graph result = g;
  result.link(u, v);
  return result;
}

/// Unordered non-adjacent pairs (u < v), lexicographic.
[[nodiscard]] inline auto non_edges(const Graph & g) -> std::vector<Edge> {
  std::vector<Edge> result;
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for_each_vertex(~g.neighbours(u) & g.vertices() & ~low_bits(u + 1),
                    [&](Vertex v) { result.push_back({u, v}); });
  return result;
}

/// Block-diagonal union; part i occupies the labels following parts 0..i-1.
[[nodiscard]] inline auto disjoint_union(std::span<const Graph> parts) -> Graph {
  if (parts.empty())
    throw std::invalid_argument("disjoint union of an empty sequence");
  int total = 0;
  for (const auto & part : parts)
    total += part.order();
  Graph result(total);
  int offset = 0;
  for (const auto & part : parts) {
    for (int v = 0; v < part.order(); ++v)
      result.adj_[offset + v] = part.adj_[v] << offset;
    offset += part.order();
  }
  return result;
}

[[nodiscard]] inline auto disjoint_union(std::initializer_list<Graph> parts) -> Graph {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

/// p disjoint copies of g.
[[nodiscard]] inline auto copies(const Graph & g, int p) -> Graph {
  if (p < 1)
    throw std::invalid_argument("copy count must be at least 1");
  std::vector<Graph> parts(p, g);
  return disjoint_union(parts);
}

/// G x H with (a, b) labelled a * |V(H)| + b.
[[nodiscard]] inline auto cartesian_product(const Graph & g, const Graph & h) -> Graph {
  const int gn = g.order();
  const int hn = h.order();
  Graph result(gn * hn);
  for (int a = 0; a < gn; ++a)
    for (int b = 0; b < hn; ++b) {
      const Vertex x = a * hn + b;
      for_each_vertex(g.adj_[a], [&](Vertex a2) { result.adj_[x] |= bit(a2 * hn + b); });
      for_each_vertex(h.adj_[b], [&](Vertex b2) { result.adj_[x] |= bit(a * hn + b2); });
    }
  return result;
}

/// Vertex sets of the connected components, ordered by smallest member.
[[nodiscard]] inline auto component_sets(const Graph & g) -> std::vector<VertexSet> {
  std::vector<VertexSet> result;
  VertexSet unseen = g.vertices();
  while (unseen) {
    VertexSet component = bit(std::countr_zero(unseen));
    VertexSet frontier = component;
    while (frontier) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbours(v); });
      frontier = next & ~component;
      component |= frontier;
    }
    result.push_back(component);
    unseen &= ~component;
  }
  return result;
}

[[nodiscard]] inline auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>> {
  std::vector<std::vector<Vertex>> result;
  for (auto set : component_sets(g)) {
    auto & members = result.emplace_back();
    for_each_vertex(set, [&](Vertex v) { members.push_back(v); });
  }
  return result;
}

[[nodiscard]] inline auto is_connected(const Graph & g) -> bool {
  return component_sets(g).size() <= 1;
}

/// The subgraph induced on `keep`, relabelled 0.. in ascending vertex order.
[[nodiscard]] inline auto induced_subgraph(const Graph & g, VertexSet keep) -> Graph {
  std::array<Vertex, kMaxVertices> position{};
  int count = 0;
  for_each_vertex(keep, [&](Vertex v) { position[v] = count++; });
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if ((keep & bit(e.u)) && (keep & bit(e.v)))
      edges.push_back({position[e.u], position[e.v]});
  return Graph::from_edges(count, edges);
}

} // namespace dmpsat
