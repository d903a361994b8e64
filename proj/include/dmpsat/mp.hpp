#pragma once

/**
 * Longest degree-monotone paths.
 *
 * mp(G) counts VERTICES on a longest path whose degree sequence (degrees
 * taken in G itself) is non-decreasing or non-increasing; equal consecutive
 * degrees are allowed. Literature sometimes calls this the "length" of the
 * path even though it is a vertex count.
 *
 * Reversing a non-increasing path gives a non-decreasing one, so the solver
 * searches one orientation only. It is an exact depth-first search: each
 * step moves to an unvisited neighbour of equal or larger degree, and a
 * branch is cut when its length plus the number of still-eligible vertices
 * reachable from the tail cannot beat the best path found.
 */

#include "dmpsat/graph.hpp"

#include <array>
#include <bit>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmpsat {

struct DmPath {
  std::vector<Vertex> vertices;
  std::vector<int> degrees;

  [[nodiscard]] auto size() const -> int { return static_cast<int>(vertices.size()); }
};

enum class Direction { non_decreasing, non_increasing };

/// Distinct vertices, consecutive ones adjacent, degrees monotone; non-empty.
[[nodiscard]] inline auto is_degree_monotone_path(const Graph & g, std::span<const Vertex> path) -> bool {
  if (path.empty())
    return false;
  VertexSet seen = 0;
  for (auto v : path) {
    if (v < 0 || v >= g.order() || (seen & bit(v)))
      return false;
    seen |= bit(v);
  }
  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.adjacent(path[i - 1], path[i]))
      return false;
    const int a = g.degree(path[i - 1]);
    const int b = g.degree(path[i]);
    up = up && a <= b;
    down = down && a >= b;
  }
  return up || down;
}

[[nodiscard]] inline auto make_dm_path(const Graph & g, std::vector<Vertex> vertices) -> DmPath {
  if (!is_degree_monotone_path(g, vertices))
    throw std::invalid_argument("vertex sequence is not a degree-monotone path");
  DmPath path;
  path.degrees.reserve(vertices.size());
  for (auto v : vertices)
    path.degrees.push_back(g.degree(v));
  path.vertices = std::move(vertices);
  return path;
}

namespace detail {

class MonotonePathSearch {
public:
  MonotonePathSearch(const Graph & g, Direction direction) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      rows_[v] = g.neighbours(v);
      degree_[v] = std::popcount(rows_[v]);
    }
    for (int d = 0; d <= n_; ++d) {
      VertexSet set = 0;
      for (int v = 0; v < n_; ++v)
        if (direction == Direction::non_decreasing ? degree_[v] >= d : degree_[v] <= d)
          set |= bit(v);
      eligible_by_degree_[d] = set;
    }
  }

  // Longest path (or the first one reaching `target` vertices) with all
  // vertices inside `scope`.
  auto run(VertexSet scope, int target) -> std::vector<Vertex> {
    target_ = target;
    scope_ = scope;
    best_.clear();
    best_length_ = 0;
    for_each_vertex(scope, [&](Vertex s) {
      if (best_length_ >= target_)
        return;
      path_[0] = s;
      extend(s, bit(s), 1);
    });
    return best_;
  }

private:
  auto extend(Vertex tail, VertexSet visited, int length) -> void {
    if (length > best_length_) {
      best_length_ = length;
      best_.assign(path_.begin(), path_.begin() + length);
    }
    if (best_length_ >= target_)
      return;
    const VertexSet eligible = eligible_by_degree_[degree_[tail]] & scope_ & ~visited;
    const VertexSet next = rows_[tail] & eligible;
    if (!next)
      return;

    VertexSet reach = next;
    VertexSet frontier = next;
    while (frontier) {
      VertexSet grown = 0;
      for_each_vertex(frontier, [&](Vertex x) { grown |= rows_[x]; });
      frontier = grown & eligible & ~reach;
      reach |= frontier;
    }
    if (length + std::popcount(reach) <= best_length_)
      return;

    for_each_vertex(next, [&](Vertex v) {
      if (best_length_ >= target_)
        return;
      path_[length] = v;
      extend(v, visited | bit(v), length + 1);
    });
  }

  int n_;
  std::array<VertexSet, kMaxVertices> rows_{};
  std::array<int, kMaxVertices> degree_{};
  std::array<VertexSet, kMaxVertices + 1> eligible_by_degree_{};
  std::array<Vertex, kMaxVertices> path_{};
  std::vector<Vertex> best_;
  int best_length_ = 0;
  int target_ = 0;
  VertexSet scope_ = 0;
};

inline auto require_vertices(const Graph & g) -> void {
  if (g.order() < 1)
    throw std::invalid_argument("mp is defined for graphs with at least one vertex");
}

} // namespace detail

inline constexpr int kNoTarget = std::numeric_limits<int>::max();

/// Longest monotone path in the given orientation, restricted to `scope`
/// (all vertices by default). Stops at the first path with `target` vertices.
[[nodiscard]] inline auto longest_monotone_path(const Graph & g, Direction direction = Direction::non_decreasing,
                                                int target = kNoTarget, std::optional<VertexSet> scope = {})
    -> std::vector<Vertex> {
  detail::require_vertices(g);
  detail::MonotonePathSearch search(g, direction);
  return search.run(scope.value_or(g.vertices()) & g.vertices(), target);
}

[[nodiscard]] inline auto mp(const Graph & g) -> int {
  return static_cast<int>(longest_monotone_path(g).size());
}

/// mp computed in one fixed orientation; equals mp(g) for either choice.
[[nodiscard]] inline auto mp_oriented(const Graph & g, Direction direction) -> int {
  return static_cast<int>(longest_monotone_path(g, direction).size());
}

[[nodiscard]] inline auto mp_witness(const Graph & g) -> DmPath {
  return make_dm_path(g, longest_monotone_path(g));
}

/// A monotone path with at least `length` vertices, if one exists.
[[nodiscard]] inline auto find_monotone_path(const Graph & g, int length, std::optional<VertexSet> scope = {})
    -> std::optional<DmPath> {
  auto path = longest_monotone_path(g, Direction::non_decreasing, length, scope);
  if (static_cast<int>(path.size()) < length)
    return std::nullopt;
  return make_dm_path(g, std::move(path));
}

} // namespace dmpsat
