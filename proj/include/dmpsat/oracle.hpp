#pragma once

// Brute-force reference for mp(G): walks every simple path from every start
// vertex with no degree filtering, and keeps the longest one whose degree
// sequence is monotone in either direction. Shares nothing with the solver
// in mp.hpp beyond the Graph type.

#include "dmpsat/graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dmpsat {

inline constexpr int kOracleMaxVertices = 8;

namespace detail {

inline auto oracle_walk(const Graph & g, const std::vector<int> & degrees, std::vector<Vertex> & path,
                        std::vector<bool> & on_path, int & best) -> void {
  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < path.size(); ++i) {
    up = up && degrees[path[i - 1]] <= degrees[path[i]];
    down = down && degrees[path[i - 1]] >= degrees[path[i]];
  }
  if ((up || down) && static_cast<int>(path.size()) > best)
    best = static_cast<int>(path.size());
  const Vertex tail = path.back();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (on_path[v] || !g.adjacent(tail, v))
      continue;
    on_path[v] = true;
    path.push_back(v);
    oracle_walk(g, degrees, path, on_path, best);
    path.pop_back();
    on_path[v] = false;
  }
}

} // namespace detail

[[nodiscard]] inline auto mp_oracle(const Graph & g) -> int {
  if (g.order() < 1 || g.order() > kOracleMaxVertices)
    throw std::out_of_range("mp oracle supports 1.." + std::to_string(kOracleMaxVertices) +
                            " vertices, got " + std::to_string(g.order()));
  const auto degrees = g.degrees();
  int best = 0;
  std::vector<Vertex> path;
  std::vector<bool> on_path(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    on_path[s] = true;
    detail::oracle_walk(g, degrees, path, on_path, best);
    on_path[s] = false;
  }
  return best;
}

} // namespace dmpsat
