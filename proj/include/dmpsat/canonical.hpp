#pragma once

/**
 * Canonical labelling by individualisation and refinement.
 *
 * The initial ordered partition groups vertices by degree; it is refined to
 * an equitable partition, then the first smallest non-singleton cell is
 * split by individualising each of its vertices in turn. Every leaf of that
 * search tree is a relabelling of the graph; the canonical form is the
 * smallest upper-triangle bit string (graph6 bit order) over all leaves.
 * Automorphisms discovered at equal leaves prune sibling subtrees, both by
 * jumping back to the branching node and by orbit pruning under the
 * automorphisms that fix the current individualised prefix.
 *
 * Supported up to kCanonicalMaxVertices vertices.
 */

#include "dmpsat/graph.hpp"
#include "dmpsat/graph6.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dmpsat {

inline constexpr int kCanonicalMaxVertices = 32;

/// Isomorphism-invariant key: equal iff the graphs are isomorphic. Ordered by
/// vertex count, then by the canonical upper-triangle bit string.
struct CanonicalForm {
  static constexpr int kWords = (kCanonicalMaxVertices * (kCanonicalMaxVertices - 1) / 2 + 63) / 64;

  int order = 0;
  std::array<std::uint64_t, kWords> bits{};

  auto operator<=>(const CanonicalForm &) const = default;

  /// The canonically labelled graph this key encodes.
  [[nodiscard]] auto graph() const -> Graph {
    std::vector<Edge> edges;
    int k = 0;
    for (int j = 1; j < order; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if ((bits[k / 64] >> (63 - k % 64)) & 1)
          edges.push_back({i, j});
    return Graph::from_edges(order, edges);
  }

  [[nodiscard]] auto graph6() const -> std::string { return graph6_encode(graph()); }

  [[nodiscard]] auto edge_count() const -> int {
    int total = 0;
    for (auto w : bits)
      total += std::popcount(w);
    return total;
  }
};

struct CanonicalLabelling {
  /// position[i] is the original vertex placed at canonical label i.
  std::vector<Vertex> position;
  CanonicalForm form;
};

namespace detail {

class Canonicaliser {
public:
  explicit Canonicaliser(const Graph & g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v)
      rows_[v] = g.neighbours(v);
  }

  auto run() -> CanonicalLabelling {
    std::vector<VertexSet> cells;
    const auto degrees = g_.degrees();
    for (int d = 0; d < n_; ++d) {
      VertexSet cell = 0;
      for (int v = 0; v < n_; ++v)
        if (degrees[v] == d)
          cell |= bit(v);
      if (cell)
        cells.push_back(cell);
    }
    if (n_ == 0)
      return {{}, CanonicalForm{}};
    search(std::move(cells), 0);
    return {best_path_, best_};
  }

private:
  using Permutation = std::array<Vertex, kCanonicalMaxVertices>;

  // Splits every cell by the vector of neighbour counts into each cell until stable.
  auto refine(std::vector<VertexSet> & cells) const -> void {
    std::vector<std::pair<std::vector<int>, Vertex>> keyed;
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<VertexSet> next;
      next.reserve(n_);
      for (auto cell : cells) {
        if (std::popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        keyed.clear();
        for_each_vertex(cell, [&](Vertex v) {
          std::vector<int> counts(cells.size());
          for (std::size_t c = 0; c < cells.size(); ++c)
            counts[c] = std::popcount(rows_[v] & cells[c]);
          keyed.emplace_back(std::move(counts), v);
        });
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto & a, const auto & b) { return a.first < b.first; });
        VertexSet part = bit(keyed.front().second);
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(part);
            part = 0;
            changed = true;
          }
          part |= bit(keyed[i].second);
        }
        next.push_back(part);
      }
      cells = std::move(next);
    }
  }

  auto key_of(const std::vector<VertexSet> & cells) const -> std::pair<CanonicalForm, std::vector<Vertex>> {
    std::vector<Vertex> order;
    order.reserve(n_);
    for (auto cell : cells)
      order.push_back(std::countr_zero(cell));
    CanonicalForm form;
    form.order = n_;
    int k = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if (rows_[order[i]] & bit(order[j]))
          form.bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    return {form, std::move(order)};
  }

  auto record_automorphism(const std::vector<Vertex> & from, const std::vector<Vertex> & to) -> void {
    if (automorphisms_.size() >= kMaxStoredAutomorphisms)
      return;
    Permutation gamma{};
    for (int i = 0; i < n_; ++i)
      gamma[from[i]] = to[i];
    automorphisms_.push_back(gamma);
  }

  static auto divergence(const std::vector<Vertex> & a, const std::vector<Vertex> & b) -> int {
    int d = 0;
    while (d < static_cast<int>(a.size()) && d < static_cast<int>(b.size()) && a[d] == b[d])
      ++d;
    return d;
  }

  // True if v lies in the orbit of an already explored sibling under the
  // automorphisms found so far that fix every individualised vertex.
  auto pruned_by_orbit(Vertex v, VertexSet explored) const -> bool {
    if (!explored)
      return false;
    std::array<Vertex, kCanonicalMaxVertices> root{};
    std::iota(root.begin(), root.begin() + n_, 0);
    auto find = [&](Vertex x) {
      while (root[x] != x)
        x = root[x] = root[root[x]];
      return x;
    };
    for (const auto & gamma : automorphisms_) {
      bool fixes_prefix = true;
      for (auto p : prefix_)
        if (gamma[p] != p) {
          fixes_prefix = false;
          break;
        }
      if (!fixes_prefix)
        continue;
      for (int x = 0; x < n_; ++x)
        root[find(x)] = find(gamma[x]);
    }
    const Vertex rv = find(v);
    bool hit = false;
    for_each_vertex(explored, [&](Vertex u) { hit = hit || find(u) == rv; });
    return hit;
  }

  // Returns the depth to unwind to, or -1 to continue normally.
  auto search(std::vector<VertexSet> cells, int depth) -> int {
    refine(cells);
    std::size_t target = cells.size();
    int target_size = n_ + 1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const int size = std::popcount(cells[c]);
      if (size > 1 && size < target_size) {
        target = c;
        target_size = size;
      }
    }

    if (target == cells.size())
      return leaf(cells);

    VertexSet explored = 0;
    const VertexSet choices = cells[target];
    int unwind = -1;
    for_each_vertex(choices, [&](Vertex v) {
      if (unwind != -1 && unwind < depth)
        return;
      if (pruned_by_orbit(v, explored))
        return;
      std::vector<VertexSet> child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + target);
      child.push_back(bit(v));
      child.push_back(choices & ~bit(v));
      child.insert(child.end(), cells.begin() + target + 1, cells.end());
      prefix_.push_back(v);
      const int r = search(std::move(child), depth + 1);
      prefix_.pop_back();
      explored |= bit(v);
      if (r != -1 && r < depth)
        unwind = r;
    });
    return unwind;
  }

  auto leaf(const std::vector<VertexSet> & cells) -> int {
    auto [form, order] = key_of(cells);
    if (!have_first_) {
      have_first_ = true;
      first_ = best_ = form;
      first_path_ = best_prefix_ = prefix_;
      first_order_ = best_path_ = order;
      return -1;
    }
    if (form == first_) {
      record_automorphism(first_order_, order);
      return divergence(prefix_, first_path_);
    }
    if (form == best_) {
      record_automorphism(best_path_, order);
      return divergence(prefix_, best_prefix_);
    }
    if (form < best_) {
      best_ = form;
      best_path_ = std::move(order);
      best_prefix_ = prefix_;
    }
    return -1;
  }

  static constexpr std::size_t kMaxStoredAutomorphisms = 256;

  const Graph & g_;
  int n_;
  std::array<VertexSet, kMaxVertices> rows_{};
  std::vector<Vertex> prefix_;
  std::vector<Permutation> automorphisms_;
  bool have_first_ = false;
  CanonicalForm first_, best_;
  std::vector<Vertex> first_path_, first_order_, best_prefix_, best_path_;
};

} // namespace detail

[[nodiscard]] inline auto canonical_labelling(const Graph & g) -> CanonicalLabelling {
  if (g.order() > kCanonicalMaxVertices)
    throw std::out_of_range("canonical form supports at most " +
                            std::to_string(kCanonicalMaxVertices) + " vertices, got " +
                            std::to_string(g.order()));
  return detail::Canonicaliser(g).run();
}

[[nodiscard]] inline auto canonical_form(const Graph & g) -> CanonicalForm {
  return canonical_labelling(g).form;
}

[[nodiscard]] inline auto canonical_graph(const Graph & g) -> Graph {
  return canonical_form(g).graph();
}

[[nodiscard]] inline auto are_isomorphic(const Graph & a, const Graph & b) -> bool {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

} // namespace dmpsat
