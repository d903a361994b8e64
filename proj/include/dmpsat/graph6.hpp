#pragma once

// graph6 codec (McKay's format). The upper triangle is read column by column,
// x(0,1) x(0,2) x(1,2) x(0,3) ..., packed six bits per byte, big-endian,
// each byte offset by 63. Orders up to 62 use one size byte; 63..64 use the
// four-byte '~' form.

#include "dmpsat/graph.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dmpsat {

class Graph6Error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

[[nodiscard]] inline auto graph6_encode(const Graph & g) -> std::string {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

[[nodiscard]] inline auto graph6_decode(std::string_view text) -> Graph {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header))
    text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty())
    throw Graph6Error("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126)
      throw Graph6Error("graph6 byte outside 63..126");

  auto value = [&](std::size_t i) { return static_cast<int>(text[i]) - 63; };
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = value(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw Graph6Error("graph6 order too large");
    if (text.size() < 4)
      throw Graph6Error("truncated graph6 size field");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds the " +
                      std::to_string(kMaxVertices) + "-vertex cap");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body)
    throw Graph6Error("graph6 length mismatch: expected " + std::to_string(body) +
                      " data bytes, got " + std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1)
        edges.push_back({i, j});
    }
  if (bits % 6 != 0) {
    const int last = value(text.size() - 1);
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw Graph6Error("graph6 padding bits are not zero");
  }
  return Graph::from_edges(n, edges);
}

/// Reads one graph per non-empty line.
[[nodiscard]] inline auto read_graph6_stream(std::istream & in) -> std::vector<Graph> {
  std::vector<Graph> result;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r")
      continue;
    result.push_back(graph6_decode(line));
  }
  return result;
}

inline auto write_graph6_stream(std::ostream & out, std::span<const Graph> graphs) -> void {
  for (const auto & g : graphs)
    out << graph6_encode(g) << '\n';
}

} // namespace dmpsat
