#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfgeo/error.hpp"

namespace cfgeo {

using Vertex = std::uint32_t;
using Color = std::uint32_t;  // 1..palette; 0 is reserved for "uncolored"

inline constexpr Color kUncolored = 0;

enum class Mode { closed, open };

inline const char* to_string(Mode m) { return m == Mode::closed ? "closed" : "open"; }

/// Finite simple graph on vertices 0..n-1 with sorted, symmetric adjacency.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges and either orientation are accepted;
  /// self-loops and out-of-range endpoints are rejected.
  static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw contract_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside [0," + std::to_string(n) + ")");
      }
      if (u == v) {
        throw contract_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is a self-loop");
      }
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& row : g.adj_) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return g;
  }

  std::size_t size() const noexcept { return adj_.size(); }
  bool empty() const noexcept { return adj_.empty(); }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& row = adj_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
  }

  /// Edges (u,v) with u < v in increasing order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// N[v] when mode is closed, N(v) when open. Sorted.
  std::vector<Vertex> neighborhood(Vertex v, Mode mode) const {
    std::vector<Vertex> out = adj_.at(v);
    if (mode == Mode::closed) out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::vector<Vertex>> adj_;
};

inline Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  return Graph::from_edges(n, edges);
}

/// Colors from {1..palette_size} on a subset of the vertices.
class PartialColoring {
public:
  PartialColoring() = default;
  PartialColoring(std::size_t n, Color palette_size) : palette_(palette_size), colors_(n, kUncolored) {}

  std::size_t size() const noexcept { return colors_.size(); }
  Color palette_size() const noexcept { return palette_; }

  std::optional<Color> at(Vertex v) const {
    Color c = colors_.at(v);
    if (c == kUncolored) return std::nullopt;
    return c;
  }
  bool colored(Vertex v) const { return colors_.at(v) != kUncolored; }

  void assign(Vertex v, Color c) {
    if (c < 1 || c > palette_) {
      throw contract_error("color " + std::to_string(c) + " outside palette {1.." +
                           std::to_string(palette_) + "}");
    }
    colors_.at(v) = c;
  }
  void clear(Vertex v) { colors_.at(v) = kUncolored; }

  /// Raw per-vertex colors, 0 for uncolored.
  const std::vector<Color>& raw() const noexcept { return colors_; }

  std::size_t colored_count() const {
    return static_cast<std::size_t>(
        std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != kUncolored; }));
  }

  /// Number of distinct colors actually used.
  std::size_t distinct_colors() const {
    std::vector<Color> used;
    for (Color c : colors_)
      if (c != kUncolored) used.push_back(c);
    std::sort(used.begin(), used.end());
    return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
  }

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

private:
  Color palette_ = 0;
  std::vector<Color> colors_;
};

struct VerifyReport {
  bool valid = true;
  std::vector<Vertex> violations;
  Mode mode = Mode::closed;
};

/// True iff some color occurs exactly once among the colored vertices of `hood`.
inline bool has_unique_color(const std::vector<Vertex>& hood, const PartialColoring& c) {
  // neighborhoods are small; a quadratic scan avoids any allocation
  for (std::size_t i = 0; i < hood.size(); ++i) {
    Color ci = c.raw()[hood[i]];
    if (ci == kUncolored) continue;
    bool unique = true;
    for (std::size_t j = 0; j < hood.size() && unique; ++j)
      if (j != i && c.raw()[hood[j]] == ci) unique = false;
    if (unique) return true;
  }
  return false;
}

inline bool vertex_satisfied(const Graph& g, const PartialColoring& c, Vertex v, Mode mode) {
  return has_unique_color(g.neighborhood(v, mode), c);
}

inline VerifyReport verify_cf(const Graph& g, const PartialColoring& c, Mode mode = Mode::closed) {
  if (c.size() != g.size()) {
    throw contract_error("coloring has " + std::to_string(c.size()) + " entries, graph has " +
                         std::to_string(g.size()) + " vertices");
  }
  VerifyReport report;
  report.mode = mode;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!vertex_satisfied(g, c, v, mode)) report.violations.push_back(v);
  report.valid = report.violations.empty();
  return report;
}

/// Disjoint union; vertices of `b` are shifted by a.size().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto off = static_cast<Vertex>(a.size());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
  return Graph::from_edges(a.size() + b.size(), edges);
}

}  // namespace cfgeo
