#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "cfgeo/graph.hpp"

namespace cfgeo {

namespace detail {

class DominationSearch {
public:
  explicit DominationSearch(const Graph& g) : g_(g), dominated_by_(g.size(), 0) {
    for (Vertex v = 0; v < g.size(); ++v) max_closed_ = std::max(max_closed_, g.degree(v) + 1);
  }

  std::size_t run() {
    best_ = greedy_upper_bound();
    undominated_ = g_.size();
    std::fill(dominated_by_.begin(), dominated_by_.end(), 0);
    recurse(0);
    return best_;
  }

private:
  std::size_t greedy_upper_bound() {
    std::vector<char> covered(g_.size(), 0);
    std::size_t left = g_.size(), picks = 0;
    while (left > 0) {
      Vertex best_v = 0;
      std::size_t best_gain = 0;
      for (Vertex v = 0; v < g_.size(); ++v) {
        std::size_t gain = covered[v] ? 0 : 1;
        for (Vertex w : g_.neighbors(v)) gain += covered[w] ? 0 : 1;
        if (gain > best_gain) best_gain = gain, best_v = v;
      }
      for (Vertex w : g_.neighborhood(best_v, Mode::closed))
        if (!covered[w]) covered[w] = 1, --left;
      ++picks;
    }
    return picks;
  }

  void add(Vertex v, int delta) {
    for (Vertex w : g_.neighborhood(v, Mode::closed)) {
      if (delta > 0 && dominated_by_[w]++ == 0) --undominated_;
      if (delta < 0 && --dominated_by_[w] == 0) ++undominated_;
    }
  }

  void recurse(std::size_t chosen) {
    if (undominated_ == 0) {
      best_ = std::min(best_, chosen);
      return;
    }
    const std::size_t bound = chosen + (undominated_ + max_closed_ - 1) / max_closed_;
    if (bound >= best_) return;
    Vertex u = 0;
    while (dominated_by_[u] != 0) ++u;
    // one of N[u] must be in the set
    for (Vertex w : g_.neighborhood(u, Mode::closed)) {
      add(w, +1);
      recurse(chosen + 1);
      add(w, -1);
    }
  }

  const Graph& g_;
  std::vector<std::size_t> dominated_by_;
  std::size_t undominated_ = 0;
  std::size_t max_closed_ = 1;
  std::size_t best_ = 0;
};

}  // namespace detail

/// Exact domination number by branch-and-bound. Intended for n up to about 40.
inline std::size_t domination_number(const Graph& g) {
  if (g.empty()) return 0;
  return detail::DominationSearch(g).run();
}

inline bool is_dominating(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<char> covered(g.size(), 0);
  for (Vertex v : set)
    for (Vertex w : g.neighborhood(v, Mode::closed)) covered[w] = 1;
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

/// BFS distances from `source`; unreachable vertices get SIZE_MAX.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.size(), std::numeric_limits<std::size_t>::max());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != std::numeric_limits<std::size_t>::max()) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

/// Largest pairwise distance; nullopt when the graph is disconnected. 0 for the empty graph.
inline std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t diam = 0;
  for (Vertex s = 0; s < g.size(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
      diam = std::max(diam, d);
    }
  }
  return diam;
}

/// Every dominating set of size exactly three, as sorted triples.
inline std::vector<std::array<Vertex, 3>> dominating_triples(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  const auto n = static_cast<Vertex>(g.size());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (is_dominating(g, {a, b, c})) out.push_back({a, b, c});
  return out;
}

/// Whether x and y share a neighbor that lies outside N[z].
inline bool private_common_neighbor(const Graph& g, Vertex x, Vertex y, Vertex z) {
  for (Vertex w : g.neighbors(x))
    if (w != z && g.adjacent(w, y) && !g.adjacent(w, z)) return true;
  return false;
}

struct AreaConditions {
  bool cond1 = false;  // gamma == 3 and every minimum dominating set has pairwise private common neighbors
  bool cond2 = false;  // diameter == 2
};

/// Necessary conditions for a 2x2-square unit disk graph to need three colors.
inline AreaConditions check_area_conditions(const Graph& g) {
  AreaConditions out;
  if (domination_number(g) == 3) {
    out.cond1 = true;
    for (const auto& [a, b, c] : dominating_triples(g)) {
      if (!private_common_neighbor(g, a, b, c) || !private_common_neighbor(g, a, c, b) ||
          !private_common_neighbor(g, b, c, a)) {
        out.cond1 = false;
        break;
      }
    }
  }
  auto d = diameter(g);
  out.cond2 = d && *d == 2;
  return out;
}

}  // namespace cfgeo
