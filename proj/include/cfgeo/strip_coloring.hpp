#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cfgeo/geometry.hpp"
#include "cfgeo/graph.hpp"

namespace cfgeo {

/// Colored vertices of one greedy run in the order they were chosen.
struct ColoredPointTrace {
  std::vector<Vertex> order;
  std::vector<Color> colors;
};

struct StripColoring {
  PartialColoring coloring;
  ColoredPointTrace trace;
  bool valid = true;  // only ever false in experimental mode
};

struct GreedyOptions {
  /// Accept unit-disk instances of height up to 2 (not guaranteed to succeed; the result's
  /// `valid` flag reports the verifier's verdict instead of throwing).
  bool experimental_height2 = false;
};

/// Lexicographic point order (x, then y, then id).
inline std::vector<Vertex> lexicographic_order(const GeometricInstance& inst, std::span<const Vertex> members) {
  std::vector<Vertex> out(members.begin(), members.end());
  std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
    const auto& p = inst.objects[a];
    const auto& q = inst.objects[b];
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return a < b;
  });
  return out;
}

namespace detail {

// Repeatedly colors the largest point c (in `ordered`) such that every smaller point is
// covered by the colored set plus c. Coverage only counts colored points of this run.
inline std::vector<Vertex> greedy_cover_sequence(const Graph& g, const std::vector<Vertex>& ordered) {
  const std::size_t m = ordered.size();
  std::map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[ordered[i]] = i;
  std::vector<std::size_t> cover(m, 0);
  std::vector<char> chosen(m, 0);
  std::vector<Vertex> picks;
  std::size_t first_uncovered = 0;
  while (true) {
    while (first_uncovered < m && cover[first_uncovered] > 0) ++first_uncovered;
    if (first_uncovered == m) break;
    const std::size_t u = first_uncovered;
    std::size_t best = u;
    for (std::size_t idx = u + 1; idx < m; ++idx) {
      const Vertex c = ordered[idx];
      if (chosen[idx] || !g.adjacent(c, ordered[u])) continue;
      bool ok = true;
      for (std::size_t p = u + 1; p < idx && ok; ++p)
        if (cover[p] == 0 && !g.adjacent(c, ordered[p])) ok = false;
      if (ok) best = idx;
    }
    chosen[best] = 1;
    picks.push_back(ordered[best]);
    ++cover[best];
    for (Vertex w : g.neighbors(ordered[best])) {
      auto it = pos.find(w);
      if (it != pos.end()) ++cover[it->second];
    }
  }
  return picks;
}

inline std::string offending_heights(const GeometricInstance& inst) {
  auto by_y = [](const GeoObject& a, const GeoObject& b) { return a.y < b.y; };
  auto lo = std::min_element(inst.objects.begin(), inst.objects.end(), by_y);
  auto hi = std::max_element(inst.objects.begin(), inst.objects.end(), by_y);
  return "object " + std::to_string(lo->id) + " at (" + to_string(lo->x) + ", " + to_string(lo->y) +
         ") and object " + std::to_string(hi->id) + " at (" + to_string(hi->x) + ", " + to_string(hi->y) + ")";
}

inline void greedy_run(const Graph& g, const GeometricInstance& inst, std::span<const Vertex> members,
                       std::pair<Color, Color> palette, PartialColoring& out, ColoredPointTrace& trace) {
  auto picks = greedy_cover_sequence(g, lexicographic_order(inst, members));
  for (std::size_t i = 0; i < picks.size(); ++i) {
    Color c = i % 2 == 0 ? palette.first : palette.second;
    out.assign(picks[i], c);
    trace.order.push_back(picks[i]);
    trace.colors.push_back(c);
  }
}

}  // namespace detail

/// Two-color greedy for a single strip: unit disks of height at most sqrt(3) or unit
/// squares of height at most 2.
inline StripColoring greedy_strip_coloring(const GeometricInstance& inst, std::pair<Color, Color> palette = {1, 2},
                                           const GreedyOptions& opt = {}) {
  if (inst.kind == ShapeKind::unit_disk) {
    StripHeight bound = opt.experimental_height2 ? StripHeight::rational(2) : StripHeight::sqrt3();
    if (!height_at_most(inst, bound))
      throw precondition_error("unit-disk instance is taller than " + bound.describe() + ": " +
                               detail::offending_heights(inst));
  } else if (inst.kind == ShapeKind::unit_square) {
    if (!height_at_most(inst, StripHeight::rational(2)))
      throw precondition_error("unit-square instance is taller than 2: " + detail::offending_heights(inst));
  } else {
    throw precondition_error(std::string("strip greedy needs unit disks or unit squares, got ") + to_string(inst.kind));
  }
  if (palette.first == palette.second || palette.first == 0 || palette.second == 0)
    throw contract_error("palette needs two distinct nonzero colors");
  Graph g = build_intersection_graph(inst);
  StripColoring res{PartialColoring(inst.size(), std::max(palette.first, palette.second)), {}, true};
  std::vector<Vertex> all(inst.size());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  detail::greedy_run(g, inst, all, palette, res.coloring, res.trace);
  res.valid = verify_cf(g, res.coloring).valid;
  if (!res.valid && !opt.experimental_height2)
    throw invariant_violation("strip greedy produced an invalid coloring");
  return res;
}

namespace detail {

inline PartialColoring color_by_strips(const GeometricInstance& inst, ShapeKind want, const StripHeight& height,
                                       Color palettes) {
  if (inst.kind != want)
    throw precondition_error(std::string("expected a ") + to_string(want) + " instance, got " + to_string(inst.kind));
  Graph g = build_intersection_graph(inst);
  auto strips = decompose_strips(inst, height);
  std::map<std::int64_t, std::vector<Vertex>> members;
  for (Vertex v = 0; v < inst.size(); ++v) members[strips.strip_of[v]].push_back(v);
  PartialColoring out(inst.size(), 2 * palettes);
  ColoredPointTrace trace;
  for (const auto& [idx, verts] : members) {
    const auto t = static_cast<Color>(idx % palettes);
    detail::greedy_run(g, inst, verts, {2 * t + 1, 2 * t + 2}, out, trace);
  }
  if (!verify_cf(g, out).valid) throw invariant_violation("strip-composed coloring failed verification");
  if (out.distinct_colors() > 2 * palettes) throw invariant_violation("strip-composed coloring uses too many colors");
  return out;
}

}  // namespace detail

/// Conflict-free coloring of any unit disk instance with at most 6 colors: strips of
/// height sqrt(3) from the lowest center, palettes {1,2}, {3,4}, {5,6} cyclically.
inline PartialColoring color_unit_disks(const GeometricInstance& inst) {
  return detail::color_by_strips(inst, ShapeKind::unit_disk, StripHeight::sqrt3(), 3);
}

/// Conflict-free coloring of any unit square instance with at most 4 colors: strips of
/// height 2, palettes {1,2} and {3,4} alternating.
inline PartialColoring color_unit_squares(const GeometricInstance& inst) {
  return detail::color_by_strips(inst, ShapeKind::unit_square, StripHeight::rational(2), 2);
}

/// Two-color greedy for arbitrary intervals: repeatedly color the interval reaching
/// farthest right whose selection leaves no earlier interval uncovered.
inline StripColoring color_intervals_traced(const GeometricInstance& inst) {
  if (inst.kind != ShapeKind::interval)
    throw precondition_error(std::string("expected an interval instance, got ") + to_string(inst.kind));
  Graph g = build_intersection_graph(inst);
  const std::size_t n = inst.size();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  const auto& obj = inst.objects;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (obj[a].lo != obj[b].lo) return obj[a].lo < obj[b].lo;
    if (obj[a].hi != obj[b].hi) return obj[a].hi < obj[b].hi;
    return a < b;
  });
  std::vector<std::size_t> cover(n, 0);  // indexed by vertex
  std::vector<char> chosen(n, 0);
  StripColoring res{PartialColoring(n, 2), {}, true};
  std::size_t first_uncovered = 0;
  while (true) {
    while (first_uncovered < n && cover[order[first_uncovered]] > 0) ++first_uncovered;
    if (first_uncovered == n) break;
    std::optional<Vertex> best;
    for (std::size_t idx = 0; idx < n; ++idx) {
      const Vertex w = order[idx];
      if (chosen[w]) continue;
      bool ok = true;
      for (std::size_t p = first_uncovered; p < idx && ok; ++p)
        if (cover[order[p]] == 0 && !g.adjacent(w, order[p])) ok = false;
      if (!ok) continue;
      if (!best) {
        best = w;
        continue;
      }
      const auto& b = obj[*best];
      const auto& c = obj[w];
      if (c.hi > b.hi || (c.hi == b.hi && (c.lo > b.lo || (c.lo == b.lo && w < *best)))) best = w;
    }
    const Vertex pick = *best;  // the first uncovered interval is always a candidate
    chosen[pick] = 1;
    const Color color = res.trace.order.size() % 2 == 0 ? 1 : 2;
    res.coloring.assign(pick, color);
    res.trace.order.push_back(pick);
    res.trace.colors.push_back(color);
    ++cover[pick];
    for (Vertex w : g.neighbors(pick)) ++cover[w];
  }
  if (!verify_cf(g, res.coloring).valid) throw invariant_violation("interval greedy produced an invalid coloring");
  return res;
}

inline PartialColoring color_intervals(const GeometricInstance& inst) { return color_intervals_traced(inst).coloring; }

/// Checks the per-run properties of a strip greedy trace and returns a description of each
/// failure: alternating colors, strictly increasing lexicographic order, horizontal gap
/// between consecutive picks above `min_gap`, and no two same-colored picks adjacent.
inline std::vector<std::string> trace_violations(const GeometricInstance& inst, const Graph& g,
                                                 const ColoredPointTrace& trace, const Rational& min_gap) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < trace.order.size(); ++i) {
    if (i >= 2 && trace.colors[i] != trace.colors[i - 2]) out.push_back("colors do not alternate at " + std::to_string(i));
    if (i >= 1 && trace.colors[i] == trace.colors[i - 1]) out.push_back("repeated color at " + std::to_string(i));
    if (i == 0) continue;
    const auto& a = inst.objects[trace.order[i - 1]];
    const auto& b = inst.objects[trace.order[i]];
    bool increasing = a.x < b.x || (a.x == b.x && (a.y < b.y || (a.y == b.y && a.id < b.id)));
    if (!increasing) out.push_back("trace not increasing at " + std::to_string(i));
    if (!(b.x - a.x > min_gap)) out.push_back("horizontal gap too small at " + std::to_string(i));
  }
  for (std::size_t i = 0; i < trace.order.size(); ++i)
    for (std::size_t j = i + 1; j < trace.order.size(); ++j)
      if (trace.colors[i] == trace.colors[j] && g.adjacent(trace.order[i], trace.order[j]))
        out.push_back("same-colored picks " + std::to_string(trace.order[i]) + " and " +
                      std::to_string(trace.order[j]) + " are adjacent");
  return out;
}

}  // namespace cfgeo
