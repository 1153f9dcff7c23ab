#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cfgeo/gadgets.hpp"
#include "cfgeo/geometry.hpp"
#include "cfgeo/reduction.hpp"

namespace cfgeo {

// ---------------------------------------------------------------------------
// Chains: the hypergraph on {1..m} whose hyperedges are all index intervals.

struct ChainSpec {
  std::uint32_t m = 1;
};

/// Whether every interval [i,j] of `colors` (0 = uncolored) contains a color occurring
/// exactly once in it.
inline bool every_interval_has_unique(const std::vector<Color>& colors) {
  const std::size_t m = colors.size();
  std::vector<std::uint32_t> count;
  for (std::size_t i = 0; i < m; ++i) {
    count.assign(m + 2, 0);
    std::size_t singletons = 0;
    for (std::size_t j = i; j < m; ++j) {
      Color c = colors[j];
      if (c != kUncolored) {
        if (c >= count.size()) count.resize(c + 1, 0);
        auto& k = count[c];
        if (k == 0) ++singletons;
        else if (k == 1) --singletons;
        ++k;
      }
      if (singletons == 0) return false;
    }
  }
  return true;
}

struct ChainColoring {
  Color k = 0;
  std::vector<Color> witness;
};

/// floor(log2 m) + 1 colors, witnessed by the ruler coloring (2-adic valuation + 1).
inline ChainColoring chain_min_colors(std::uint32_t m) {
  if (m < 1) throw contract_error("chain length must be at least 1");
  ChainColoring out;
  out.k = static_cast<Color>(std::bit_width(m));
  for (std::uint32_t i = 1; i <= m; ++i) out.witness.push_back(static_cast<Color>(std::countr_zero(i)) + 1);
  if (!every_interval_has_unique(out.witness)) throw invariant_violation("ruler coloring misses an interval");
  return out;
}

/// Least k for which some full k-coloring of the chain gives every interval a unique
/// color, by exhaustive enumeration. Limited to m <= 8.
inline Color chain_oracle(std::uint32_t m) {
  if (m < 1) throw contract_error("chain length must be at least 1");
  if (m > 8) throw contract_error("chain oracle is exhaustive and limited to m <= 8");
  for (Color k = 1;; ++k) {
    std::vector<Color> colors(m, 1);
    while (true) {
      if (every_interval_has_unique(colors)) return k;
      std::size_t i = 0;
      while (i < m && colors[i] == k) colors[i++] = 1;
      if (i == m) break;
      ++colors[i];
    }
  }
}

// ---------------------------------------------------------------------------
// Size recurrences.

/// |G_1| = 1, |G_2| = 4, |G_n| = n + 2n|G_{n-1}| + n(n-1)|G_{n-2}|.
inline Integer recurrence_gn(std::uint32_t n) {
  if (n < 1) throw contract_error("recurrence_gn needs n >= 1");
  Integer prev2 = 1, prev1 = 4;
  if (n == 1) return prev2;
  for (std::uint32_t i = 3; i <= n; ++i) {
    Integer cur = Integer(i) + 2 * Integer(i) * prev1 + Integer(i) * (i - 1) * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

/// The published D_k size recurrence, one copy of D_{k-1} per interval:
/// |D_1| = 1, |D_k| = 2^(k-1) + 2^(k-1)(2^(k-1)+1)/2 * |D_{k-1}|.
inline Integer recurrence_dk_paper(std::uint32_t k) {
  if (k < 1) throw contract_error("recurrence_dk_paper needs k >= 1");
  Integer d = 1;
  for (std::uint32_t i = 2; i <= k; ++i) {
    Integer m = Integer(1) << (i - 1);
    d = m + m * (m + 1) / 2 * d;
  }
  return d;
}

/// Vertex count of gen_dk, two copies per interval: m + m(m+1)|D_{k-1}|.
inline Integer dk_two_copy_size(std::uint32_t k) {
  if (k < 1) throw contract_error("dk_two_copy_size needs k >= 1");
  Integer d = 1;
  for (std::uint32_t i = 2; i <= k; ++i) {
    Integer m = Integer(1) << (i - 1);
    d = m + m * (m + 1) * d;
  }
  return d;
}

/// Upper-bounding recurrence: equal to |G_n| for n <= 2, then 3n*a(n-1) + n(n-1)*a(n-2).
inline Integer gbar_recurrence(std::uint32_t n) {
  if (n < 1) throw contract_error("gbar_recurrence needs n >= 1");
  Integer prev2 = 1, prev1 = 4;
  if (n == 1) return prev2;
  for (std::uint32_t i = 3; i <= n; ++i) {
    Integer cur = 3 * Integer(i) * prev1 + Integer(i) * (i - 1) * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

/// n!/(13 * 2^(n+1)) * ((5 sqrt13 - 13)(3 + sqrt13)^n - (13 + 5 sqrt13)(3 - sqrt13)^n).
inline double gbar_closed_form(std::uint32_t n) {
  if (n < 1) throw contract_error("gbar_closed_form needs n >= 1");
  const long double s = std::sqrt(13.0L);
  long double fact = 1;
  for (std::uint32_t i = 2; i <= n; ++i) fact *= i;
  const long double big = (5 * s - 13) * std::pow(3 + s, static_cast<long double>(n));
  const long double small = (13 + 5 * s) * std::pow(3 - s, static_cast<long double>(n));
  const long double scale = fact / (13 * std::pow(2.0L, static_cast<long double>(n + 1)));
  return static_cast<double>(scale * (big - small));
}

// ---------------------------------------------------------------------------
// Named graphs.

inline Graph complete_graph(std::uint32_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(std::uint32_t n) {
  if (n < 3) throw contract_error("a cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph path_graph(std::uint32_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

/// K_{1,leaves} with the center at vertex 0.
inline Graph star_graph(std::uint32_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

/// Triangle {0,1,2} with pendant 3 on 0 and pendant 4 on 1.
inline Graph bull_graph() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}}); }

/// The bull as unit intervals [c-1, c+1] with centers 0, 2, 3, 4, 6.
inline GeometricInstance bull_interval_instance() {
  GeometricInstance inst{ShapeKind::interval, {}};
  Vertex id = 0;
  for (int c : {0, 2, 3, 4, 6}) inst.objects.push_back(GeoObject::interval(id++, Rational(c - 1), Rational(c + 1)));
  return inst;
}

struct NamedGraph {
  Graph graph;
  std::optional<GeometricInstance> instance;
};

/// "bull", "c4", "star:<leaves>", "path:<n>", "cycle:<n>", "complete:<n>".
inline NamedGraph gen_named(const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::optional<std::uint32_t> arg;
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      arg = static_cast<std::uint32_t>(std::stoul(name.substr(colon + 1), &used));
      if (used != name.size() - colon - 1) arg.reset();
    } catch (const std::exception&) {
      arg.reset();
    }
    if (!arg) throw contract_error("bad size in graph name '" + name + "'");
  }
  if (head == "bull" && !arg) return {bull_graph(), bull_interval_instance()};
  if (head == "c4" && !arg) return {cycle_graph(4), std::nullopt};
  if (arg) {
    if (head == "star") return {star_graph(*arg), std::nullopt};
    if (head == "path") return {path_graph(*arg), std::nullopt};
    if (head == "cycle") return {cycle_graph(*arg), std::nullopt};
    if (head == "complete") return {complete_graph(*arg), std::nullopt};
  }
  throw contract_error("unknown graph name '" + name + "'");
}

// ---------------------------------------------------------------------------
// Random instances.

struct RandomInstanceSpec {
  ShapeKind kind = ShapeKind::unit_disk;
  std::size_t n = 0;
  Rational width{10};
  Rational height{1};  // for intervals: the maximum interval length
  std::uint64_t seed = 0;
};

inline constexpr std::int64_t kGridResolution = 1000;

/// Centers drawn uniformly from the 1/1000 grid inside [0,width] x [0,height]. Disks and
/// squares of non-unit kind get a size from the grid in (0,1]. Intervals start on the grid
/// in [0,width] and have a grid length in [0,height]. Deterministic per seed.
inline GeometricInstance random_instance(const RandomInstanceSpec& spec) {
  if (spec.width < 0 || spec.height < 0) throw contract_error("random instance bounds must be non-negative");
  std::mt19937_64 rng(spec.seed);
  auto grid_steps = [](const Rational& r) { return floor(Rational(r * kGridResolution)).convert_to<std::uint64_t>(); };
  auto draw = [&](std::uint64_t steps) {  // uniform-ish integer in [0, steps], platform independent
    return static_cast<std::int64_t>(rng() % (steps + 1));
  };
  const auto wx = grid_steps(spec.width), hy = grid_steps(spec.height);
  GeometricInstance inst{spec.kind, {}};
  for (std::size_t i = 0; i < spec.n; ++i) {
    const auto id = static_cast<Vertex>(i);
    Rational a(draw(wx), kGridResolution);
    Rational b(draw(hy), kGridResolution);
    switch (spec.kind) {
      case ShapeKind::unit_disk: inst.objects.push_back(GeoObject::unit_disk(id, a, b)); break;
      case ShapeKind::unit_square: inst.objects.push_back(GeoObject::unit_square(id, a, b)); break;
      case ShapeKind::disk:
        inst.objects.push_back(GeoObject::disk(id, a, b, Rational(draw(kGridResolution - 1) + 1, kGridResolution)));
        break;
      case ShapeKind::square:
        inst.objects.push_back(GeoObject::square(id, a, b, Rational(draw(kGridResolution - 1) + 1, kGridResolution)));
        break;
      case ShapeKind::interval: inst.objects.push_back(GeoObject::interval(id, a, a + b)); break;
    }
  }
  return inst;
}

}  // namespace cfgeo
