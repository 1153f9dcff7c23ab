#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfgeo/graph.hpp"
#include "cfgeo/rational.hpp"

namespace cfgeo {

// Unit squares are axis-aligned with half-side 1 (side length 2), the square analog of a
// radius-1 disk: two unit squares meet iff both center coordinates differ by at most 2.
enum class ShapeKind { unit_disk, disk, unit_square, square, interval };

inline const char* to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::unit_disk: return "unit-disk";
    case ShapeKind::disk: return "disk";
    case ShapeKind::unit_square: return "unit-square";
    case ShapeKind::square: return "square";
    case ShapeKind::interval: return "interval";
  }
  return "?";
}

inline ShapeKind parse_shape_kind(std::string_view s) {
  for (auto k : {ShapeKind::unit_disk, ShapeKind::disk, ShapeKind::unit_square, ShapeKind::square,
                 ShapeKind::interval})
    if (s == to_string(k)) return k;
  throw contract_error("unknown shape kind '" + std::string(s) + "'");
}

inline bool is_disk_like(ShapeKind k) { return k == ShapeKind::unit_disk || k == ShapeKind::disk; }
inline bool is_square_like(ShapeKind k) { return k == ShapeKind::unit_square || k == ShapeKind::square; }
inline bool is_planar(ShapeKind k) { return k != ShapeKind::interval; }
inline bool has_fixed_size(ShapeKind k) { return k == ShapeKind::unit_disk || k == ShapeKind::unit_square; }

struct GeoObject {
  Vertex id = 0;
  ShapeKind kind = ShapeKind::unit_disk;
  Rational x, y;          // center, planar kinds
  Rational extent{1};     // radius or half-side, planar kinds
  Rational lo, hi;        // interval kind

  static GeoObject unit_disk(Vertex id, Rational x, Rational y) {
    return planar(id, ShapeKind::unit_disk, std::move(x), std::move(y), Rational(1));
  }
  static GeoObject disk(Vertex id, Rational x, Rational y, Rational r) {
    return planar(id, ShapeKind::disk, std::move(x), std::move(y), std::move(r));
  }
  static GeoObject unit_square(Vertex id, Rational x, Rational y) {
    return planar(id, ShapeKind::unit_square, std::move(x), std::move(y), Rational(1));
  }
  static GeoObject square(Vertex id, Rational x, Rational y, Rational half_side) {
    return planar(id, ShapeKind::square, std::move(x), std::move(y), std::move(half_side));
  }
  static GeoObject interval(Vertex id, Rational lo, Rational hi) {
    if (lo > hi) throw contract_error("interval " + std::to_string(id) + " has lo > hi");
    GeoObject o;
    o.id = id;
    o.kind = ShapeKind::interval;
    o.lo = std::move(lo);
    o.hi = std::move(hi);
    return o;
  }

  /// Closed x-extent of the object.
  Rational left() const { return kind == ShapeKind::interval ? lo : Rational(x - extent); }
  Rational right() const { return kind == ShapeKind::interval ? hi : Rational(x + extent); }

  friend bool operator==(const GeoObject&, const GeoObject&) = default;

private:
  static GeoObject planar(Vertex id, ShapeKind kind, Rational x, Rational y, Rational extent) {
    if (extent <= 0) throw contract_error("object " + std::to_string(id) + " must have positive size");
    GeoObject o;
    o.id = id;
    o.kind = kind;
    o.x = std::move(x);
    o.y = std::move(y);
    o.extent = std::move(extent);
    return o;
  }
};

/// Homogeneous collection; object i has id i.
struct GeometricInstance {
  ShapeKind kind = ShapeKind::unit_disk;
  std::vector<GeoObject> objects;

  std::size_t size() const noexcept { return objects.size(); }

  void validate() const {
    for (std::size_t i = 0; i < objects.size(); ++i) {
      const auto& o = objects[i];
      if (o.id != i) throw contract_error("object ids must be 0..n-1 in order; found " + std::to_string(o.id) +
                                          " at position " + std::to_string(i));
      if (o.kind != kind)
        throw contract_error("object " + std::to_string(i) + " is a " + to_string(o.kind) + " in a " +
                             to_string(kind) + " instance");
      if (has_fixed_size(kind) && o.extent != 1)
        throw contract_error("object " + std::to_string(i) + " of fixed-size kind has size " + to_string(o.extent));
    }
  }

  friend bool operator==(const GeometricInstance&, const GeometricInstance&) = default;
};

/// Closed intersection test in exact arithmetic; tangency counts.
inline bool intersects(const GeoObject& a, const GeoObject& b) {
  if (is_disk_like(a.kind) && is_disk_like(b.kind)) {
    Rational dx = a.x - b.x, dy = a.y - b.y, reach = a.extent + b.extent;
    return dx * dx + dy * dy <= reach * reach;
  }
  if (is_square_like(a.kind) && is_square_like(b.kind)) {
    Rational reach = a.extent + b.extent;
    return abs(a.x - b.x) <= reach && abs(a.y - b.y) <= reach;
  }
  if (a.kind == ShapeKind::interval && b.kind == ShapeKind::interval)
    return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
  throw contract_error(std::string("cannot intersect a ") + to_string(a.kind) + " with a " + to_string(b.kind));
}

/// All-pairs construction; the reference for build_intersection_graph.
inline Graph build_intersection_graph_naive(const GeometricInstance& inst) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < inst.size(); ++i)
    for (std::size_t j = i + 1; j < inst.size(); ++j)
      if (intersects(inst.objects[i], inst.objects[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(inst.size(), edges);
}

/// Sweep over x-extents; the exact predicate runs only on pairs whose extents overlap.
inline Graph build_intersection_graph(const GeometricInstance& inst) {
  inst.validate();
  const std::size_t n = inst.size();
  std::vector<Rational> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = inst.objects[i].left();
    right[i] = inst.objects[i].right();
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return left[a] != left[b] ? left[a] < left[b] : a < b;
  });
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::size_t> active;
  for (std::size_t idx : order) {
    std::erase_if(active, [&](std::size_t j) { return right[j] < left[idx]; });
    for (std::size_t j : active)
      if (intersects(inst.objects[idx], inst.objects[j]))
        edges.emplace_back(static_cast<Vertex>(std::min(idx, j)), static_cast<Vertex>(std::max(idx, j)));
    active.push_back(idx);
  }
  return Graph::from_edges(n, edges);
}

/// Vertical extent of the centers.
inline Rational instance_height(const GeometricInstance& inst) {
  if (!is_planar(inst.kind)) throw contract_error("interval instances have no height");
  if (inst.objects.empty()) return Rational(0);
  auto [lo, hi] = std::minmax_element(inst.objects.begin(), inst.objects.end(),
                                      [](const GeoObject& a, const GeoObject& b) { return a.y < b.y; });
  return hi->y - lo->y;
}

inline Rational min_center_y(const GeometricInstance& inst) {
  if (inst.objects.empty()) return Rational(0);
  return std::min_element(inst.objects.begin(), inst.objects.end(),
                          [](const GeoObject& a, const GeoObject& b) { return a.y < b.y; })
      ->y;
}

/// Either the literal sqrt(3) or a positive rational.
class StripHeight {
public:
  static StripHeight sqrt3() { return StripHeight(true, Rational(0)); }
  static StripHeight rational(Rational h) {
    if (h <= 0) throw contract_error("strip height must be positive");
    return StripHeight(false, std::move(h));
  }

  bool is_sqrt3() const noexcept { return sqrt3_; }
  const Rational& value() const { return value_; }
  double approx() const { return sqrt3_ ? std::sqrt(3.0) : to_double(value_); }

  std::string describe() const { return sqrt3_ ? "sqrt(3)" : to_string(value_); }

private:
  StripHeight(bool s, Rational v) : sqrt3_(s), value_(std::move(v)) {}
  bool sqrt3_;
  Rational value_;
};

namespace detail {

// Sign of d - m*sqrt(3), exactly.
inline int compare_with_sqrt3_multiple(const Rational& d, const Integer& m) {
  const int sd = d.sign();
  const int sm = m.sign();
  if (sd != sm) return sd < sm ? -1 : 1;
  if (sd == 0) return 0;
  Rational d2 = d * d;
  Rational m2 = Rational(m * m * 3);
  int mag = d2 < m2 ? -1 : (d2 > m2 ? 1 : 0);
  return sd > 0 ? mag : -mag;
}

}  // namespace detail

/// floor((y - origin) / height), strips half-open [i*h, (i+1)*h).
inline std::int64_t strip_index(const Rational& y, const Rational& origin, const StripHeight& height) {
  Rational d = y - origin;
  if (!height.is_sqrt3()) return floor(Rational(d / height.value())).convert_to<std::int64_t>();
  Integer k(static_cast<std::int64_t>(std::floor(to_double(d) / std::sqrt(3.0))));
  while (detail::compare_with_sqrt3_multiple(d, k) < 0) --k;
  while (detail::compare_with_sqrt3_multiple(d, k + 1) >= 0) ++k;
  return k.convert_to<std::int64_t>();
}

/// Whether the instance height is at most `bound`, decided exactly.
inline bool height_at_most(const GeometricInstance& inst, const StripHeight& bound) {
  Rational h = instance_height(inst);
  if (!bound.is_sqrt3()) return h <= bound.value();
  return detail::compare_with_sqrt3_multiple(h, Integer(1)) <= 0;
}

struct StripDecomposition {
  StripHeight strip_height = StripHeight::sqrt3();
  Rational origin;
  std::vector<std::int64_t> strip_of;
};

inline StripDecomposition decompose_strips(const GeometricInstance& inst, const StripHeight& height) {
  if (!is_planar(inst.kind)) throw contract_error("strip decomposition needs a planar instance");
  StripDecomposition out{height, min_center_y(inst), {}};
  out.strip_of.reserve(inst.size());
  for (const auto& o : inst.objects) out.strip_of.push_back(strip_index(o.y, out.origin, height));
  return out;
}

}  // namespace cfgeo
