#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include "cfgeo/geometry.hpp"
#include "cfgeo/graph.hpp"

namespace cfgeo {

inline constexpr std::array<const char*, 6> kSvgPalette = {"#e41a1c", "#377eb8", "#4daf4a",
                                                           "#984ea3", "#ff7f00", "#a65628"};
inline constexpr const char* kSvgUncolored = "#bbbbbb";

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline const char* fill_for(const std::optional<Color>& c) {
  return c ? kSvgPalette[(*c - 1) % kSvgPalette.size()] : kSvgUncolored;
}

}  // namespace detail

/// SVG drawing of an instance. Objects are `class="object colored"` or
/// `class="object uncolored"`; the legend entries carry `class="legend"`.
inline std::string render_svg(const GeometricInstance& inst, const std::optional<PartialColoring>& coloring = std::nullopt) {
  if (coloring && coloring->size() != inst.size())
    throw contract_error("coloring has " + std::to_string(coloring->size()) + " entries for " +
                         std::to_string(inst.size()) + " objects");
  constexpr double scale = 40.0, margin = 20.0, legend_h = 30.0, row_gap = 0.5;
  const bool intervals = inst.kind == ShapeKind::interval;

  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& o = inst.objects[i];
    double l = to_double(o.left()), r = to_double(o.right());
    double lo_y = intervals ? i * row_gap : to_double(o.y - o.extent);
    double hi_y = intervals ? i * row_gap : to_double(o.y + o.extent);
    if (i == 0) min_x = l, max_x = r, min_y = lo_y, max_y = hi_y;
    min_x = std::min(min_x, l), max_x = std::max(max_x, r);
    min_y = std::min(min_y, lo_y), max_y = std::max(max_y, hi_y);
  }
  const double width = (max_x - min_x) * scale + 2 * margin;
  const double height = (max_y - min_y) * scale + 2 * margin + legend_h;
  auto px = [&](double x) { return margin + (x - min_x) * scale; };
  auto py = [&](double y) { return margin + (max_y - y) * scale; };  // y axis points up

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(width) << "\" height=\""
      << detail::fmt(height) << "\" viewBox=\"0 0 " << detail::fmt(width) << ' ' << detail::fmt(height) << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << detail::fmt(width) << "\" height=\"" << detail::fmt(height)
      << "\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& o = inst.objects[i];
    std::optional<Color> col = coloring ? coloring->at(o.id) : std::nullopt;
    const char* fill = detail::fill_for(col);
    const char* cls = col ? "object colored" : "object uncolored";
    if (intervals) {
      double y = py(i * row_gap);
      out << "<line class=\"" << cls << "\" x1=\"" << detail::fmt(px(to_double(o.lo))) << "\" y1=\"" << detail::fmt(y)
          << "\" x2=\"" << detail::fmt(px(to_double(o.hi))) << "\" y2=\"" << detail::fmt(y) << "\" stroke=\"" << fill
          << "\" stroke-width=\"6\"/>\n";
    } else if (is_disk_like(o.kind)) {
      out << "<circle class=\"" << cls << "\" cx=\"" << detail::fmt(px(to_double(o.x))) << "\" cy=\""
          << detail::fmt(py(to_double(o.y))) << "\" r=\"" << detail::fmt(to_double(o.extent) * scale) << "\" fill=\""
          << fill << "\" fill-opacity=\"0.35\" stroke=\"" << fill << "\"/>\n";
    } else {
      double e = to_double(o.extent);
      out << "<rect class=\"" << cls << "\" x=\"" << detail::fmt(px(to_double(o.x) - e)) << "\" y=\""
          << detail::fmt(py(to_double(o.y) + e)) << "\" width=\"" << detail::fmt(2 * e * scale) << "\" height=\""
          << detail::fmt(2 * e * scale) << "\" fill=\"" << fill << "\" fill-opacity=\"0.35\" stroke=\"" << fill
          << "\"/>\n";
    }
  }
  const double ly = height - legend_h / 2;
  double lx = margin;
  for (std::size_t c = 0; c <= kSvgPalette.size(); ++c) {
    const char* fill = c < kSvgPalette.size() ? kSvgPalette[c] : kSvgUncolored;
    std::string label = c < kSvgPalette.size() ? std::to_string(c + 1) : "none";
    out << "<g class=\"legend\"><rect x=\"" << detail::fmt(lx) << "\" y=\"" << detail::fmt(ly - 6)
        << "\" width=\"12\" height=\"12\" fill=\"" << fill << "\"/><text x=\"" << detail::fmt(lx + 16) << "\" y=\""
        << detail::fmt(ly + 5) << "\" font-size=\"12\">" << label << "</text></g>\n";
    lx += 48;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cfgeo
