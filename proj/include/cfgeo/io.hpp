#pragma once

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cfgeo/gadgets.hpp"
#include "cfgeo/generators.hpp"
#include "cfgeo/geometry.hpp"
#include "cfgeo/graph.hpp"
#include "cfgeo/reduction.hpp"

// Line-oriented text formats. Each file starts with a header line "<format> v1"; blank
// lines and lines starting with '#' are ignored except for the "# role" annotations of
// generated graphs.

namespace cfgeo::io {

inline constexpr std::string_view kGraphHeader = "cfgeo-graph v1";
inline constexpr std::string_view kColoringHeader = "cfgeo-coloring v1";
inline constexpr std::string_view kInstanceHeader = "cfgeo-instance v1";
inline constexpr std::string_view kFormulaHeader = "cfgeo-1in3 v1";
inline constexpr std::string_view kChainHeader = "cfgeo-chain v1";

namespace detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> words;
  bool comment = false;
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    std::istringstream ss{std::string(raw)};
    Line line{number, {}, false};
    for (std::string w; ss >> w;) line.words.push_back(w);
    if (!line.words.empty()) {
      line.comment = line.words.front().front() == '#';
      out.push_back(std::move(line));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

inline std::uint64_t to_uint(const Line& l, std::size_t i) {
  if (i >= l.words.size()) throw parse_error(l.number, "missing field");
  const std::string& w = l.words[i];
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || ptr != w.data() + w.size()) throw parse_error(l.number, "expected a count, got '" + w + "'");
  return v;
}

inline Rational to_rational(const Line& l, std::size_t i) {
  if (i >= l.words.size()) throw parse_error(l.number, "missing field");
  try {
    return parse_rational(l.words[i]);
  } catch (const contract_error& e) {
    throw parse_error(l.number, e.what());
  }
}

inline void expect_fields(const Line& l, std::size_t n) {
  if (l.words.size() != n)
    throw parse_error(l.number, "expected " + std::to_string(n) + " fields, got " + std::to_string(l.words.size()));
}

// Returns the non-comment lines after checking the header.
inline std::vector<Line> body(std::string_view text, std::string_view header, std::vector<Line>* comments = nullptr) {
  auto lines = split_lines(text);
  std::vector<Line> out;
  bool seen_header = false;
  for (auto& l : lines) {
    if (l.comment) {
      if (comments) comments->push_back(l);
      continue;
    }
    if (!seen_header) {
      std::string joined = l.words.size() == 2 ? l.words[0] + " " + l.words[1] : "";
      if (joined != header) throw parse_error(l.number, "expected header '" + std::string(header) + "'");
      seen_header = true;
      continue;
    }
    out.push_back(std::move(l));
  }
  if (!seen_header) throw parse_error(0, "missing header '" + std::string(header) + "'");
  return out;
}

inline const Line& first_keyword(const std::vector<Line>& lines, std::string_view kw) {
  if (lines.empty() || lines.front().words.front() != kw)
    throw parse_error(lines.empty() ? 0 : lines.front().number, "expected '" + std::string(kw) + "' line");
  return lines.front();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graphs

struct AnnotatedGraph {
  Graph graph;
  std::vector<Role> roles;  // empty when the file has no role annotations
};

inline std::string write_graph(const Graph& g, const std::vector<Role>* roles = nullptr,
                               const std::string* provenance = nullptr) {
  std::ostringstream out;
  out << kGraphHeader << '\n';
  if (provenance) out << "# provenance " << *provenance << '\n';
  out << "n " << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  if (roles)
    for (Vertex v = 0; v < roles->size(); ++v) out << "# role " << v << ' ' << to_string((*roles)[v]) << '\n';
  return out.str();
}

inline std::string write_graph(const GadgetGraph& gg) { return write_graph(gg.graph, &gg.roles, &gg.provenance); }

inline AnnotatedGraph read_graph(std::string_view text) {
  std::vector<detail::Line> comments;
  auto lines = detail::body(text, kGraphHeader, &comments);
  const auto& head = detail::first_keyword(lines, "n");
  detail::expect_fields(head, 2);
  const auto n = detail::to_uint(head, 1);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.words[0] != "e") throw parse_error(l.number, "expected 'e <u> <v>'");
    detail::expect_fields(l, 3);
    edges.emplace_back(static_cast<Vertex>(detail::to_uint(l, 1)), static_cast<Vertex>(detail::to_uint(l, 2)));
  }
  AnnotatedGraph out;
  try {
    out.graph = Graph::from_edges(n, edges);
  } catch (const contract_error& e) {
    throw parse_error(head.number, e.what());
  }
  for (const auto& c : comments) {
    if (c.words.size() != 4 || c.words[0] != "#" || c.words[1] != "role") continue;
    const auto v = detail::to_uint(c, 2);
    if (v >= n) throw parse_error(c.number, "role for vertex outside the graph");
    if (out.roles.empty()) out.roles.resize(n);
    try {
      out.roles[v] = parse_role(c.words[3]);
    } catch (const contract_error& e) {
      throw parse_error(c.number, e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Colorings

inline std::string write_coloring(const PartialColoring& c) {
  std::ostringstream out;
  out << kColoringHeader << '\n' << "palette " << c.palette_size() << '\n';
  for (Vertex v = 0; v < c.size(); ++v)
    if (auto col = c.at(v)) out << "c " << v << ' ' << *col << '\n';
  return out.str();
}

/// Colorings do not record the vertex count; the caller supplies it.
inline PartialColoring read_coloring(std::string_view text, std::size_t n) {
  auto lines = detail::body(text, kColoringHeader);
  const auto& head = detail::first_keyword(lines, "palette");
  detail::expect_fields(head, 2);
  PartialColoring out(n, static_cast<Color>(detail::to_uint(head, 1)));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.words[0] != "c") throw parse_error(l.number, "expected 'c <vertex> <color>'");
    detail::expect_fields(l, 3);
    const auto v = detail::to_uint(l, 1);
    const auto col = detail::to_uint(l, 2);
    if (v >= n) throw parse_error(l.number, "vertex " + std::to_string(v) + " outside the graph");
    try {
      out.assign(static_cast<Vertex>(v), static_cast<Color>(col));
    } catch (const contract_error& e) {
      throw parse_error(l.number, e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Geometric instances

inline std::string write_instance(const GeometricInstance& inst) {
  std::ostringstream out;
  out << kInstanceHeader << '\n' << "shape " << to_string(inst.kind) << '\n';
  for (const auto& o : inst.objects) {
    out << "object " << o.id << ' ';
    if (o.kind == ShapeKind::interval) {
      out << to_string(o.lo) << ' ' << to_string(o.hi);
    } else {
      out << to_string(o.x) << ' ' << to_string(o.y);
      if (!has_fixed_size(o.kind)) out << ' ' << to_string(o.extent);
    }
    out << '\n';
  }
  return out.str();
}

inline GeometricInstance read_instance(std::string_view text) {
  auto lines = detail::body(text, kInstanceHeader);
  const auto& head = detail::first_keyword(lines, "shape");
  detail::expect_fields(head, 2);
  GeometricInstance inst;
  try {
    inst.kind = parse_shape_kind(head.words[1]);
  } catch (const contract_error& e) {
    throw parse_error(head.number, e.what());
  }
  const std::size_t fields = inst.kind == ShapeKind::interval || has_fixed_size(inst.kind) ? 4 : 5;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.words[0] != "object") throw parse_error(l.number, "expected an 'object' line");
    detail::expect_fields(l, fields);
    const auto id = static_cast<Vertex>(detail::to_uint(l, 1));
    if (id != inst.objects.size()) throw parse_error(l.number, "object ids must run 0..n-1 in order");
    Rational a = detail::to_rational(l, 2), b = detail::to_rational(l, 3);
    try {
      switch (inst.kind) {
        case ShapeKind::unit_disk: inst.objects.push_back(GeoObject::unit_disk(id, a, b)); break;
        case ShapeKind::unit_square: inst.objects.push_back(GeoObject::unit_square(id, a, b)); break;
        case ShapeKind::disk: inst.objects.push_back(GeoObject::disk(id, a, b, detail::to_rational(l, 4))); break;
        case ShapeKind::square: inst.objects.push_back(GeoObject::square(id, a, b, detail::to_rational(l, 4))); break;
        case ShapeKind::interval: inst.objects.push_back(GeoObject::interval(id, a, b)); break;
      }
    } catch (const contract_error& e) {
      throw parse_error(l.number, e.what());
    }
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Formulas and chains

inline std::string write_formula(const Formula1in3& phi) {
  std::ostringstream out;
  out << kFormulaHeader << '\n' << "vars " << phi.var_count << '\n';
  for (const auto& c : phi.clauses) out << "clause " << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
  return out.str();
}

inline Formula1in3 read_formula(std::string_view text) {
  auto lines = detail::body(text, kFormulaHeader);
  const auto& head = detail::first_keyword(lines, "vars");
  detail::expect_fields(head, 2);
  Formula1in3 phi;
  phi.var_count = static_cast<std::uint32_t>(detail::to_uint(head, 1));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.words[0] != "clause") throw parse_error(l.number, "expected 'clause <a> <b> <c>'");
    detail::expect_fields(l, 4);
    phi.clauses.push_back({static_cast<std::uint32_t>(detail::to_uint(l, 1)),
                           static_cast<std::uint32_t>(detail::to_uint(l, 2)),
                           static_cast<std::uint32_t>(detail::to_uint(l, 3))});
  }
  try {
    phi.validate();
  } catch (const contract_error& e) {
    throw parse_error(0, e.what());
  }
  return phi;
}

inline std::string write_chain(const ChainSpec& chain) {
  std::ostringstream out;
  out << kChainHeader << '\n' << "m " << chain.m << '\n';
  return out.str();
}

inline ChainSpec read_chain(std::string_view text) {
  auto lines = detail::body(text, kChainHeader);
  const auto& head = detail::first_keyword(lines, "m");
  detail::expect_fields(head, 2);
  if (lines.size() != 1) throw parse_error(lines[1].number, "unexpected content after 'm'");
  ChainSpec c{static_cast<std::uint32_t>(detail::to_uint(head, 1))};
  if (c.m < 1) throw parse_error(head.number, "chain length must be at least 1");
  return c;
}

}  // namespace cfgeo::io
