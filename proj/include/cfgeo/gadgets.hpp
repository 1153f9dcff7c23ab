#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cfgeo/graph.hpp"

namespace cfgeo {

enum class RoleKind { base_clique, copy, chain, clause_vertex, enforcer, true_vertex, cycle_vertex, path_vertex };

/// Label of a generated vertex. `index` is the nesting level for copies and the
/// 1-based position for chain vertices; otherwise unused.
struct Role {
  RoleKind kind = RoleKind::base_clique;
  std::uint32_t index = 0;

  friend bool operator==(const Role&, const Role&) = default;
};

inline std::string to_string(const Role& r) {
  switch (r.kind) {
    case RoleKind::base_clique: return "base-clique";
    case RoleKind::copy: return "copy:" + std::to_string(r.index);
    case RoleKind::chain: return "chain:" + std::to_string(r.index);
    case RoleKind::clause_vertex: return "clause-vertex";
    case RoleKind::enforcer: return "enforcer";
    case RoleKind::true_vertex: return "true-vertex";
    case RoleKind::cycle_vertex: return "cycle-vertex";
    case RoleKind::path_vertex: return "path-vertex";
  }
  return "?";
}

inline Role parse_role(const std::string& s) {
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::uint32_t idx = 0;
  if (colon != std::string::npos) {
    try {
      idx = static_cast<std::uint32_t>(std::stoul(s.substr(colon + 1)));
    } catch (const std::exception&) {
      throw contract_error("bad role index in '" + s + "'");
    }
  }
  if (head == "copy" && colon != std::string::npos) return {RoleKind::copy, idx};
  if (head == "chain" && colon != std::string::npos) return {RoleKind::chain, idx};
  if (colon == std::string::npos) {
    for (auto k : {RoleKind::base_clique, RoleKind::clause_vertex, RoleKind::enforcer, RoleKind::true_vertex,
                   RoleKind::cycle_vertex, RoleKind::path_vertex})
      if (to_string(Role{k, 0}) == s) return {k, 0};
  }
  throw contract_error("unknown role '" + s + "'");
}

/// A generated graph with per-vertex roles and the parameters that produced it.
struct GadgetGraph {
  Graph graph;
  std::vector<Role> roles;
  std::string provenance;
};

/// Materializes vertices and edges.
class CollectingSink {
public:
  Vertex add_vertex(Role role, std::span<const Vertex> attach) {
    const auto v = static_cast<Vertex>(roles_.size());
    roles_.push_back(role);
    for (Vertex a : attach) edges_.emplace_back(a, v);
    return v;
  }
  void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

  GadgetGraph finish(std::string provenance) && {
    GadgetGraph out;
    out.graph = Graph::from_edges(roles_.size(), edges_);
    out.roles = std::move(roles_);
    out.provenance = std::move(provenance);
    return out;
  }

private:
  std::vector<Role> roles_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Counts vertices and edges without storing them.
class CountingSink {
public:
  Vertex add_vertex(Role, std::span<const Vertex> attach) {
    edges_ += attach.size();
    return static_cast<Vertex>(vertices_++);
  }
  void add_edge(Vertex, Vertex) { ++edges_; }

  std::uint64_t vertices() const noexcept { return vertices_; }
  std::uint64_t edges() const noexcept { return edges_; }

private:
  std::uint64_t vertices_ = 0;
  std::uint64_t edges_ = 0;
};

namespace detail {

inline Role level_role(std::uint32_t level, Role top) { return level == 0 ? top : Role{RoleKind::copy, level}; }

// Every emitted vertex is also adjacent to all of `attach`.
template <class Sink>
void emit_gn(Sink& sink, std::uint32_t n, std::uint32_t level, std::vector<Vertex>& attach) {
  if (n == 1) {
    sink.add_vertex(level_role(level, {RoleKind::base_clique, 0}), attach);
    return;
  }
  if (n == 2) {
    Vertex c[4];
    for (auto& v : c) v = sink.add_vertex(level_role(level, {RoleKind::cycle_vertex, 0}), attach);
    for (int i = 0; i < 4; ++i) sink.add_edge(c[i], c[(i + 1) % 4]);
    return;
  }
  std::vector<Vertex> base;
  for (std::uint32_t i = 0; i < n; ++i) {
    Vertex b = sink.add_vertex(level_role(level, {RoleKind::base_clique, 0}), attach);
    for (Vertex prev : base) sink.add_edge(prev, b);
    base.push_back(b);
  }
  for (Vertex b : base) {
    attach.push_back(b);
    for (int copy = 0; copy < 2; ++copy) emit_gn(sink, n - 1, level + 1, attach);
    attach.pop_back();
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      attach.push_back(base[i]);
      attach.push_back(base[j]);
      for (int copy = 0; copy < 2; ++copy) emit_gn(sink, n - 2, level + 1, attach);
      attach.pop_back();
      attach.pop_back();
    }
  }
}

template <class Sink>
void emit_dk(Sink& sink, std::uint32_t k, std::uint32_t level, std::vector<Vertex>& attach) {
  const std::uint32_t m = 1U << (k - 1);
  std::vector<Vertex> chain;
  for (std::uint32_t i = 1; i <= m; ++i) {
    Vertex c = sink.add_vertex(level_role(level, {RoleKind::chain, i}), attach);
    for (Vertex prev : chain) sink.add_edge(prev, c);
    chain.push_back(c);
  }
  if (k == 1) return;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = i; j < m; ++j) {
      const std::size_t mark = attach.size();
      attach.insert(attach.end(), chain.begin() + i, chain.begin() + j + 1);
      for (int copy = 0; copy < 2; ++copy) emit_dk(sink, k - 1, level + 1, attach);
      attach.resize(mark);
    }
  }
}

}  // namespace detail

/// Streams the construction of G_n into `sink`: G_1 is a vertex, G_2 is C_4, and G_n is
/// a K_n with two copies of G_{n-1} hanging off each clique vertex and two copies of
/// G_{n-2} hanging off each clique pair.
template <class Sink>
void generate_gn(Sink& sink, std::uint32_t n) {
  if (n == 0) throw contract_error("G_n needs n >= 1");
  std::vector<Vertex> attach;
  detail::emit_gn(sink, n, 0, attach);
}

inline GadgetGraph gen_gn(std::uint32_t n) {
  CollectingSink sink;
  generate_gn(sink, n);
  return std::move(sink).finish("gn " + std::to_string(n));
}

/// Streams D_k: a clique chain c_1..c_m (m = 2^(k-1)) and, for every index interval
/// [i,j], two copies of D_{k-1} adjacent to exactly c_i..c_j.
template <class Sink>
void generate_dk(Sink& sink, std::uint32_t k) {
  if (k == 0) throw contract_error("D_k needs k >= 1");
  if (k > 31) throw contract_error("D_k chain length overflows");
  std::vector<Vertex> attach;
  detail::emit_dk(sink, k, 0, attach);
}

inline GadgetGraph gen_dk(std::uint32_t k) {
  CollectingSink sink;
  generate_dk(sink, k);
  return std::move(sink).finish("dk " + std::to_string(k));
}

/// Top-level chain vertices carry indices 1..m in order and are pairwise adjacent.
inline bool top_level_chain_is_clique(const GadgetGraph& gg) {
  std::vector<Vertex> chain;
  for (Vertex v = 0; v < gg.roles.size(); ++v)
    if (gg.roles[v].kind == RoleKind::chain) chain.push_back(v);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (gg.roles[chain[i]].index != i + 1) return false;
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (!gg.graph.adjacent(chain[i], chain[j])) return false;
  }
  return true;
}

}  // namespace cfgeo
