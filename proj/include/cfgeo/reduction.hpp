#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cfgeo/exact_cover.hpp"
#include "cfgeo/gadgets.hpp"

namespace cfgeo {

/// Positive 1-in-3 formula: every clause is a triple of distinct variables, no negations.
struct Formula1in3 {
  std::uint32_t var_count = 0;
  std::vector<std::array<std::uint32_t, 3>> clauses;

  void validate() const {
    for (std::size_t j = 0; j < clauses.size(); ++j) {
      const auto& c = clauses[j];
      for (auto x : c)
        if (x >= var_count)
          throw contract_error("clause " + std::to_string(j) + " uses variable " + std::to_string(x) +
                               " outside [0," + std::to_string(var_count) + ")");
      if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
        throw contract_error("clause " + std::to_string(j) + " repeats a variable");
    }
  }

  friend bool operator==(const Formula1in3&, const Formula1in3&) = default;
};

/// Exhaustive search for an assignment making exactly one variable true per clause.
/// Returns the assignment as a bitmask over the variables.
inline std::optional<std::uint64_t> one_in_three_assignment(const Formula1in3& phi) {
  phi.validate();
  if (phi.var_count > 30) throw contract_error("brute-force 1-in-3 check limited to 30 variables");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << phi.var_count); ++mask) {
    bool ok = true;
    for (const auto& c : phi.clauses) {
      int t = 0;
      for (auto x : c) t += static_cast<int>((mask >> x) & 1U);
      if (t != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return mask;
  }
  return std::nullopt;
}

/// Every formula with one or two clauses over var_count <= 5 variables that uses each of
/// its variables, clauses as sorted triples in lexicographic order, followed by the
/// unsatisfiable formula {012, 013, 023, 123}.
inline std::vector<Formula1in3> formula_corpus() {
  std::vector<Formula1in3> out;
  for (std::uint32_t v = 3; v <= 5; ++v) {
    std::vector<std::array<std::uint32_t, 3>> triples;
    for (std::uint32_t a = 0; a < v; ++a)
      for (std::uint32_t b = a + 1; b < v; ++b)
        for (std::uint32_t c = b + 1; c < v; ++c) triples.push_back({a, b, c});
    auto covers = [v](const std::vector<std::array<std::uint32_t, 3>>& cl) {
      std::uint32_t mask = 0;
      for (const auto& c : cl)
        for (auto x : c) mask |= 1U << x;
      return mask == (1U << v) - 1;
    };
    for (std::size_t i = 0; i < triples.size(); ++i) {
      if (covers({triples[i]})) out.push_back({v, {triples[i]}});
      for (std::size_t j = i; j < triples.size(); ++j)
        if (covers({triples[i], triples[j]})) out.push_back({v, {triples[i], triples[j]}});
    }
  }
  out.push_back({4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}});
  return out;
}

struct ClauseGadget {
  Vertex clause = 0;
  std::array<Vertex, 3> ends{};      // d_1..d_3, neighbors of the clause vertex
  std::array<Vertex, 2> enforcers{};
  std::array<Vertex, 3> targets{};   // true vertex reached by each path
};

struct ReductionGraph {
  GadgetGraph gadget;
  std::vector<std::vector<Vertex>> cycles;  // per variable, in cycle order; position 0 is a true vertex
  std::vector<ClauseGadget> clauses;
};

struct ReductionOptions {
  std::uint32_t path_length = 3;  // edges from d_i to its true vertex; positive multiple of 3
};

/// Abstract graph for the one-color hardness reduction. Each variable becomes a cycle of
/// length 12k (k = clause count) whose every third vertex is a true vertex; each clause
/// becomes a clause vertex joined to path ends d_1..d_3 plus two enforcers adjacent to
/// exactly {d_1,d_2,d_3}; each d_i runs along a path to its own true vertex of the variable.
inline ReductionGraph build_reduction(const Formula1in3& phi, const ReductionOptions& opt = {}) {
  phi.validate();
  if (phi.clauses.empty()) throw contract_error("formula has no clauses");
  if (opt.path_length == 0 || opt.path_length % 3 != 0)
    throw contract_error("path length must be a positive multiple of 3");
  std::vector<std::uint32_t> occurrences(phi.var_count, 0);
  for (const auto& c : phi.clauses)
    for (auto x : c) ++occurrences[x];
  for (std::uint32_t x = 0; x < phi.var_count; ++x)
    if (occurrences[x] == 0) throw contract_error("variable " + std::to_string(x) + " occurs in no clause");

  const std::uint32_t k = static_cast<std::uint32_t>(phi.clauses.size());
  const std::uint32_t cycle_len = 12 * k;
  CollectingSink sink;
  ReductionGraph out;
  for (std::uint32_t x = 0; x < phi.var_count; ++x) {
    std::vector<Vertex> cyc;
    for (std::uint32_t p = 0; p < cycle_len; ++p)
      cyc.push_back(sink.add_vertex({p % 3 == 0 ? RoleKind::true_vertex : RoleKind::cycle_vertex, 0}, {}));
    for (std::uint32_t p = 0; p < cycle_len; ++p) sink.add_edge(cyc[p], cyc[(p + 1) % cycle_len]);
    out.cycles.push_back(std::move(cyc));
  }
  // occurrence j of a variable uses the true vertex at cycle position 12j; j < k
  std::vector<std::uint32_t> used(phi.var_count, 0);
  for (const auto& c : phi.clauses) {
    ClauseGadget cg;
    cg.clause = sink.add_vertex({RoleKind::clause_vertex, 0}, {});
    for (int i = 0; i < 3; ++i) {
      cg.ends[i] = sink.add_vertex({RoleKind::path_vertex, 0}, {});
      sink.add_edge(cg.clause, cg.ends[i]);
    }
    for (int e = 0; e < 2; ++e) cg.enforcers[e] = sink.add_vertex({RoleKind::enforcer, 0}, cg.ends);
    for (int i = 0; i < 3; ++i) {
      const auto x = c[i];
      cg.targets[i] = out.cycles[x][12 * used[x]++];
      Vertex prev = cg.ends[i];
      for (std::uint32_t step = 1; step < opt.path_length; ++step) {
        Vertex next = sink.add_vertex({RoleKind::path_vertex, 0}, {});
        sink.add_edge(prev, next);
        prev = next;
      }
      sink.add_edge(prev, cg.targets[i]);
    }
    out.clauses.push_back(cg);
  }
  std::string prov = "reduction vars=" + std::to_string(phi.var_count) + " clauses=";
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const auto& c = phi.clauses[j];
    prov += (j ? "," : "") + std::to_string(c[0]) + "-" + std::to_string(c[1]) + "-" + std::to_string(c[2]);
  }
  out.gadget = std::move(sink).finish(prov);
  return out;
}

inline GadgetGraph gen_reduction(const Formula1in3& phi) { return build_reduction(phi).gadget; }

struct GadgetProperties {
  bool clause_uncolored = true;  // every clause vertex uncolored in every 1-coloring
  bool every_third = true;       // every variable cycle colored in one of its three rotations
  std::size_t colorings = 0;     // number of conflict-free 1-colorings enumerated
};

struct GadgetCheckOptions {
  std::size_t max_vertices = 400;
  std::optional<std::uint64_t> node_budget;
};

/// Enumerates every conflict-free 1-coloring of G(phi) and checks the gadget semantics
/// on all of them.
inline GadgetProperties verify_gadget_properties(const Formula1in3& phi, const GadgetCheckOptions& opt = {}) {
  ReductionGraph red = build_reduction(phi);
  const Graph& g = red.gadget.graph;
  if (g.size() > opt.max_vertices)
    throw contract_error("G(phi) has " + std::to_string(g.size()) + " vertices, above the enumeration guard of " +
                         std::to_string(opt.max_vertices));
  auto all = all_cf_1_colorings(g, Mode::closed, opt.node_budget);
  if (!all) throw contract_error("enumeration budget exhausted");
  GadgetProperties props;
  props.colorings = all->size();
  for (const auto& set : *all) {
    std::set<Vertex> s(set.begin(), set.end());
    for (const auto& cg : red.clauses)
      if (s.count(cg.clause)) props.clause_uncolored = false;
    for (const auto& cyc : red.cycles) {
      bool some_rotation = false;
      for (std::size_t r = 0; r < 3 && !some_rotation; ++r) {
        bool match = true;
        for (std::size_t p = 0; p < cyc.size() && match; ++p)
          match = (s.count(cyc[p]) != 0) == (p % 3 == r);
        some_rotation = match;
      }
      if (!some_rotation) props.every_third = false;
    }
  }
  return props;
}

}  // namespace cfgeo
