#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "cfgeo/graph.hpp"

namespace cfgeo {

enum class SolveStatus { found, none, inconclusive };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::found: return "found";
    case SolveStatus::none: return "none";
    case SolveStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct SolveOptions {
  Mode mode = Mode::closed;
  /// Maximum number of value assignments tried; exceeding it yields `inconclusive`.
  std::optional<std::uint64_t> node_budget;
  /// Upper bound on the number of colored vertices.
  std::optional<std::size_t> max_colored;
  /// Per-vertex pins: nullopt = free, 0 = must stay uncolored, c = must get color c.
  std::vector<std::optional<Color>> pinned;
};

struct SolveResult {
  SolveStatus status = SolveStatus::none;
  std::optional<PartialColoring> witness;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return status == SolveStatus::found; }
};

namespace detail {

// Backtracking over {uncolored, 1..k} per vertex. Every vertex owns the constraint
// "some color occurs exactly once in my neighborhood"; per-owner color counts and
// undecided counts let a constraint be declared dead as soon as every color is either
// repeated or absent with nothing left to decide.
class CfSearch {
public:
  CfSearch(const Graph& g, Color k, const SolveOptions& opt)
      : g_(g), k_(k), opt_(opt), n_(g.size()),
        value_(n_, kUndecided), undecided_(n_, 0), counts_(n_ * (k + 1), 0), watchers_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      watchers_[v] = g.neighborhood(v, opt.mode);  // owners whose hood contains v (symmetric)
      undecided_[v] = static_cast<std::uint32_t>(watchers_[v].size());
    }
    order_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    symmetry_break_ = true;
    for (const auto& p : opt.pinned)
      if (p && *p != kUncolored) symmetry_break_ = false;
  }

  SolveResult run() {
    SolveResult res;
    bool feasible = true;
    for (Vertex o = 0; o < n_ && feasible; ++o) feasible = alive(o);
    if (!feasible || !apply_pins()) {
      res.status = SolveStatus::none;
      res.nodes = nodes_;
      return res;
    }
    bool ok = recurse();
    res.nodes = nodes_;
    if (aborted_) {
      res.status = SolveStatus::inconclusive;
    } else if (ok) {
      res.status = SolveStatus::found;
      PartialColoring c(n_, k_);
      for (Vertex v = 0; v < n_; ++v)
        if (value_[v] > 0) c.assign(v, static_cast<Color>(value_[v]));
      res.witness = std::move(c);
    } else {
      res.status = SolveStatus::none;
    }
    return res;
  }

private:
  static constexpr std::int32_t kUndecided = -1;

  std::uint32_t& count(Vertex owner, Color c) { return counts_[owner * (k_ + 1) + c]; }

  bool alive(Vertex owner) {
    const bool open = undecided_[owner] > 0;
    for (Color c = 1; c <= k_; ++c) {
      auto cnt = count(owner, c);
      if (cnt == 1 || (cnt == 0 && open)) return true;
    }
    return false;
  }

  // Returns false (and leaves the state assigned) if some owner died; caller must undo.
  bool assign(Vertex v, std::int32_t val) {
    value_[v] = val;
    if (val != kUncolored) ++colored_;
    bool ok = true;
    for (Vertex o : watchers_[v]) {
      --undecided_[o];
      if (val != kUncolored) ++count(o, static_cast<Color>(val));
    }
    for (Vertex o : watchers_[v])
      if (!alive(o)) ok = false;
    return ok;
  }

  void unassign(Vertex v) {
    std::int32_t val = value_[v];
    for (Vertex o : watchers_[v]) {
      ++undecided_[o];
      if (val != kUncolored) --count(o, static_cast<Color>(val));
    }
    if (val != kUncolored) --colored_;
    value_[v] = kUndecided;
  }

  bool apply_pins() {
    if (opt_.pinned.empty()) return true;
    if (opt_.pinned.size() != n_) throw contract_error("pin vector does not match the graph");
    for (Vertex v = 0; v < n_; ++v) {
      const auto& p = opt_.pinned[v];
      if (!p) continue;
      if (*p > k_) return false;
      if (!assign(v, static_cast<std::int32_t>(*p))) return false;
      if (*p != kUncolored) max_used_ = std::max<Color>(max_used_, *p);
    }
    if (opt_.max_colored && colored_ > *opt_.max_colored) return false;
    return true;
  }

  // Fail-first: the unfinished owner with no singleton color and fewest undecided
  // members; branch on its first undecided member in degree order.
  std::optional<Vertex> pick() {
    std::uint32_t best_undecided = std::numeric_limits<std::uint32_t>::max();
    std::optional<Vertex> best_owner;
    bool best_needy = false;
    for (Vertex o = 0; o < n_; ++o) {
      if (undecided_[o] == 0) continue;
      bool needy = true;
      for (Color c = 1; c <= k_ && needy; ++c)
        if (count(o, c) == 1) needy = false;
      if ((needy && !best_needy) || (needy == best_needy && undecided_[o] < best_undecided)) {
        best_owner = o;
        best_undecided = undecided_[o];
        best_needy = needy;
      }
    }
    if (!best_owner) return std::nullopt;
    const auto& hood = watchers_[*best_owner];
    for (Vertex v : order_)
      if (value_[v] == kUndecided && std::binary_search(hood.begin(), hood.end(), v)) return v;
    return std::nullopt;
  }

  bool recurse() {
    auto next = pick();
    if (!next) return true;  // all decided and every owner alive
    const Vertex v = *next;
    const Color limit = symmetry_break_ ? std::min<Color>(k_, max_used_ + 1) : k_;
    const bool may_color = !opt_.max_colored || colored_ < *opt_.max_colored;
    for (Color c = 0; c <= (may_color ? limit : 0); ++c) {
      if (opt_.node_budget && nodes_ >= *opt_.node_budget) {
        aborted_ = true;
        return false;
      }
      ++nodes_;
      const Color saved_max = max_used_;
      if (assign(v, static_cast<std::int32_t>(c))) {
        if (c > max_used_) max_used_ = c;
        if (recurse()) return true;
        if (aborted_) return false;
      }
      max_used_ = saved_max;
      unassign(v);
    }
    return false;
  }

  const Graph& g_;
  Color k_;
  const SolveOptions& opt_;
  std::size_t n_;
  std::vector<std::int32_t> value_;
  std::vector<std::uint32_t> undecided_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::vector<Vertex>> watchers_;
  std::vector<Vertex> order_;
  std::size_t colored_ = 0;
  Color max_used_ = 0;
  bool symmetry_break_ = true;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Decides whether `g` has a conflict-free coloring with at most `k` colors.
/// A found witness has been re-checked with verify_cf.
inline SolveResult is_cf_k_colorable(const Graph& g, Color k, const SolveOptions& opt = {}) {
  if (g.empty()) {
    SolveResult r;
    r.status = SolveStatus::found;
    r.witness = PartialColoring(0, k);
    return r;
  }
  if (k == 0) return {};
  SolveResult r = detail::CfSearch(g, k, opt).run();
  if (r.witness && !verify_cf(g, *r.witness, opt.mode).valid)
    throw invariant_violation("solver produced a coloring that fails verification");
  return r;
}

inline SolveResult is_cf_k_colorable(const Graph& g, Color k, Mode mode) {
  SolveOptions opt;
  opt.mode = mode;
  return is_cf_k_colorable(g, k, opt);
}

struct ChromaticResult {
  SolveStatus status = SolveStatus::none;  // none: no k works (open mode with an isolated vertex)
  Color k = 0;
  std::optional<PartialColoring> witness;
  std::uint64_t nodes = 0;
};

/// Smallest k admitting a conflict-free coloring, with a witness.
/// The node budget, if any, applies to each k separately.
inline ChromaticResult cf_chromatic_number(const Graph& g, const SolveOptions& opt = {}) {
  ChromaticResult out;
  if (g.empty()) {
    out.status = SolveStatus::found;
    out.witness = PartialColoring(0, 0);
    return out;
  }
  if (opt.mode == Mode::open) {
    for (Vertex v = 0; v < g.size(); ++v)
      if (g.degree(v) == 0) return out;
  }
  // coloring every vertex with its own color always works (closed, or open without isolated vertices)
  for (Color k = 1; k <= g.size(); ++k) {
    SolveResult r = is_cf_k_colorable(g, k, opt);
    out.nodes += r.nodes;
    if (r.status == SolveStatus::inconclusive) {
      out.status = SolveStatus::inconclusive;
      out.k = k;
      return out;
    }
    if (r.found()) {
      out.status = SolveStatus::found;
      out.k = k;
      out.witness = std::move(r.witness);
      return out;
    }
  }
  throw invariant_violation("no conflict-free coloring with n colors");
}

inline ChromaticResult cf_chromatic_number(const Graph& g, Mode mode) {
  SolveOptions opt;
  opt.mode = mode;
  return cf_chromatic_number(g, opt);
}

/// Fewest colored vertices over all conflict-free colorings with at most k colors;
/// nullopt when no such coloring exists.
inline std::optional<std::size_t> min_colored_vertices(const Graph& g, Color k, Mode mode = Mode::closed) {
  if (k < 1) throw contract_error("min_colored_vertices needs k >= 1");
  SolveOptions opt;
  opt.mode = mode;
  if (!is_cf_k_colorable(g, k, opt).found()) return std::nullopt;
  for (std::size_t cap = 0; cap <= g.size(); ++cap) {
    opt.max_colored = cap;
    if (is_cf_k_colorable(g, k, opt).found()) return cap;
  }
  throw invariant_violation("colorable graph with no bounded witness");
}

}  // namespace cfgeo
