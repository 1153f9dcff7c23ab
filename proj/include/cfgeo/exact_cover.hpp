#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cfgeo/error.hpp"
#include "cfgeo/graph.hpp"

namespace cfgeo {

/// Algorithm X with dancing links. Columns are items that must be covered exactly once;
/// rows are the candidate subsets. Column choice is minimum-size, ties to the lowest
/// index, and rows are tried in insertion order, so enumeration order is deterministic.
class ExactCover {
public:
  explicit ExactCover(std::size_t columns) : columns_(columns) {
    nodes_.resize(columns + 1);
    size_.assign(columns + 1, 0);
    for (std::size_t i = 0; i <= columns; ++i) {
      auto& h = nodes_[i];
      h.left = static_cast<std::uint32_t>(i == 0 ? columns : i - 1);
      h.right = static_cast<std::uint32_t>(i == columns ? 0 : i + 1);
      h.up = h.down = static_cast<std::uint32_t>(i);
      h.column = static_cast<std::uint32_t>(i);
    }
  }

  /// Adds a row covering the given (distinct, in-range) column indices.
  void add_row(const std::vector<std::size_t>& cols) {
    const auto row = static_cast<std::uint32_t>(row_count_++);
    std::uint32_t first = 0;
    for (std::size_t c : cols) {
      if (c >= columns_) throw contract_error("exact cover column out of range");
      const auto col = static_cast<std::uint32_t>(c + 1);
      const auto id = static_cast<std::uint32_t>(nodes_.size());
      Node nd;
      nd.column = col;
      nd.row = row;
      nd.down = col;
      nd.up = nodes_[col].up;
      nodes_.push_back(nd);
      nodes_[nodes_[col].up].down = id;
      nodes_[col].up = id;
      ++size_[col];
      if (first == 0) {
        first = id;
        nodes_[id].left = nodes_[id].right = id;
      } else {
        nodes_[id].right = first;
        nodes_[id].left = nodes_[first].left;
        nodes_[nodes_[first].left].right = id;
        nodes_[first].left = id;
      }
    }
  }

  /// Calls `visit` with each solution (row indices in selection order) until it returns
  /// false. Returns false if the node budget ran out before the search finished.
  bool enumerate(const std::function<bool(const std::vector<std::size_t>&)>& visit,
                 std::optional<std::uint64_t> node_budget = std::nullopt) {
    budget_ = node_budget;
    expanded_ = 0;
    aborted_ = false;
    stop_ = false;
    partial_.clear();
    search(visit);
    return !aborted_;
  }

  std::uint64_t expanded() const noexcept { return expanded_; }

private:
  struct Node {
    std::uint32_t left = 0, right = 0, up = 0, down = 0, column = 0, row = 0;
  };

  void cover(std::uint32_t c) {
    nodes_[nodes_[c].right].left = nodes_[c].left;
    nodes_[nodes_[c].left].right = nodes_[c].right;
    for (auto i = nodes_[c].down; i != c; i = nodes_[i].down) {
      for (auto j = nodes_[i].right; j != i; j = nodes_[j].right) {
        nodes_[nodes_[j].down].up = nodes_[j].up;
        nodes_[nodes_[j].up].down = nodes_[j].down;
        --size_[nodes_[j].column];
      }
    }
  }

  void uncover(std::uint32_t c) {
    for (auto i = nodes_[c].up; i != c; i = nodes_[i].up) {
      for (auto j = nodes_[i].left; j != i; j = nodes_[j].left) {
        ++size_[nodes_[j].column];
        nodes_[nodes_[j].down].up = j;
        nodes_[nodes_[j].up].down = j;
      }
    }
    nodes_[nodes_[c].right].left = c;
    nodes_[nodes_[c].left].right = c;
  }

  void search(const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (nodes_[0].right == 0) {
      if (!visit(partial_)) stop_ = true;
      return;
    }
    std::uint32_t best = nodes_[0].right;
    for (auto c = nodes_[best].right; c != 0; c = nodes_[c].right)
      if (size_[c] < size_[best]) best = c;
    if (size_[best] == 0) return;
    cover(best);
    for (auto r = nodes_[best].down; r != best && !stop_ && !aborted_; r = nodes_[r].down) {
      if (budget_ && expanded_ >= *budget_) {
        aborted_ = true;
        break;
      }
      ++expanded_;
      partial_.push_back(nodes_[r].row);
      for (auto j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].column);
      search(visit);
      for (auto j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].column);
      partial_.pop_back();
    }
    uncover(best);
  }

  std::size_t columns_;
  std::size_t row_count_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> partial_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t expanded_ = 0;
  bool aborted_ = false;
  bool stop_ = false;
};

namespace detail {

// Row s covers every vertex whose neighborhood contains s.
inline ExactCover one_color_cover(const Graph& g, Mode mode) {
  ExactCover ec(g.size());
  for (Vertex s = 0; s < g.size(); ++s) {
    auto hood = g.neighborhood(s, mode);
    ec.add_row(std::vector<std::size_t>(hood.begin(), hood.end()));
  }
  return ec;
}

}  // namespace detail

/// A vertex set S with |N[v] ∩ S| = 1 for every v (a perfect code), or nullopt.
/// Open mode uses N(v) instead.
inline std::optional<std::vector<Vertex>> is_cf_1_colorable(const Graph& g, Mode mode = Mode::closed) {
  if (g.empty()) return std::vector<Vertex>{};
  auto ec = detail::one_color_cover(g, mode);
  std::optional<std::vector<Vertex>> out;
  ec.enumerate([&](const std::vector<std::size_t>& rows) {
    out.emplace(rows.begin(), rows.end());
    std::sort(out->begin(), out->end());
    return false;
  });
  return out;
}

/// Every conflict-free 1-coloring of g as a sorted colored set. Returns nullopt if the
/// expansion budget ran out first.
inline std::optional<std::vector<std::vector<Vertex>>> all_cf_1_colorings(
    const Graph& g, Mode mode = Mode::closed, std::optional<std::uint64_t> node_budget = std::nullopt) {
  std::vector<std::vector<Vertex>> out;
  if (g.empty()) return std::vector<std::vector<Vertex>>{{}};
  auto ec = detail::one_color_cover(g, mode);
  bool complete = ec.enumerate(
      [&](const std::vector<std::size_t>& rows) {
        std::vector<Vertex> s(rows.begin(), rows.end());
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
        return true;
      },
      node_budget);
  if (!complete) return std::nullopt;
  return out;
}

}  // namespace cfgeo
