#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cfgeo/exact_cover.hpp"
#include "cfgeo/solver.hpp"

namespace cfgeo {

struct CensusRow {
  std::size_t n = 0;
  Color max_chi = 0;
  std::uint64_t graphs = 0;  // labeled graphs examined
  Graph extremal;            // first graph (in code order) attaining max_chi
};

struct CensusOptions {
  std::size_t guard = 7;  // refuse max_n above this
};

/// Labeled graph on n vertices whose edge set is the bit pattern `code` over the
/// pairs (i,j), i<j, in lexicographic order.
inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1U) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// Maximum closed-mode conflict-free chromatic number over all labeled graphs on n vertices,
/// for every n in 1..max_n.
inline std::map<std::size_t, CensusRow> census(std::size_t max_n, const CensusOptions& opt = {}) {
  if (max_n > opt.guard) {
    throw contract_error("census up to n=" + std::to_string(max_n) + " exceeds the guard of " +
                         std::to_string(opt.guard) + " (2^(n(n-1)/2) labeled graphs per n)");
  }
  std::map<std::size_t, CensusRow> table;
  for (std::size_t n = 1; n <= max_n; ++n) {
    CensusRow row;
    row.n = n;
    const std::size_t pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    for (std::uint64_t code = 0; code < total; ++code) {
      Graph g = graph_from_code(n, code);
      ++row.graphs;
      if (row.max_chi == 0) {
        row.max_chi = cf_chromatic_number(g).k;
        row.extremal = g;
        continue;
      }
      // only a graph beating the current maximum can change the row
      bool within = row.max_chi == 1 ? is_cf_1_colorable(g).has_value()
                                     : is_cf_k_colorable(g, row.max_chi).found();
      if (!within) {
        row.max_chi = cf_chromatic_number(g).k;
        row.extremal = g;
      }
    }
    table[n] = std::move(row);
  }
  return table;
}

}  // namespace cfgeo
