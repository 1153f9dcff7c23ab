#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cfgeo/census.hpp"
#include "cfgeo/exact_cover.hpp"
#include "cfgeo/generators.hpp"
#include "cfgeo/solver.hpp"
#include "oracles.hpp"

using namespace cfgeo;

namespace {

Color expected_chi(const Graph& g, Mode mode) { return static_cast<Color>(oracle::chromatic(g, mode)); }

}  // namespace

TEST(Solver, Examples) {
  auto bull = cf_chromatic_number(bull_graph());
  EXPECT_EQ(bull.status, SolveStatus::found);
  EXPECT_EQ(bull.k, 2u);
  ASSERT_TRUE(bull.witness);
  EXPECT_TRUE(verify_cf(bull_graph(), *bull.witness).valid);

  EXPECT_EQ(cf_chromatic_number(cycle_graph(4)).k, 2u);
  EXPECT_FALSE(is_cf_1_colorable(cycle_graph(4)).has_value());
  EXPECT_EQ(cf_chromatic_number(path_graph(3)).k, 1u);
  EXPECT_EQ(cf_chromatic_number(complete_graph(6)).k, 1u);
  EXPECT_EQ(cf_chromatic_number(star_graph(7)).k, 1u);
}

TEST(Solver, DecisionMatchesChromatic) {
  EXPECT_EQ(is_cf_k_colorable(cycle_graph(4), 1).status, SolveStatus::none);
  EXPECT_EQ(is_cf_k_colorable(cycle_graph(4), 2).status, SolveStatus::found);
  EXPECT_EQ(is_cf_k_colorable(bull_graph(), 0).status, SolveStatus::none);
}

TEST(Solver, EmptyGraph) {
  auto r = cf_chromatic_number(Graph{});
  EXPECT_EQ(r.status, SolveStatus::found);
  EXPECT_EQ(r.k, 0u);
  EXPECT_TRUE(is_cf_k_colorable(Graph{}, 1).found());
}

TEST(Solver, OpenModeIsolatedVertexHasNoColoring) {
  Graph g = Graph::from_edges(3, {{0, 1}});
  EXPECT_EQ(is_cf_k_colorable(g, 3, Mode::open).status, SolveStatus::none);
  EXPECT_EQ(cf_chromatic_number(g, Mode::open).status, SolveStatus::none);
  EXPECT_EQ(cf_chromatic_number(g, Mode::closed).k, 1u);
}

TEST(Solver, OpenModeExamples) {
  // open neighborhoods on K_2: both endpoints need the other colored uniquely
  EXPECT_EQ(cf_chromatic_number(complete_graph(2), Mode::open).k, 1u);
  EXPECT_EQ(cf_chromatic_number(complete_graph(3), Mode::open).k, 2u);
  EXPECT_EQ(cf_chromatic_number(cycle_graph(4), Mode::open).k, 1u);
  EXPECT_EQ(cf_chromatic_number(cycle_graph(5), Mode::open).k, 2u);
}

TEST(Solver, CrossValidatesWithBruteForceBothModes) {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 250; ++iter) {
    const std::size_t n = 1 + rng() % 8;
    Graph g = oracle::random_graph(rng, n, 0.15 + 0.1 * (rng() % 6));
    for (Mode mode : {Mode::closed, Mode::open}) {
      for (Color k = 1; k <= 3; ++k) {
        auto r = is_cf_k_colorable(g, k, mode);
        ASSERT_NE(r.status, SolveStatus::inconclusive);
        const bool expect = oracle::cf_colorable(g, static_cast<int>(k), mode).has_value();
        ASSERT_EQ(r.found(), expect) << "n=" << n << " k=" << k << " mode=" << to_string(mode);
        if (r.found()) {
          EXPECT_TRUE(verify_cf(g, *r.witness, mode).valid);
          EXPECT_LE(r.witness->distinct_colors(), k);
        }
      }
    }
  }
}

TEST(Solver, ChromaticIsMinimal) {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 120; ++iter) {
    Graph g = oracle::random_graph(rng, 2 + rng() % 8, 0.3);
    for (Mode mode : {Mode::closed, Mode::open}) {
      auto r = cf_chromatic_number(g, mode);
      int expect = oracle::chromatic(g, mode);
      if (expect < 0) {
        EXPECT_EQ(r.status, SolveStatus::none);
        continue;
      }
      ASSERT_EQ(r.status, SolveStatus::found);
      EXPECT_EQ(r.k, expected_chi(g, mode));
      EXPECT_TRUE(verify_cf(g, *r.witness, mode).valid);
      if (r.k > 1) EXPECT_FALSE(is_cf_k_colorable(g, r.k - 1, mode).found());
    }
  }
}

TEST(Solver, OneColorSpecializationAgreesWithGeneralSearch) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 400; ++iter) {
    Graph g = oracle::random_graph(rng, 1 + rng() % 10, 0.1 + 0.1 * (rng() % 5));
    for (Mode mode : {Mode::closed, Mode::open}) {
      auto dlx = is_cf_1_colorable(g, mode);
      ASSERT_EQ(dlx.has_value(), is_cf_k_colorable(g, 1, mode).found());
      if (!dlx) continue;
      PartialColoring c(g.size(), 1);
      for (Vertex v : *dlx) c.assign(v, 1);
      EXPECT_TRUE(verify_cf(g, c, mode).valid);
    }
  }
}

TEST(Solver, ClosedOneColoringsArePerfectCodes) {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 200; ++iter) {
    Graph g = oracle::random_graph(rng, 1 + rng() % 9, 0.3);
    EXPECT_EQ(is_cf_1_colorable(g).has_value(), oracle::has_perfect_code(g));
  }
  EXPECT_TRUE(is_cf_1_colorable(cycle_graph(6)).has_value());
  EXPECT_FALSE(is_cf_1_colorable(cycle_graph(4)).has_value());
}

TEST(Solver, AllOneColoringsOfSixCycle) {
  auto all = all_cf_1_colorings(cycle_graph(6));
  ASSERT_TRUE(all);
  std::sort(all->begin(), all->end());
  std::vector<std::vector<Vertex>> expect = {{0, 3}, {1, 4}, {2, 5}};
  EXPECT_EQ(*all, expect);
}

TEST(Solver, AllOneColoringsMatchEnumeration) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 100; ++iter) {
    Graph g = oracle::random_graph(rng, 1 + rng() % 9, 0.3);
    for (Mode mode : {Mode::closed, Mode::open}) {
      auto all = all_cf_1_colorings(g, mode);
      ASSERT_TRUE(all);
      EXPECT_EQ(all->size(), oracle::all_cf_colorings(g, 1, mode).size());
    }
  }
}

TEST(Solver, DisjointUnionTakesMaximum) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    Graph a = oracle::random_graph(rng, 1 + rng() % 6, 0.4);
    Graph b = oracle::random_graph(rng, 1 + rng() % 6, 0.4);
    Color ka = cf_chromatic_number(a).k, kb = cf_chromatic_number(b).k;
    EXPECT_EQ(cf_chromatic_number(disjoint_union(a, b)).k, std::max(ka, kb));
  }
  EXPECT_EQ(cf_chromatic_number(disjoint_union(cycle_graph(4), path_graph(3))).k, 2u);
}

TEST(Solver, Deterministic) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 30; ++iter) {
    Graph g = oracle::random_graph(rng, 3 + rng() % 8, 0.3);
    auto r1 = cf_chromatic_number(g), r2 = cf_chromatic_number(g);
    EXPECT_EQ(r1.k, r2.k);
    EXPECT_EQ(r1.nodes, r2.nodes);
    ASSERT_TRUE(r1.witness && r2.witness);
    EXPECT_EQ(r1.witness->raw(), r2.witness->raw());
  }
}

TEST(Solver, BudgetExhaustionIsInconclusive) {
  SolveOptions opt;
  opt.node_budget = 10;
  auto r = is_cf_k_colorable(gen_gn(3).graph, 2, opt);
  EXPECT_EQ(r.status, SolveStatus::inconclusive);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(cf_chromatic_number(gen_gn(3).graph, opt).status, SolveStatus::inconclusive);
}

TEST(Solver, PinsAreRespected) {
  SolveOptions opt;
  opt.pinned.assign(5, std::nullopt);
  opt.pinned[3] = Color{2};
  auto r = is_cf_k_colorable(bull_graph(), 2, opt);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.witness->at(3), std::optional<Color>(2));

  // pinning vertex 0 uncolored on C_4 with one color leaves nothing
  SolveOptions unc;
  unc.pinned.assign(4, std::nullopt);
  unc.pinned[0] = kUncolored;
  EXPECT_FALSE(is_cf_k_colorable(cycle_graph(4), 1, unc).found());
  EXPECT_TRUE(is_cf_k_colorable(cycle_graph(4), 2, unc).found());
}

TEST(Solver, PinsMatchFilteredEnumeration) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t n = 2 + rng() % 6;
    Graph g = oracle::random_graph(rng, n, 0.35);
    const Color k = 1 + rng() % 2;
    SolveOptions opt;
    opt.pinned.assign(n, std::nullopt);
    Vertex v = rng() % n;
    Color pin = rng() % (k + 1);
    opt.pinned[v] = pin;
    bool expect = false;
    for (const auto& col : oracle::all_cf_colorings(g, static_cast<int>(k), Mode::closed))
      expect = expect || col[v] == static_cast<int>(pin);
    EXPECT_EQ(is_cf_k_colorable(g, k, opt).found(), expect);
  }
}

TEST(Solver, MaxColoredCap) {
  SolveOptions opt;
  opt.max_colored = 1;
  EXPECT_FALSE(is_cf_k_colorable(bull_graph(), 2, opt).found());
  opt.max_colored = 2;
  auto r = is_cf_k_colorable(bull_graph(), 2, opt);
  ASSERT_TRUE(r.found());
  EXPECT_LE(r.witness->colored_count(), 2u);
}

TEST(Census, SmallOrders) {
  auto table = census(4);
  ASSERT_EQ(table.size(), 4u);
  EXPECT_EQ(table.at(1).max_chi, 1u);
  EXPECT_EQ(table.at(1).graphs, 1u);
  EXPECT_EQ(table.at(3).max_chi, 1u);
  EXPECT_EQ(table.at(4).max_chi, 2u);
  EXPECT_EQ(table.at(4).graphs, 64u);
  EXPECT_EQ(cf_chromatic_number(table.at(4).extremal).k, 2u);
}

TEST(Census, GuardRefusesLargeOrders) {
  EXPECT_THROW(census(8), contract_error);
  CensusOptions opt;
  opt.guard = 3;
  EXPECT_THROW(census(4, opt), contract_error);
}

TEST(Census, GraphFromCodeEnumeratesPairs) {
  Graph g = graph_from_code(4, 0b100001);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}}));
}
