#include <gtest/gtest.h>

#include <random>

#include "cfgeo/io.hpp"
#include "oracles.hpp"

using namespace cfgeo;

namespace {

int line_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const parse_error& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST(GraphFormat, WritesCanonicalText) {
  EXPECT_EQ(io::write_graph(path_graph(3)), "cfgeo-graph v1\nn 3\ne 0 1\ne 1 2\n");
}

TEST(GraphFormat, ReadsWithCommentsAndBlankLines) {
  auto ag = io::read_graph("# a bull\ncfgeo-graph v1\n\nn 5\ne 0 1\ne 1 2\r\ne 2 0\n# note\ne 0 3\ne 1 4\n");
  EXPECT_EQ(ag.graph, bull_graph());
  EXPECT_TRUE(ag.roles.empty());
}

TEST(GraphFormat, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_graph(rng, rng() % 15, 0.3);
    EXPECT_EQ(io::read_graph(io::write_graph(g)).graph, g);
  }
}

TEST(GraphFormat, RoundTripsRoles) {
  auto gg = gen_dk(2);
  auto text = io::write_graph(gg);
  EXPECT_NE(text.find("# provenance dk 2"), std::string::npos);
  EXPECT_NE(text.find("# role 0 chain:1"), std::string::npos);
  auto back = io::read_graph(text);
  EXPECT_EQ(back.graph, gg.graph);
  EXPECT_EQ(back.roles, gg.roles);
}

TEST(GraphFormat, Errors) {
  EXPECT_EQ(line_of([] { io::read_graph("cfgeo-graph v2\nn 1\n"); }), 1);
  EXPECT_EQ(line_of([] { io::read_graph("cfgeo-graph v1\nn 3\ne 0 1\ne 0 x\n"); }), 4);
  EXPECT_EQ(line_of([] { io::read_graph("cfgeo-graph v1\nn 3\ne 0 1 2\n"); }), 3);
  EXPECT_EQ(line_of([] { io::read_graph("cfgeo-graph v1\nm 3\n"); }), 2);
  EXPECT_EQ(line_of([] { io::read_graph("cfgeo-graph v1\nn 3\nf 0 1\n"); }), 3);
  EXPECT_EQ(line_of([] { io::read_graph("cfgeo-graph v1\nn 2\ne 0 1\n# role 5 enforcer\n"); }), 4);
  EXPECT_EQ(line_of([] { io::read_graph("cfgeo-graph v1\nn 2\n# role 0 wizard\n"); }), 3);
  EXPECT_THROW(io::read_graph("cfgeo-graph v1\nn 2\ne 0 2\n"), parse_error);
  EXPECT_THROW(io::read_graph(""), parse_error);
  EXPECT_THROW(io::read_graph("cfgeo-graph v1\nn -1\n"), parse_error);
}

TEST(ColoringFormat, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng() % 20;
    const Color k = 1 + rng() % 6;
    PartialColoring c(n, k);
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) c.assign(v, 1 + rng() % k);
    EXPECT_EQ(io::read_coloring(io::write_coloring(c), n), c);
  }
}

TEST(ColoringFormat, Errors) {
  EXPECT_EQ(line_of([] { io::read_coloring("cfgeo-coloring v1\npalette 2\nc 0 3\n", 2); }), 3);
  EXPECT_EQ(line_of([] { io::read_coloring("cfgeo-coloring v1\npalette 2\nc 2 1\n", 2); }), 3);
  EXPECT_EQ(line_of([] { io::read_coloring("cfgeo-coloring v1\nc 0 1\n", 2); }), 2);
}

TEST(InstanceFormat, RoundTripsEveryKind) {
  std::mt19937_64 rng(3);
  for (ShapeKind kind : {ShapeKind::unit_disk, ShapeKind::disk, ShapeKind::unit_square, ShapeKind::square,
                         ShapeKind::interval}) {
    for (int i = 0; i < 30; ++i) {
      auto inst = random_instance({kind, rng() % 25, Rational(7, 3), Rational(5, 2), rng()});
      EXPECT_EQ(io::read_instance(io::write_instance(inst)), inst);
    }
  }
}

TEST(InstanceFormat, ParsesMixedNumberForms) {
  auto inst = io::read_instance("cfgeo-instance v1\nshape disk\nobject 0 1.5 -2/4 0.25\nobject 1 3 0 1\n");
  ASSERT_EQ(inst.size(), 2u);
  EXPECT_EQ(inst.objects[0].x, Rational(3, 2));
  EXPECT_EQ(inst.objects[0].y, Rational(-1, 2));
  EXPECT_EQ(inst.objects[0].extent, Rational(1, 4));
}

TEST(InstanceFormat, Errors) {
  EXPECT_EQ(line_of([] { io::read_instance("cfgeo-instance v1\nshape blob\n"); }), 2);
  EXPECT_EQ(line_of([] { io::read_instance("cfgeo-instance v1\nshape unit-disk\nobject 0 1 2 3\n"); }), 3);
  EXPECT_EQ(line_of([] { io::read_instance("cfgeo-instance v1\nshape unit-disk\nobject 1 1 2\n"); }), 3);
  EXPECT_EQ(line_of([] { io::read_instance("cfgeo-instance v1\nshape interval\nobject 0 2 1\n"); }), 3);
  EXPECT_EQ(line_of([] { io::read_instance("cfgeo-instance v1\nshape disk\nobject 0 0 0 0\n"); }), 3);
  EXPECT_EQ(line_of([] { io::read_instance("cfgeo-instance v1\nshape unit-disk\nobject 0 1e2 0\n"); }), 3);
}

TEST(FormulaFormat, RoundTripAndErrors) {
  for (const auto& phi : formula_corpus()) EXPECT_EQ(io::read_formula(io::write_formula(phi)), phi);
  EXPECT_THROW(io::read_formula("cfgeo-1in3 v1\nvars 3\nclause 0 1 1\n"), parse_error);
  EXPECT_THROW(io::read_formula("cfgeo-1in3 v1\nvars 2\nclause 0 1 2\n"), parse_error);
  EXPECT_EQ(line_of([] { io::read_formula("cfgeo-1in3 v1\nvars 3\nclause 0 1\n"); }), 3);
}

TEST(ChainFormat, RoundTripAndErrors) {
  EXPECT_EQ(io::read_chain(io::write_chain({4})).m, 4u);
  EXPECT_EQ(io::write_chain({4}), "cfgeo-chain v1\nm 4\n");
  EXPECT_THROW(io::read_chain("cfgeo-chain v1\nm 0\n"), parse_error);
  EXPECT_EQ(line_of([] { io::read_chain("cfgeo-chain v1\nm 3\nm 4\n"); }), 3);
}
