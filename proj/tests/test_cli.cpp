#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cfgeo/io.hpp"

using namespace cfgeo;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Run cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " '" CFGEO_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return "'" + std::string(CFGEO_DATA) + "/" + name + "'"; }

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cfgeo-cli-" + std::to_string(getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }
  std::string read(const std::string& name) const {
    std::ifstream in(tmp(name));
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_F(CliTest, ChromaticNumberOfBull) {
  auto r = cli("solve --chromatic " + data("bull.graph") + " -o " + tmp("bull.out"));
  EXPECT_EQ(r.status, 0);
  std::string text = read("bull.out");
  EXPECT_EQ(first_line(text), "chi_cf 2");
  auto coloring = io::read_coloring(text.substr(text.find('\n') + 1), 5);
  EXPECT_TRUE(verify_cf(bull_graph(), coloring).valid);
}

TEST_F(CliTest, VerifyReportsViolations) {
  std::ofstream(tmp("bad.coloring")) << "cfgeo-coloring v1\npalette 1\nc 0 1\n";
  auto r = cli("verify " + data("c4.graph") + " " + tmp("bad.coloring"));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "invalid\nviolations 2\n");
  std::ofstream(tmp("good.coloring")) << "cfgeo-coloring v1\npalette 2\nc 0 1\nc 1 2\n";
  auto ok = cli("verify " + data("c4.graph") + " " + tmp("good.coloring"));
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(ok.out, "valid\n");
}

TEST_F(CliTest, ChainOfFourNeedsThreeColors) {
  auto r = cli("gen chain 4 | '" CFGEO_CLI "' solve-chain");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(first_line(r.out), "k 3");
}

TEST_F(CliTest, DecisionExitCodes) {
  EXPECT_EQ(cli("solve --k 1 " + data("c4.graph")).status, 1);
  auto yes = cli("solve --k 2 " + data("c4.graph"));
  EXPECT_EQ(yes.status, 0);
  EXPECT_EQ(first_line(yes.out), "colorable 2");
  // open mode on a graph with an isolated vertex has no coloring at all
  std::ofstream(tmp("iso.graph")) << "cfgeo-graph v1\nn 3\ne 0 1\n";
  EXPECT_EQ(cli("solve --chromatic --open " + tmp("iso.graph")).status, 1);
}

TEST_F(CliTest, BudgetFromFlagAndEnvironment) {
  ASSERT_EQ(cli("gen gn 3 -o " + tmp("g3.graph")).status, 0);
  EXPECT_EQ(cli("solve --k 2 --budget 5 " + tmp("g3.graph")).status, 3);
  EXPECT_EQ(cli("solve --k 2 " + tmp("g3.graph"), "CFGEO_BUDGET=5").status, 3);
  EXPECT_EQ(cli("solve --k 2 --budget 100000000 " + tmp("g3.graph"), "CFGEO_BUDGET=5").status, 1);
  EXPECT_EQ(cli("solve --k 2 " + tmp("g3.graph"), "CFGEO_BUDGET=lots").status, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(cli("frobnicate").status, 2);
  EXPECT_EQ(cli("solve --bogus " + data("c4.graph")).status, 2);
  EXPECT_EQ(cli("solve " + data("c4.graph")).status, 2);
  EXPECT_EQ(cli("solve --k 2 --chromatic " + data("c4.graph")).status, 2);
  EXPECT_EQ(cli("solve --k 2 /nonexistent/file").status, 2);
  EXPECT_EQ(cli("gen gn 0").status, 2);
  EXPECT_EQ(cli("census --max-n 9").status, 2);
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("--help").status, 0);
}

TEST_F(CliTest, MalformedInputIsAUsageError) {
  std::ofstream(tmp("bad.graph")) << "cfgeo-graph v1\nn 2\ne 0 7\n";
  EXPECT_EQ(cli("solve --k 1 " + tmp("bad.graph")).status, 2);
  std::ofstream(tmp("tall.instance")) << "cfgeo-instance v1\nshape unit-disk\nobject 0 0 0\nobject 1 0 3\n";
  EXPECT_EQ(cli("color-strips --single " + tmp("tall.instance")).status, 2);
  EXPECT_EQ(cli("color-intervals " + tmp("tall.instance")).status, 2);
}

TEST_F(CliTest, StripAndIntervalColorings) {
  for (const char* name : {"disks.instance", "squares.instance", "disks-strip.instance"}) {
    ASSERT_EQ(cli("color-strips " + data(name) + " -o " + tmp("c.coloring")).status, 0) << name;
    EXPECT_EQ(cli("verify " + data(name) + " " + tmp("c.coloring")).status, 0) << name;
  }
  ASSERT_EQ(cli("color-strips --single " + data("disks-strip.instance") + " -o " + tmp("s.coloring")).status, 0);
  auto c = io::read_coloring(read("s.coloring"), 40);
  EXPECT_LE(c.distinct_colors(), 2u);

  auto iv = cli("color-intervals " + data("bull-intervals.instance"));
  EXPECT_EQ(iv.status, 0);
  EXPECT_EQ(iv.out, "cfgeo-coloring v1\npalette 2\nc 1 1\nc 4 2\n");
}

TEST_F(CliTest, GeneratedFilesRoundTrip) {
  ASSERT_EQ(cli("gen gn 3 -o " + tmp("g.graph")).status, 0);
  auto g = io::read_graph(read("g.graph"));
  EXPECT_EQ(g.graph, gen_gn(3).graph);
  EXPECT_EQ(g.roles, gen_gn(3).roles);
  EXPECT_EQ(io::write_graph(gen_gn(3)), read("g.graph"));

  ASSERT_EQ(cli("gen random interval 30 20 3 11 -o " + tmp("r.instance")).status, 0);
  EXPECT_EQ(io::read_instance(read("r.instance")),
            random_instance({ShapeKind::interval, 30, Rational(20), Rational(3), 11}));

  ASSERT_EQ(cli("gen reduction " + data("one-clause.1in3") + " -o " + tmp("red.graph")).status, 0);
  EXPECT_EQ(io::read_graph(read("red.graph")).graph.size(), 48u);
}

TEST_F(CliTest, DeterministicOutput) {
  for (const std::string& args : std::vector<std::string>{
        "gen random unit-disk 100 40 10 5", "color-strips " + data("disks.instance"),
        "solve --chromatic " + data("bull.graph"), "gen dk 3", "render " + data("squares.instance")}) {
    auto a = cli(args), b = cli(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

TEST_F(CliTest, RenderWritesSvg) {
  ASSERT_EQ(cli("color-intervals " + data("bull-intervals.instance") + " -o " + tmp("b.coloring")).status, 0);
  ASSERT_EQ(cli("render " + data("bull-intervals.instance") + " " + tmp("b.coloring") + " -o " + tmp("b.svg")).status, 0);
  std::string svg = read("b.svg");
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("class=\"object colored\""), std::string::npos);
}

TEST_F(CliTest, RecurrencesCensusAndAnalysis) {
  EXPECT_EQ(cli("recurrence gn 3").out, "gn 3 33\n");
  EXPECT_EQ(cli("recurrence dk 3").out, "dk 3 54\ndk-built 3 164\n");
  EXPECT_EQ(first_line(cli("recurrence gbar 3").out), "gbar 3 42");
  EXPECT_EQ(cli("census --max-n 4").out, "n max_chi graphs\n1 1 1\n2 1 2\n3 1 8\n4 2 64\n");
  auto an = cli("analyze " + data("bull.graph"));
  EXPECT_NE(an.out.find("domination 2\n"), std::string::npos);
  EXPECT_NE(an.out.find("diameter 3\n"), std::string::npos);
}

TEST_F(CliTest, GadgetCheck) {
  auto unsat = cli("gadget-check " + data("unsat4.1in3"));
  EXPECT_EQ(unsat.status, 0);
  EXPECT_NE(unsat.out.find("satisfiable 0\ncf-1-colorable 0\n"), std::string::npos);
  auto shared = cli("gadget-check " + data("shared.1in3"));
  EXPECT_EQ(shared.status, 0);
  EXPECT_NE(shared.out.find("satisfiable 1\ncf-1-colorable 1\nclause-uncolored 1\nevery-third 1\n"), std::string::npos);
}
