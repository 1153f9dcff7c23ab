// cfgeo command-line front end. Exit status: 0 success, 1 negative answer (not colorable,
// invalid coloring, unsatisfiable), 2 usage or input error, 3 search budget exhausted,
// 4 internal invariant failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cfgeo/cfgeo.hpp"

namespace {

using namespace cfgeo;

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kInconclusive = 3, kInternal = 4 };

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw contract_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

// Writes to -o when given, else stdout.
class Output {
public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw contract_error("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

bool starts_with_header(const std::string& text, std::string_view header) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line.front() == '#') continue;
    return line.rfind(header, 0) == 0;
  }
  return false;
}

// Graph files are read as-is; instance files are turned into their intersection graph.
Graph load_graph(const std::string& path) {
  std::string text = slurp(path);
  if (starts_with_header(text, io::kInstanceHeader)) return build_intersection_graph(io::read_instance(text));
  return io::read_graph(text).graph;
}

std::optional<std::uint64_t> budget_from(std::uint64_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("CFGEO_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw contract_error(std::string("CFGEO_BUDGET is not a count: ") + env);
    if (v > 0) return v;
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict-free coloring of geometric intersection graphs"};
  app.require_subcommand(1);
  std::string out_path;
  std::function<int()> action;

  auto with_output = [&](CLI::App* sub) { sub->add_option("-o,--output", out_path, "Write the result to a file"); };

  // build-graph
  std::string instance_path;
  auto* build = app.add_subcommand("build-graph", "Intersection graph of an instance file");
  build->add_option("instance", instance_path, "Instance file ('-' for stdin)")->required();
  with_output(build);
  build->callback([&] {
    action = [&] {
      Output o(out_path);
      o.stream() << io::write_graph(build_intersection_graph(io::read_instance(slurp(instance_path))));
      return kOk;
    };
  });

  // color-strips
  bool experimental = false, single_strip = false;
  auto* strips = app.add_subcommand("color-strips", "Strip coloring of unit disks (6 colors) or unit squares (4)");
  strips->add_option("instance", instance_path, "Instance file ('-' for stdin)")->required();
  strips->add_flag("--single", single_strip, "Run the two-color greedy on one strip (height bound enforced)");
  strips->add_flag("--experimental", experimental,
                   "Run the two-color greedy on unit disks of height up to 2; the result is verified, not guaranteed");
  with_output(strips);
  strips->callback([&] {
    action = [&] {
      auto inst = io::read_instance(slurp(instance_path));
      Output o(out_path);
      if (single_strip || experimental) {
        GreedyOptions opt;
        opt.experimental_height2 = experimental;
        auto r = greedy_strip_coloring(inst, {1, 2}, opt);
        o.stream() << io::write_coloring(r.coloring);
        if (!r.valid) {
          std::cerr << "greedy coloring is not conflict-free on this instance\n";
          return kNo;
        }
        return kOk;
      }
      if (inst.kind == ShapeKind::unit_disk) o.stream() << io::write_coloring(color_unit_disks(inst));
      else if (inst.kind == ShapeKind::unit_square) o.stream() << io::write_coloring(color_unit_squares(inst));
      else throw precondition_error(std::string("color-strips needs unit disks or unit squares, got ") + to_string(inst.kind));
      return kOk;
    };
  });

  // color-intervals
  auto* intervals = app.add_subcommand("color-intervals", "Two-color greedy for interval instances");
  intervals->add_option("instance", instance_path, "Instance file ('-' for stdin)")->required();
  with_output(intervals);
  intervals->callback([&] {
    action = [&] {
      Output o(out_path);
      o.stream() << io::write_coloring(color_intervals(io::read_instance(slurp(instance_path))));
      return kOk;
    };
  });

  // solve
  std::string graph_path;
  Color k = 0;
  bool chromatic = false, open = false;
  std::uint64_t budget = 0;
  auto* solve = app.add_subcommand("solve", "Exact conflict-free colorability or chromatic number");
  solve->add_option("graph", graph_path, "Graph or instance file ('-' for stdin)")->required();
  auto* k_opt = solve->add_option("--k", k, "Decide colorability with at most K colors")->check(CLI::PositiveNumber);
  auto* chi_opt = solve->add_flag("--chromatic", chromatic, "Compute the conflict-free chromatic number");
  k_opt->excludes(chi_opt);
  solve->add_flag("--open", open, "Use open neighborhoods");
  solve->add_option("--budget", budget, "Node budget (0: unlimited; default from CFGEO_BUDGET)");
  with_output(solve);
  solve->callback([&] {
    if (!chromatic && k == 0) throw CLI::ValidationError("solve", "give --k K or --chromatic");
    action = [&] {
      Graph g = load_graph(graph_path);
      SolveOptions opt;
      opt.mode = open ? Mode::open : Mode::closed;
      opt.node_budget = budget_from(budget);
      Output o(out_path);
      if (chromatic) {
        auto r = cf_chromatic_number(g, opt);
        switch (r.status) {
          case SolveStatus::found:
            o.stream() << "chi_cf " << r.k << '\n' << io::write_coloring(*r.witness);
            return kOk;
          case SolveStatus::none:
            o.stream() << "chi_cf none\n";
            return kNo;
          case SolveStatus::inconclusive:
            o.stream() << "inconclusive at k " << r.k << " after " << r.nodes << " nodes\n";
            return kInconclusive;
        }
      }
      auto r = is_cf_k_colorable(g, k, opt);
      switch (r.status) {
        case SolveStatus::found: o.stream() << "colorable " << k << '\n' << io::write_coloring(*r.witness); return kOk;
        case SolveStatus::none: o.stream() << "not-colorable " << k << '\n'; return kNo;
        case SolveStatus::inconclusive:
          o.stream() << "inconclusive after " << r.nodes << " nodes\n";
          return kInconclusive;
      }
      return kInternal;
    };
  });

  // verify
  std::string coloring_path;
  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
  verify->add_option("graph", graph_path, "Graph or instance file")->required();
  verify->add_option("coloring", coloring_path, "Coloring file ('-' for stdin)")->required();
  verify->add_flag("--open", open, "Use open neighborhoods");
  verify->callback([&] {
    action = [&] {
      Graph g = load_graph(graph_path);
      auto report = verify_cf(g, io::read_coloring(slurp(coloring_path), g.size()), open ? Mode::open : Mode::closed);
      if (report.valid) {
        std::cout << "valid\n";
        return kOk;
      }
      std::cout << "invalid\nviolations";
      for (Vertex v : report.violations) std::cout << ' ' << v;
      std::cout << '\n';
      return kNo;
    };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Generate graphs, instances, chains and formulas");
  gen->require_subcommand(1);
  std::uint32_t size_arg = 0;
  auto sized = [&](const std::string& name, const std::string& help, std::function<std::string()> make) {
    auto* s = gen->add_subcommand(name, help);
    s->add_option("size", size_arg, "Size parameter")->required();
    with_output(s);
    s->callback([&, make] {
      action = [&, make] {
        std::string text = make();
        Output(out_path).stream() << text;
        return kOk;
      };
    });
  };
  sized("gn", "Gadget graph G_n", [&] { return io::write_graph(gen_gn(size_arg)); });
  sized("dk", "Chain gadget graph D_k", [&] { return io::write_graph(gen_dk(size_arg)); });
  sized("chain", "Chain of length M", [&] {
    if (size_arg < 1) throw contract_error("chain length must be at least 1");
    return io::write_chain({size_arg});
  });
  sized("star", "Star with N leaves", [&] { return io::write_graph(star_graph(size_arg)); });
  sized("path", "Path on N vertices", [&] { return io::write_graph(path_graph(size_arg)); });
  sized("cycle", "Cycle on N vertices", [&] { return io::write_graph(cycle_graph(size_arg)); });
  sized("complete", "Complete graph on N vertices", [&] { return io::write_graph(complete_graph(size_arg)); });

  bool as_instance = false;
  auto* bull = gen->add_subcommand("bull", "The bull graph");
  bull->add_flag("--instance", as_instance, "Emit the unit-interval realization instead");
  with_output(bull);
  bull->callback([&] {
    action = [&] {
      Output o(out_path);
      if (as_instance) o.stream() << io::write_instance(bull_interval_instance());
      else o.stream() << io::write_graph(bull_graph());
      return kOk;
    };
  });
  auto* c4 = gen->add_subcommand("c4", "The 4-cycle (G_2)");
  with_output(c4);
  c4->callback([&] {
    action = [&] {
      Output(out_path).stream() << io::write_graph(cycle_graph(4));
      return kOk;
    };
  });

  std::string formula_path;
  std::uint32_t path_length = 3;
  auto* red = gen->add_subcommand("reduction", "One-color hardness graph G(phi) of a 1-in-3 formula");
  red->add_option("formula", formula_path, "Formula file ('-' for stdin)")->required();
  red->add_option("--path-length", path_length, "Edges from each clause end to its true vertex (multiple of 3)");
  with_output(red);
  red->callback([&] {
    action = [&] {
      ReductionOptions opt;
      opt.path_length = path_length;
      Output(out_path).stream() << io::write_graph(build_reduction(io::read_formula(slurp(formula_path)), opt).gadget);
      return kOk;
    };
  });

  std::string kind_name, width = "10", height = "1";
  std::size_t count = 0;
  std::uint64_t seed = 0;
  auto* rnd = gen->add_subcommand("random", "Seeded random instance on a 1/1000 grid");
  rnd->add_option("kind", kind_name, "unit-disk, disk, unit-square, square or interval")->required();
  rnd->add_option("n", count, "Number of objects")->required();
  rnd->add_option("width", width, "Horizontal extent of centers")->required();
  rnd->add_option("height", height, "Vertical extent of centers (intervals: maximum length)")->required();
  rnd->add_option("seed", seed, "Random seed")->required();
  with_output(rnd);
  rnd->callback([&] {
    action = [&] {
      RandomInstanceSpec spec{parse_shape_kind(kind_name), count, parse_rational(width), parse_rational(height), seed};
      Output(out_path).stream() << io::write_instance(random_instance(spec));
      return kOk;
    };
  });

  // render
  auto* render = app.add_subcommand("render", "SVG drawing of an instance, optionally colored");
  render->add_option("instance", instance_path, "Instance file")->required();
  render->add_option("coloring", coloring_path, "Coloring file");
  with_output(render);
  render->callback([&] {
    action = [&] {
      auto inst = io::read_instance(slurp(instance_path));
      std::optional<PartialColoring> c;
      if (!coloring_path.empty()) c = io::read_coloring(slurp(coloring_path), inst.size());
      Output(out_path).stream() << render_svg(inst, c);
      return kOk;
    };
  });

  // recurrence
  std::string which;
  auto* rec = app.add_subcommand("recurrence", "Evaluate a size recurrence");
  rec->add_option("which", which, "gn, dk or gbar")->required()->check(CLI::IsMember({"gn", "dk", "gbar"}));
  rec->add_option("n", size_arg, "Argument (>= 1)")->required();
  rec->callback([&] {
    action = [&] {
      if (which == "gn") {
        std::cout << "gn " << size_arg << ' ' << recurrence_gn(size_arg) << '\n';
      } else if (which == "dk") {
        std::cout << "dk " << size_arg << ' ' << recurrence_dk_paper(size_arg) << '\n'
                  << "dk-built " << size_arg << ' ' << dk_two_copy_size(size_arg) << '\n';
      } else {
        char closed[64];
        std::snprintf(closed, sizeof closed, "%.17g", gbar_closed_form(size_arg));
        std::cout << "gbar " << size_arg << ' ' << gbar_recurrence(size_arg) << '\n'
                  << "gbar-closed " << size_arg << ' ' << closed << '\n';
      }
      return kOk;
    };
  });

  // census
  std::size_t max_n = 0;
  auto* cen = app.add_subcommand("census", "Maximum chi_CF over all labeled graphs up to a size");
  cen->add_option("--max-n", max_n, "Largest order (at most 7)")->required();
  cen->callback([&] {
    action = [&] {
      std::cout << "n max_chi graphs\n";
      for (const auto& [n, row] : census(max_n)) std::cout << n << ' ' << row.max_chi << ' ' << row.graphs << '\n';
      return kOk;
    };
  });

  // solve-chain
  std::string chain_path = "-";
  auto* sc = app.add_subcommand("solve-chain", "Colors needed so every interval of a chain has a unique color");
  sc->add_option("chain", chain_path, "Chain file (default stdin)");
  sc->callback([&] {
    action = [&] {
      auto r = chain_min_colors(io::read_chain(slurp(chain_path)).m);
      std::cout << "k " << r.k << "\nwitness";
      for (Color c : r.witness) std::cout << ' ' << c;
      std::cout << '\n';
      return kOk;
    };
  });

  // analyze
  auto* an = app.add_subcommand("analyze", "Domination number, diameter and the three-color area conditions");
  an->add_option("graph", graph_path, "Graph or instance file")->required();
  an->callback([&] {
    action = [&] {
      Graph g = load_graph(graph_path);
      auto d = diameter(g);
      auto cond = check_area_conditions(g);
      std::cout << "vertices " << g.size() << "\nedges " << g.edge_count() << "\ndomination " << domination_number(g)
                << "\ndiameter " << (d ? std::to_string(*d) : "disconnected") << "\ncond1 " << cond.cond1
                << "\ncond2 " << cond.cond2 << '\n';
      return kOk;
    };
  });

  // gadget-check
  auto* gc = app.add_subcommand("gadget-check", "Satisfiability, 1-colorability and gadget semantics of G(phi)");
  gc->add_option("formula", formula_path, "Formula file ('-' for stdin)")->required();
  gc->callback([&] {
    action = [&] {
      auto phi = io::read_formula(slurp(formula_path));
      const bool sat = one_in_three_assignment(phi).has_value();
      const bool colorable = is_cf_1_colorable(gen_reduction(phi).graph).has_value();
      auto props = verify_gadget_properties(phi);
      std::cout << "satisfiable " << sat << "\ncf-1-colorable " << colorable << "\nclause-uncolored "
                << props.clause_uncolored << "\nevery-third " << props.every_third << "\ncolorings " << props.colorings
                << '\n';
      return sat == colorable && props.clause_uncolored && props.every_third ? kOk : kNo;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  int status = kUsage;
  try {
    if (action) status = action();
  } catch (const invariant_violation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {  // contract and precondition errors
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  std::cout.flush();
  return status;
}
