// rectdp: exact rectilinear TSP / Steiner tree solver.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "rectdp/bench.hpp"
#include "rectdp/errors.hpp"
#include "rectdp/generator.hpp"
#include "rectdp/oracle.hpp"
#include "rectdp/solution_io.hpp"
#include "rectdp/states.hpp"
#include "rectdp/steiner.hpp"
#include "rectdp/svg.hpp"
#include "rectdp/tsp.hpp"

using namespace rectdp;

namespace {

enum Exit { kOk = 0, kInvalidInput = 2, kGuard = 3, kInfeasible = 4 };

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(InputError::Kind::InvalidArgument, "cannot open '" + path + "'");
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError(InputError::Kind::InvalidArgument, "cannot write '" + path + "'");
  }
  out << text;
}

void print_stats(const SweepStats& s, int rows, int cols) {
  std::fprintf(stderr, "grid %dx%d, %zu layers, max layer %zu states, %.1f ms\n", rows,
               cols, s.layer_count, s.max_layer_size, s.wall_ms);
}

struct Common {
  std::string input;
  std::string output;
  std::string svg;
  int threads = 1;
  bool no_trace = false;
  bool validate = false;
};

void add_solve_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--input,-i", c.input, "instance file ('-' for stdin)");
  cmd->add_option("--output,-o", c.output, "solution file (default stdout)");
  cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-trace", c.no_trace, "report the length only, keep two layers alive");
  cmd->add_option("--svg", c.svg, "also render the solution to this SVG file");
  cmd->add_flag("--validate-states", c.validate, "check every produced state (slow)");
}

int solve(Problem problem, const Common& c, bool force) {
  const Instance inst = parse_instance(read_text(c.input));
  SolveOptions opt;
  opt.trace = !c.no_trace;
  opt.threads = c.threads;
  opt.validate_states = c.validate;
  opt.force_adjacent_terminals = force;

  Solution sol;
  sol.problem = problem;
  std::string extra;
  if (problem == Problem::Tsp) {
    const TspSolution s = solve_tsp(inst, opt);
    sol.length = s.length;
    print_stats(s.stats, s.grid.rows(), s.grid.cols());
    if (s.subgraph) sol.edges = to_solution_edges(s.grid, s.subgraph->edges);
    if (s.tour) {
      extra = "# tour";
      for (const Point& p : tour_points(s.grid, *s.tour)) {
        extra += " " + std::to_string(p.x) + "," + std::to_string(p.y);
      }
      extra += "\n";
    }
  } else {
    const SteinerSolution s = solve_steiner(inst, opt);
    sol.length = s.length;
    print_stats(s.stats, s.grid.rows(), s.grid.cols());
    if (s.tree) sol.edges = to_solution_edges(s.grid, s.tree->edges);
  }
  write_text(c.output, format_solution(sol) + extra);
  if (!c.svg.empty()) write_text(c.svg, render_svg(inst, sol.edges));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rectilinear TSP and Steiner tree solver on the Hanan grid"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  Common tsp_flags;
  auto* solve_tsp_cmd = app.add_subcommand("solve-tsp", "optimal rectilinear tour");
  add_solve_flags(solve_tsp_cmd, tsp_flags);

  Common st_flags;
  bool force = false;
  auto* solve_st_cmd = app.add_subcommand("solve-steiner", "optimal rectilinear Steiner tree");
  add_solve_flags(solve_st_cmd, st_flags);
  solve_st_cmd->add_flag("--force-adjacent-terminals", force,
                         "always join horizontally adjacent terminals");

  std::string oracle_input;
  auto* oracle_tsp_cmd = app.add_subcommand("oracle-tsp", "brute-force tour length (n <= 10)");
  oracle_tsp_cmd->add_option("--input,-i", oracle_input, "instance file");
  auto* oracle_st_cmd =
      app.add_subcommand("oracle-steiner", "Dreyfus-Wagner tree length (<= 10 terminals)");
  oracle_st_cmd->add_option("--input,-i", oracle_input, "instance file");

  std::string problem_text = "tsp";
  int h = 3;
  std::string states_output;
  auto* states_cmd = app.add_subcommand("states", "list every frontier state for h rows");
  states_cmd->add_option("--problem", problem_text)->check(CLI::IsMember({"tsp", "steiner"}));
  states_cmd->add_option("--h", h, "rows")->required();
  states_cmd->add_option("--output,-o", states_output);

  int count_max = 8;
  auto* count_cmd = app.add_subcommand("count", "closed-form state counts for h = 1..H");
  count_cmd->add_option("--problem", problem_text)->check(CLI::IsMember({"tsp", "steiner"}));
  count_cmd->add_option("--h", count_max, "largest h")->check(CLI::Range(1, 64));
  bool count_enumerate = false;
  count_cmd->add_flag("--enumerate", count_enumerate, "also count by enumeration (h <= 12)");

  int gen_n = 20;
  int gen_h = 4;
  std::int64_t gen_xmax = 1000;
  std::int64_t gen_ymax = 1000;
  std::uint64_t gen_seed = 1;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "random instance");
  gen_cmd->add_option("--n", gen_n)->required();
  gen_cmd->add_option("--h", gen_h)->required();
  gen_cmd->add_option("--xmax", gen_xmax);
  gen_cmd->add_option("--ymax", gen_ymax);
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--output,-o", gen_output);

  std::vector<int> bench_n{50};
  std::vector<int> bench_h{1, 2, 3, 4, 5, 6};
  int bench_count = 5;
  std::uint64_t bench_seed = 1;
  std::int64_t bench_xmax = 10000;
  std::int64_t bench_ymax = 10000;
  int bench_threads = 1;
  bool bench_trace = false;
  bool bench_force = false;
  std::string bench_csv_path;
  auto* bench_cmd = app.add_subcommand("bench", "benchmark on random instances, CSV output");
  bench_cmd->add_option("--problem", problem_text)->check(CLI::IsMember({"tsp", "steiner"}));
  bench_cmd->add_option("--n", bench_n, "point counts");
  bench_cmd->add_option("--h", bench_h, "row counts");
  bench_cmd->add_option("--count", bench_count, "instances per configuration");
  bench_cmd->add_option("--seed", bench_seed, "first seed");
  bench_cmd->add_option("--xmax", bench_xmax);
  bench_cmd->add_option("--ymax", bench_ymax);
  bench_cmd->add_option("--threads", bench_threads)->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--trace", bench_trace, "keep back pointers (more memory)");
  bench_cmd->add_flag("--force-adjacent-terminals", bench_force);
  bench_cmd->add_option("--csv", bench_csv_path, "CSV file (default stdout)");

  std::string render_input;
  std::string render_solution;
  std::string render_svg_path;
  auto* render_cmd = app.add_subcommand("render", "draw an instance and a solution as SVG");
  render_cmd->add_option("--input,-i", render_input, "instance file")->required();
  render_cmd->add_option("--solution", render_solution, "solution file");
  render_cmd->add_option("--svg", render_svg_path, "SVG file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (*solve_tsp_cmd) return solve(Problem::Tsp, tsp_flags, false);
    if (*solve_st_cmd) return solve(Problem::Steiner, st_flags, force);
    if (*oracle_tsp_cmd || *oracle_st_cmd) {
      const Instance inst = parse_instance(read_text(oracle_input));
      const Length len = *oracle_tsp_cmd ? tsp_bruteforce(inst) : steiner_oracle(inst);
      std::cout << "length " << len << '\n';
      return kOk;
    }
    if (*states_cmd) {
      const Problem p = parse_problem(problem_text);
      std::string out;
      if (p == Problem::Tsp) {
        for_each_tsp_state(h, [&](const TspState& s) { out += to_string(s) + '\n'; });
      } else {
        for_each_steiner_state(h, [&](const SteinerState& s) { out += to_string(s) + '\n'; });
      }
      write_text(states_output, out);
      return kOk;
    }
    if (*count_cmd) {
      const Problem p = parse_problem(problem_text);
      std::cout << "h,states,positive_states" << (count_enumerate ? ",enumerated" : "")
                << '\n';
      for (int k = 1; k <= count_max; ++k) {
        std::cout << k << ',' << count_states(k, p) << ',' << count_positive_states(k, p);
        if (count_enumerate) std::cout << ',' << enumerate_states(k, p).size();
        std::cout << '\n';
      }
      return kOk;
    }
    if (*gen_cmd) {
      write_text(gen_output,
                 format_instance(gen_instance(gen_n, gen_h, gen_xmax, gen_ymax, gen_seed)));
      return kOk;
    }
    if (*bench_cmd) {
      const Problem p = parse_problem(problem_text);
      std::vector<BenchConfig> configs;
      std::uint64_t seed = bench_seed;
      for (int n : bench_n) {
        for (int hh : bench_h) {
          configs.push_back({p, n, hh, bench_count, seed, bench_xmax, bench_ymax});
        }
      }
      BenchOptions opt;
      opt.trace = bench_trace;
      opt.threads = bench_threads;
      opt.force_adjacent_terminals = bench_force;
      write_text(bench_csv_path, bench_csv(run_bench(configs, opt)));
      return kOk;
    }
    if (*render_cmd) {
      const Instance inst = parse_instance(read_text(render_input));
      std::vector<SolutionEdge> edges;
      if (!render_solution.empty()) edges = parse_solution(read_text(render_solution)).edges;
      write_text(render_svg_path, render_svg(inst, edges));
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kGuard;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const StateError& e) {
    std::cerr << "invalid state: " << e.what() << '\n';
    return kInfeasible;
  }
  return kOk;
}
