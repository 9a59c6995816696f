#include "rectdp/bench.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "rectdp/errors.hpp"
#include "rectdp/generator.hpp"
#include "rectdp/steiner.hpp"
#include "rectdp/tsp.hpp"

namespace rectdp {

namespace {

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::optional<std::size_t> peak_rss_bytes() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return std::nullopt;
  return static_cast<std::size_t>(usage.ru_maxrss) * 1024;  // kilobytes on Linux
}

BenchReport run_bench(const std::vector<BenchConfig>& configs,
                      const BenchOptions& options) {
  BenchReport report;
  report.configs = configs;
  SolveOptions solve;
  solve.trace = options.trace;
  solve.threads = options.threads;
  solve.force_adjacent_terminals = options.force_adjacent_terminals;

  for (const BenchConfig& cfg : configs) {
    for (int k = 0; k < cfg.count; ++k) {
      BenchRecord rec;
      rec.problem = cfg.problem;
      rec.n = cfg.n;
      rec.h = cfg.h;
      rec.seed = cfg.seed_base + static_cast<std::uint64_t>(k);
      const auto start = std::chrono::steady_clock::now();
      try {
        const Instance inst = gen_instance(cfg.n, cfg.h, cfg.xmax, cfg.ymax, rec.seed);
        SweepStats stats;
        HananGrid grid;
        if (cfg.problem == Problem::Tsp) {
          TspSolution s = solve_tsp(inst, solve);
          rec.optimum = s.length;
          stats = s.stats;
          grid = std::move(s.grid);
        } else {
          SteinerSolution s = solve_steiner(inst, solve);
          rec.optimum = s.length;
          stats = s.stats;
          grid = std::move(s.grid);
        }
        rec.h = grid.rows();
        rec.v = grid.cols();
        rec.max_layer_states = stats.max_layer_size;
        rec.layer_count = stats.layer_count;
      } catch (const Error& e) {
        rec.error = e.what();
      } catch (const std::bad_alloc&) {
        rec.error = "out of memory";
      }
      rec.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      rec.peak_mem_bytes = peak_rss_bytes();
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out << kBenchHeader << '\n';
  auto row = [&out](const BenchRecord& r) {
    out << problem_name(r.problem) << ',' << r.n << ',' << r.h << ',' << r.v << ','
        << r.seed << ',';
    if (r.optimum) {
      out << *r.optimum;
    } else {
      out << "error";
    }
    out << ',' << ms(r.wall_ms) << ',' << r.max_layer_states << ',' << r.layer_count
        << ',';
    if (r.peak_mem_bytes) out << *r.peak_mem_bytes;
    out << '\n';
  };

  std::size_t next = 0;
  for (const BenchConfig& cfg : report.configs) {
    double sum = 0.0;
    double worst = 0.0;
    std::size_t max_states = 0;
    std::size_t layers = 0;
    std::size_t peak = 0;
    int v = 0;
    int ok = 0;
    for (int k = 0; k < cfg.count && next < report.records.size(); ++k, ++next) {
      const BenchRecord& r = report.records[next];
      row(r);
      if (!r.optimum) continue;
      ++ok;
      sum += r.wall_ms;
      worst = std::max(worst, r.wall_ms);
      max_states = std::max(max_states, r.max_layer_states);
      layers = std::max(layers, r.layer_count);
      peak = std::max(peak, r.peak_mem_bytes.value_or(0));
      v = std::max(v, r.v);
    }
    out << problem_name(cfg.problem) << ',' << cfg.n << ',' << cfg.h << ',' << v
        << ",aggregate,," << ms(ok > 0 ? sum / ok : 0.0) << '/' << ms(worst) << ','
        << max_states << ',' << layers << ',' << peak << '\n';
  }
  return out.str();
}

}  // namespace rectdp
