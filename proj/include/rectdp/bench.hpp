#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rectdp/geometry.hpp"

namespace rectdp {

struct BenchConfig {
  Problem problem = Problem::Tsp;
  int n = 50;
  int h = 5;
  int count = 10;
  std::uint64_t seed_base = 1;
  std::int64_t xmax = 10000;
  std::int64_t ymax = 10000;
};

struct BenchOptions {
  bool trace = false;
  int threads = 1;
  bool force_adjacent_terminals = false;
};

// One solved instance. `error` is set (and `optimum` empty) when the run
// failed.
struct BenchRecord {
  Problem problem = Problem::Tsp;
  int n = 0;
  int h = 0;
  int v = 0;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> optimum;
  double wall_ms = 0.0;
  std::size_t max_layer_states = 0;
  std::size_t layer_count = 0;
  std::optional<std::size_t> peak_mem_bytes;
  std::string error;
};

struct BenchReport {
  std::vector<BenchConfig> configs;
  // Runs of configs[k] occupy a contiguous block, in config order.
  std::vector<BenchRecord> records;
};

// Seeds of configuration k are seed_base, seed_base + 1, ...
BenchReport run_bench(const std::vector<BenchConfig>& configs,
                      const BenchOptions& options = {});

// Header, then per configuration its run rows followed by one aggregate row
// whose seed column reads "aggregate" and whose wall_ms column is "avg/max".
std::string bench_csv(const BenchReport& report);

inline constexpr const char* kBenchHeader =
    "problem,n,h,v,seed,optimum,wall_ms,max_layer_states,layer_count,peak_mem_bytes";

// Process peak resident set size so far.
std::optional<std::size_t> peak_rss_bytes();

}  // namespace rectdp
