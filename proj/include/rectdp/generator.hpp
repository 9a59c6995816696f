#pragma once

#include <cstdint>
#include <vector>

#include "rectdp/geometry.hpp"

namespace rectdp {

// SplitMix64 with the seed as its state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0; rejection removes modulo bias.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

// `count` distinct values drawn uniformly from [lo, hi], in random order.
std::vector<std::int64_t> distinct_sample(SplitMix64& rng, std::size_t count,
                                          std::int64_t lo, std::int64_t hi);

// Random instance with exactly h distinct y values and n distinct x values.
// h distinct y values are drawn from [0, ymax]; the first h points take one
// each, the remaining n - h points take a uniformly chosen one. The n x values
// are distinct draws from [0, xmax]. Requires 1 <= h <= n, xmax >= n and
// ymax >= h; violations raise InputError.
Instance gen_instance(int n, int h, std::int64_t xmax, std::int64_t ymax,
                      std::uint64_t seed);

}  // namespace rectdp
