#include "rectdp/generator.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rectdp/errors.hpp"

namespace rectdp {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  return lo + static_cast<std::int64_t>(below(span));
}

std::vector<std::int64_t> distinct_sample(SplitMix64& rng, std::size_t count,
                                          std::int64_t lo, std::int64_t hi) {
  // Floyd's algorithm, then a Fisher-Yates shuffle of the sorted set.
  const std::int64_t range_top = hi - static_cast<std::int64_t>(count) + 1;
  std::set<std::int64_t> chosen;
  for (std::int64_t j = range_top; j <= hi; ++j) {
    const std::int64_t t = rng.uniform(lo, j);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::int64_t> out(chosen.begin(), chosen.end());
  for (std::size_t i = out.size(); i > 1; --i) {
    std::swap(out[i - 1], out[rng.below(i)]);
  }
  return out;
}

Instance gen_instance(int n, int h, std::int64_t xmax, std::int64_t ymax,
                      std::uint64_t seed) {
  auto fail = [](const std::string& why) {
    return InputError(InputError::Kind::InvalidArgument, why);
  };
  if (h < 1 || h > n) throw fail("need 1 <= h <= n");
  if (xmax < n) throw fail("need xmax >= n");
  if (ymax < h) throw fail("need ymax >= h");
  if (xmax > kMaxAbsCoord || ymax > kMaxAbsCoord) throw fail("coordinate bound too large");

  SplitMix64 rng(seed);
  const auto ys = distinct_sample(rng, static_cast<std::size_t>(h), 0, ymax);
  const auto xs = distinct_sample(rng, static_cast<std::size_t>(n), 0, xmax);
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const std::int64_t y =
        k < h ? ys[static_cast<std::size_t>(k)]
              : ys[rng.below(static_cast<std::uint64_t>(h))];
    points.push_back({xs[static_cast<std::size_t>(k)], y});
  }
  return make_instance(std::move(points));
}

}  // namespace rectdp
