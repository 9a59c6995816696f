#pragma once

#include <cstdint>
#include <vector>

#include "rectdp/generator.hpp"
#include "rectdp/geometry.hpp"

namespace rectdp::testing {

// n points (possibly repeated, deduplicated by make_instance) uniform in
// [0, xmax] x [0, ymax]. Small ranges give shared grid lines.
inline Instance random_points(SplitMix64& rng, int n, std::int64_t xmax,
                              std::int64_t ymax) {
  std::vector<Point> pts;
  for (int k = 0; k < n; ++k) pts.push_back({rng.uniform(0, xmax), rng.uniform(0, ymax)});
  return make_instance(std::move(pts));
}

inline Instance points(std::vector<Point> pts) { return make_instance(std::move(pts)); }

inline Instance transposed(const Instance& inst) {
  std::vector<Point> pts;
  for (const Point& p : inst.points) pts.push_back({p.y, p.x});
  return make_instance(std::move(pts));
}

inline Instance translated(const Instance& inst, Coord dx, Coord dy) {
  std::vector<Point> pts;
  for (const Point& p : inst.points) pts.push_back({p.x + dx, p.y + dy});
  return make_instance(std::move(pts));
}

}  // namespace rectdp::testing
