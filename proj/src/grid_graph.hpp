#pragma once

// Small helpers shared by the solution checkers.

#include <cstddef>
#include <numeric>
#include <vector>

#include "rectdp/geometry.hpp"

namespace rectdp::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when a and b were already connected.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::size_t vertex_id(const HananGrid& grid, GridVertex v) {
  return static_cast<std::size_t>(v.row) * static_cast<std::size_t>(grid.cols()) +
         static_cast<std::size_t>(v.col);
}

inline bool on_grid(const HananGrid& grid, const EdgeEvent& e) {
  if (e.row < 0 || e.col < 0 || e.row >= grid.rows() || e.col >= grid.cols()) {
    return false;
  }
  return e.kind == EdgeKind::Vertical ? e.row + 1 < grid.rows()
                                      : e.col + 1 < grid.cols();
}

inline Length segment_length(const HananGrid& grid, const EdgeEvent& e) {
  return e.kind == EdgeKind::Vertical ? grid.ys()[e.row + 1] - grid.ys()[e.row]
                                      : grid.xs()[e.col + 1] - grid.xs()[e.col];
}

// Lowest, then leftmost, terminal in original coordinates.
inline GridVertex anchor_terminal(const HananGrid& grid) {
  const std::vector<GridVertex> terms = grid.terminals();
  GridVertex best = terms.front();
  for (const GridVertex& t : terms) {
    const Point p = grid.point_at(t);
    const Point q = grid.point_at(best);
    if (p.y < q.y || (p.y == q.y && p.x < q.x)) best = t;
  }
  return best;
}

}  // namespace rectdp::detail
