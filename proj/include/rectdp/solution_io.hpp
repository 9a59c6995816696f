#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rectdp/geometry.hpp"
#include "rectdp/sweep.hpp"

namespace rectdp {

// A solution segment in the instance's own orientation: rows follow the
// sorted distinct y values, columns the sorted distinct x values, 0-based.
// Vertical(row, col) joins rows row and row + 1 on column col.
struct SolutionEdge {
  EdgeKind kind = EdgeKind::Vertical;
  int row = 0;
  int col = 0;
  int mult = 1;

  friend auto operator<=>(const SolutionEdge&, const SolutionEdge&) = default;
};

struct Solution {
  Problem problem = Problem::Tsp;
  Length length = 0;
  std::vector<SolutionEdge> edges;  // empty in length-only output
};

// Text block:
//   problem tsp
//   length 30
//   V 1 1 1
//   H 1 1 1
// Indices are 1-based; edges are sorted.
std::string format_solution(const Solution& solution);
Solution parse_solution(std::string_view text);

std::vector<SolutionEdge> to_solution_edges(const HananGrid& grid,
                                            std::span<const EdgeUse> edges);
// Throws InputError when an edge is not a segment of the grid.
std::vector<EdgeUse> from_solution_edges(const HananGrid& grid,
                                         std::span<const SolutionEdge> edges);

// Replays a solution against an instance: the edges must form a tour subgraph
// (tsp) or a spanning tree (steiner) whose length equals the recorded value.
// Returns the list of problems, empty when valid.
std::vector<std::string> verify_solution(const Instance& instance,
                                         const Solution& solution);

}  // namespace rectdp
