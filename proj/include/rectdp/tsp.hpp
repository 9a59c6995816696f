#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rectdp/geometry.hpp"
#include "rectdp/states.hpp"
#include "rectdp/sweep.hpp"

namespace rectdp {

// Edge multiset on the Hanan grid (solver orientation), multiplicities 1 or 2.
struct TourSubgraph {
  std::vector<EdgeUse> edges;
  Length total_length = 0;
};

// Closed walk over grid vertices; the first vertex is not repeated at the end.
struct Tour {
  std::vector<GridVertex> vertices;
};

struct TspTransition {
  TspState state;
  Length cost = 0;
  int mult = 0;
};

// Valid successors of a canonical state across one segment, canonicalized.
std::vector<TspTransition> tsp_transition(const TspState& state,
                                          const EdgeEvent& event,
                                          const HananGrid& grid);

// Key-level form of tsp_transition used inside the sweep.
int expand_tsp(StateKey state, const EdgeEvent& event, const HananGrid& grid,
               std::span<Successor, kMaxSuccessors> out);
// Final-layer test: a single component, no odd rows, last-column terminals
// have positive degree.
bool accept_tsp(StateKey state, const HananGrid& grid);

struct TspSolution {
  Length length = 0;
  HananGrid grid;
  // Present in trace mode only.
  std::optional<TourSubgraph> subgraph;
  std::optional<Tour> tour;
  SweepStats stats;
};

TspSolution solve_tsp(const Instance& instance, const SolveOptions& options = {});

// Eulerian circuit (Hierholzer) from the lowest, then leftmost, terminal.
// Throws InfeasibleError when the subgraph has an odd vertex or is
// disconnected.
Tour orient_tour(const HananGrid& grid, const TourSubgraph& subgraph);

Length tour_length(const HananGrid& grid, const Tour& tour);
// Tour vertices in the instance's original coordinates.
std::vector<Point> tour_points(const HananGrid& grid, const Tour& tour);

// Empty when the subgraph covers every terminal, is connected, has even
// degrees and multiplicities in {1, 2}, and its length matches.
std::vector<std::string> tour_subgraph_violations(const HananGrid& grid,
                                                  const TourSubgraph& subgraph);
// Empty when the tour steps between adjacent vertices, uses every edge copy
// of the subgraph exactly once and visits every terminal.
std::vector<std::string> tour_violations(const HananGrid& grid,
                                         const TourSubgraph& subgraph,
                                         const Tour& tour);

}  // namespace rectdp
