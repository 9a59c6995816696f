#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rectdp/geometry.hpp"
#include "rectdp/states.hpp"
#include "rectdp/sweep.hpp"

namespace rectdp {

// Edge set of a rectilinear Steiner tree on the Hanan grid; every use has
// multiplicity 1.
struct SteinerTree {
  std::vector<EdgeUse> edges;
  Length total_length = 0;
};

struct SteinerTransition {
  SteinerState state;
  Length cost = 0;
  int mult = 0;
};

std::vector<SteinerTransition> steiner_transition(
    const SteinerState& state, const EdgeEvent& event, const HananGrid& grid,
    bool force_adjacent_terminals = false);

int expand_steiner(StateKey state, const EdgeEvent& event, const HananGrid& grid,
                   bool force_adjacent_terminals,
                   std::span<Successor, kMaxSuccessors> out);
bool accept_steiner(StateKey state, const HananGrid& grid);

struct SteinerSolution {
  Length length = 0;
  HananGrid grid;
  std::optional<SteinerTree> tree;  // trace mode only
  SweepStats stats;
};

SteinerSolution solve_steiner(const Instance& instance,
                              const SolveOptions& options = {});

// Empty when the edges form a tree spanning every terminal with the recorded
// length.
std::vector<std::string> steiner_tree_violations(const HananGrid& grid,
                                                 const SteinerTree& tree);

}  // namespace rectdp
