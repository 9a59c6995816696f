#include <gtest/gtest.h>

#include <algorithm>
#include <unordered_set>

#include "rectdp/errors.hpp"
#include "rectdp/generator.hpp"
#include "rectdp/oracle.hpp"
#include "rectdp/steiner.hpp"
#include "rectdp/tsp.hpp"
#include "support.hpp"

namespace rectdp {
namespace {

using testing::points;

SteinerState st(std::vector<int> comp) { return canonicalize_steiner(comp); }

bool has_mult(const std::vector<SteinerTransition>& ts, int mult) {
  return std::any_of(ts.begin(), ts.end(), [&](const auto& t) { return t.mult == mult; });
}

void expect_valid(const SteinerSolution& s) {
  ASSERT_TRUE(s.tree);
  EXPECT_TRUE(steiner_tree_violations(s.grid, *s.tree).empty());
  EXPECT_EQ(s.tree->total_length, s.length);
  for (const EdgeUse& u : s.tree->edges) EXPECT_EQ(u.mult, 1);
}

TEST(SteinerTransition, VerticalCycleOmitted) {
  const HananGrid g = build_grid(points({{0, 0}, {1, 1}}));
  const auto ts = steiner_transition(st({1, 1}), {EdgeKind::Vertical, 0, 0, 1}, g);
  EXPECT_FALSE(has_mult(ts, 1));
  ASSERT_EQ(ts.size(), 1u);
}

TEST(SteinerTransition, VerticalFreshComponent) {
  const HananGrid g = build_grid(points({{0, 0}, {1, 1}}));
  const auto ts = steiner_transition(st({0, 0}), {EdgeKind::Vertical, 0, 0, 1}, g);
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(to_string(ts[1].state), "(1,1)");
  EXPECT_EQ(ts[1].cost, 1);
}

TEST(SteinerTransition, VerticalMergesComponents) {
  const HananGrid g = build_grid(points({{0, 0}, {1, 1}, {2, 2}}));
  const auto ts = steiner_transition(st({1, 2, 0}), {EdgeKind::Vertical, 0, 1, 1}, g);
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(to_string(ts[1].state), "(1,1,-)");
}

TEST(SteinerTransition, PendantOmitted) {
  // (1, 0) is not a terminal of this grid.
  const HananGrid g = build_grid(points({{1, 0}, {0, 1}}));
  ASSERT_FALSE(g.is_terminal(0, 0));
  const auto ts = steiner_transition(st({0, 0}), {EdgeKind::Horizontal, 0, 0, 1}, g);
  EXPECT_FALSE(has_mult(ts, 1));
  EXPECT_TRUE(has_mult(ts, 0));
}

TEST(SteinerTransition, TerminalMustAttach) {
  const HananGrid g = build_grid(points({{0, 0}, {1, 1}}));
  const auto ts = steiner_transition(st({0, 0}), {EdgeKind::Horizontal, 0, 0, 1}, g);
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].mult, 1);
  EXPECT_EQ(to_string(ts[0].state), "(1,-)");
}

TEST(SteinerTransition, ClosureOmitted) {
  const HananGrid g = build_grid(points({{0, 0}, {1, 1}, {2, 2}}));
  const auto ts = steiner_transition(st({1, 1, 2}), {EdgeKind::Horizontal, 2, 0, 1}, g);
  EXPECT_FALSE(has_mult(ts, 0));
  // Leaving a component that keeps another frontier row is fine.
  const auto tt = steiner_transition(st({1, 1, 2}), {EdgeKind::Horizontal, 1, 0, 1}, g);
  ASSERT_TRUE(has_mult(tt, 0));
  EXPECT_EQ(to_string(tt[0].state), "(1,-,2)");
}

TEST(SteinerTransition, ForcedAdjacency) {
  const HananGrid g = build_grid(points({{0, 0}, {1, 0}, {0, 1}}));
  const auto free = steiner_transition(st({1, 1}), {EdgeKind::Horizontal, 0, 0, 1}, g, false);
  EXPECT_TRUE(has_mult(free, 0));
  const auto forced = steiner_transition(st({1, 1}), {EdgeKind::Horizontal, 0, 0, 1}, g, true);
  ASSERT_EQ(forced.size(), 1u);
  EXPECT_EQ(forced[0].mult, 1);
}

TEST(SolveSteiner, TwoTerminals) {
  const SteinerSolution s = solve_steiner(points({{0, 0}, {8, 3}}));
  EXPECT_EQ(s.length, 11);
  expect_valid(s);
}

TEST(SolveSteiner, ThreeTerminalsBoundingBox) {
  const SteinerSolution s = solve_steiner(points({{0, 0}, {4, 2}, {2, 5}}));
  EXPECT_EQ(s.length, 9);
  expect_valid(s);
}

TEST(SolveSteiner, SinglePoint) {
  const SteinerSolution s = solve_steiner(points({{1, 1}}));
  EXPECT_EQ(s.length, 0);
  EXPECT_TRUE(s.tree->edges.empty());
}

TEST(SolveSteiner, Rectangle) {
  EXPECT_EQ(solve_steiner(points({{0, 0}, {10, 0}, {0, 4}, {10, 4}})).length, 18);
}

TEST(SolveSteiner, MatchesDreyfusWagner) {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(6));
    const Instance inst = trial % 2 == 0
                              ? testing::random_points(rng, n, 15, 15)
                              : gen_instance(n, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                                             60, 60, rng.next());
    if (inst.points.size() < 2) continue;
    SolveOptions opt;
    opt.validate_states = true;
    const SteinerSolution s = solve_steiner(inst, opt);
    ASSERT_EQ(s.length, steiner_oracle(inst)) << format_instance(inst);
    expect_valid(s);
  }
}

TEST(SolveSteiner, ForcedAdjacencyKeepsOptimum) {
  SplitMix64 rng(78);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = testing::random_points(rng, 7, 6, 6);
    SolveOptions forced;
    forced.force_adjacent_terminals = true;
    const SteinerSolution a = solve_steiner(inst);
    const SteinerSolution b = solve_steiner(inst, forced);
    ASSERT_EQ(a.length, b.length) << format_instance(inst);
    expect_valid(b);
  }
}

TEST(SolveSteiner, NotLongerThanTour) {
  SplitMix64 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = testing::random_points(rng, 14, 20, 8);
    EXPECT_LE(solve_steiner(inst).length, solve_tsp(inst).length);
  }
}

TEST(SolveSteiner, InvarianceAndModes) {
  SplitMix64 rng(80);
  for (int trial = 0; trial < 15; ++trial) {
    const Instance inst = testing::random_points(rng, 16, 12, 7);
    const SteinerSolution a = solve_steiner(inst);
    EXPECT_EQ(solve_steiner(testing::transposed(inst)).length, a.length);
    EXPECT_EQ(solve_steiner(testing::translated(inst, 5, -500)).length, a.length);
    SolveOptions opt;
    opt.trace = false;
    opt.threads = 2;
    EXPECT_EQ(solve_steiner(inst, opt).length, a.length);
    opt.trace = true;
    EXPECT_EQ(solve_steiner(inst, opt).tree->edges, a.tree->edges);
  }
}

TEST(SolveSteiner, ReachableStatesAreEnumerated) {
  SplitMix64 rng(81);
  for (int h = 1; h <= 7; ++h) {
    const auto all = enumerate_states(h, Problem::Steiner);
    const std::unordered_set<StateKey> omega(all.begin(), all.end());
    const Instance inst = gen_instance(25, h, 300, 300, rng.next());
    const HananGrid grid = build_grid(inst);
    const ExpandFn expand = [&](StateKey s, const EdgeEvent& e, std::span<Successor, 3> out) {
      const int n = expand_steiner(s, e, grid, false, out);
      for (int k = 0; k < n; ++k) {
        if (!omega.count(out[k].key)) throw StateError(StateError::Kind::BadShape, "outside");
      }
      return n;
    };
    const SweepResult r =
        run_sweep(edge_schedule(grid), 0, expand,
                  [&](StateKey s) { return accept_steiner(s, grid); }, {false, 1});
    EXPECT_LE(BigInt(r.stats.max_layer_size), count_states(h, Problem::Steiner));
  }
}

TEST(SteinerTreeViolations, DetectsProblems) {
  const HananGrid g = build_grid(points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  const auto ev = edge_schedule(g);
  SteinerTree cycle;
  for (const EdgeEvent& e : ev) {
    cycle.edges.push_back({e, 1});
    cycle.total_length += e.length;
  }
  EXPECT_FALSE(steiner_tree_violations(g, cycle).empty());
  SteinerTree partial{{{ev[0], 1}}, ev[0].length};
  EXPECT_FALSE(steiner_tree_violations(g, partial).empty());
  SteinerTree wrong_len{{{ev[0], 1}, {ev[1], 1}, {ev[2], 1}}, 1};
  EXPECT_FALSE(steiner_tree_violations(g, wrong_len).empty());
  wrong_len.total_length = 3;
  EXPECT_TRUE(steiner_tree_violations(g, wrong_len).empty());
}

}  // namespace
}  // namespace rectdp
