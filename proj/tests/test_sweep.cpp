#include <gtest/gtest.h>

#include <vector>

#include "rectdp/errors.hpp"
#include "rectdp/sweep.hpp"
#include "rectdp/tsp.hpp"
#include "support.hpp"

namespace rectdp {
namespace {

std::vector<EdgeEvent> toy_events(int n) {
  std::vector<EdgeEvent> events;
  for (int k = 0; k < n; ++k) events.push_back({EdgeKind::Horizontal, 0, k, k + 1});
  return events;
}

TEST(RunSweep, IdentityTransition) {
  const auto events = toy_events(5);
  const ExpandFn expand = [](StateKey s, const EdgeEvent&, std::span<Successor, 3> out) {
    out[0] = {s, 0, 0};
    return 1;
  };
  const SweepResult r = run_sweep(events, 42, expand, [](StateKey) { return true; });
  EXPECT_EQ(r.best_cost, 0);
  EXPECT_EQ(r.final_state, 42u);
  EXPECT_EQ(r.stats.layer_count, 6u);
  ASSERT_TRUE(r.trace);
  EXPECT_EQ(r.trace->layer_count(), 6u);
  EXPECT_EQ(r.trace->layer_size(0), 1u);
  EXPECT_TRUE(reconstruct(*r.trace, r.final_state).empty());
}

// Counter capped at 3: each event may add its length (state + 1) or not; the
// accepted final state is 3, so the answer picks the three cheapest events.
TEST(RunSweep, ChoosesCheapestSubset) {
  const auto events = toy_events(6);  // lengths 1..6
  const ExpandFn expand = [](StateKey s, const EdgeEvent& e, std::span<Successor, 3> out) {
    out[0] = {s, 0, 0};
    if (s == 3) return 1;
    out[1] = {s + 1, e.length, 1};
    return 2;
  };
  for (bool trace : {true, false}) {
    for (int threads : {1, 3}) {
      const SweepResult r = run_sweep(events, 0, expand,
                                      [](StateKey s) { return s == 3; }, {trace, threads});
      EXPECT_EQ(r.best_cost, 6);
      EXPECT_EQ(r.trace.has_value(), trace);
      if (trace) {
        const auto uses = reconstruct(*r.trace, r.final_state);
        ASSERT_EQ(uses.size(), 3u);
        EXPECT_EQ(uses[0].event.col, 0);
        EXPECT_EQ(uses[2].event.col, 2);
      }
    }
  }
}

// Two equal-cost paths into one state: the one through the smaller
// predecessor key wins.
TEST(RunSweep, TieBreakBySmallerPredecessor) {
  const std::vector<EdgeEvent> events{{EdgeKind::Horizontal, 0, 0, 1},
                                      {EdgeKind::Horizontal, 0, 1, 1}};
  const ExpandFn expand = [](StateKey s, const EdgeEvent& e, std::span<Successor, 3> out) {
    if (e.col == 0) {
      out[0] = {7, 5, 1};
      out[1] = {9, 5, 2};
      return 2;
    }
    out[0] = {100, 1, static_cast<std::uint8_t>(s == 7 ? 2 : 1)};
    return 1;
  };
  for (int threads : {1, 2}) {
    const SweepResult r =
        run_sweep(events, 0, expand, [](StateKey) { return true; }, {true, threads});
    EXPECT_EQ(r.best_cost, 6);
    const auto uses = reconstruct(*r.trace, r.final_state);
    ASSERT_EQ(uses.size(), 2u);
    EXPECT_EQ(uses[0].mult, 1);  // via state 7
    EXPECT_EQ(uses[1].mult, 2);
  }
}

TEST(RunSweep, EmptyLayerIsInfeasible) {
  const auto events = toy_events(3);
  const ExpandFn expand = [](StateKey, const EdgeEvent& e, std::span<Successor, 3> out) {
    if (e.col == 1) return 0;
    out[0] = {1, 1, 1};
    return 1;
  };
  EXPECT_THROW(run_sweep(events, 0, expand, [](StateKey) { return true; }),
               InfeasibleError);
}

TEST(RunSweep, NothingAcceptedIsInfeasible) {
  const auto events = toy_events(2);
  const ExpandFn expand = [](StateKey s, const EdgeEvent&, std::span<Successor, 3> out) {
    out[0] = {s, 0, 0};
    return 1;
  };
  EXPECT_THROW(run_sweep(events, 0, expand, [](StateKey) { return false; }),
               InfeasibleError);
}

TEST(RunSweep, ExceptionsFromWorkersPropagate) {
  const auto events = toy_events(2);
  const ExpandFn expand = [](StateKey s, const EdgeEvent& e, std::span<Successor, 3> out) {
    if (e.col == 1 && s == 5) throw StateError(StateError::Kind::BadShape, "boom");
    for (int k = 0; k < 3; ++k) out[k] = {s * 3 + static_cast<StateKey>(k), 1, 0};
    return 3;
  };
  EXPECT_THROW(run_sweep(events, 1, expand, [](StateKey) { return true; }, {true, 4}),
               StateError);
}

TEST(RunSweep, TwoPointTour) {
  const Instance inst = testing::points({{0, 0}, {4, 0}});
  const HananGrid grid = build_grid(inst);
  const auto events = edge_schedule(grid);
  const ExpandFn expand = [&](StateKey s, const EdgeEvent& e, std::span<Successor, 3> out) {
    return expand_tsp(s, e, grid, out);
  };
  const SweepResult r = run_sweep(events, encode(TspState::empty(1)), expand,
                                  [&](StateKey s) { return accept_tsp(s, grid); });
  EXPECT_EQ(r.best_cost, 8);
  const auto uses = reconstruct(*r.trace, r.final_state);
  ASSERT_EQ(uses.size(), 1u);
  EXPECT_EQ(uses[0].event, (EdgeEvent{EdgeKind::Horizontal, 0, 0, 4}));
  EXPECT_EQ(uses[0].mult, 2);
}

TEST(RunSweep, SingleEventAtMostOneEdge) {
  const std::vector<EdgeEvent> events{{EdgeKind::Vertical, 0, 0, 3}};
  const ExpandFn expand = [](StateKey s, const EdgeEvent& e, std::span<Successor, 3> out) {
    out[0] = {s, 0, 0};
    out[1] = {s + 1, e.length, 1};
    return 2;
  };
  const SweepResult r = run_sweep(events, 0, expand, [](StateKey s) { return s == 1; });
  EXPECT_EQ(r.best_cost, 3);
  EXPECT_EQ(reconstruct(*r.trace, r.final_state).size(), 1u);
  EXPECT_THROW(reconstruct(*r.trace, 12345), InfeasibleError);
}

// Layer tables do not depend on the thread count.
TEST(RunSweep, ThreadCountGivesIdenticalTables) {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = gen_instance(12, 4, 60, 60, rng.next());
    const HananGrid grid = build_grid(inst);
    const auto events = edge_schedule(grid);
    const ExpandFn expand = [&](StateKey s, const EdgeEvent& e, std::span<Successor, 3> out) {
      return expand_tsp(s, e, grid, out);
    };
    const AcceptFn accept = [&](StateKey s) { return accept_tsp(s, grid); };
    const SweepResult a = run_sweep(events, 0, expand, accept, {true, 1});
    for (int threads : {2, 4}) {
      const SweepResult b = run_sweep(events, 0, expand, accept, {true, threads});
      ASSERT_EQ(a.best_cost, b.best_cost);
      ASSERT_EQ(a.final_state, b.final_state);
      ASSERT_EQ(a.trace->final_keys(), b.trace->final_keys());
      ASSERT_EQ(a.trace->final_costs(), b.trace->final_costs());
      ASSERT_EQ(reconstruct(*a.trace, a.final_state), reconstruct(*b.trace, b.final_state));
      ASSERT_EQ(a.stats.total_expansions, b.stats.total_expansions);
    }
  }
}

}  // namespace
}  // namespace rectdp
