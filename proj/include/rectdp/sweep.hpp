#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rectdp/geometry.hpp"
#include "rectdp/states.hpp"

namespace rectdp {

// One outgoing transition of a state: the successor key, the added length and
// how many copies of the segment it uses.
struct Successor {
  StateKey key = 0;
  Length cost = 0;
  std::uint8_t mult = 0;
};

inline constexpr int kMaxSuccessors = 3;

// Writes the valid successors of `state` across `event` into `out` and
// returns how many were written. Must be pure: it is called concurrently.
using ExpandFn = std::function<int(StateKey state, const EdgeEvent& event,
                                   std::span<Successor, kMaxSuccessors> out)>;
// Final-layer filter.
using AcceptFn = std::function<bool(StateKey state)>;

struct SweepOptions {
  // Keep per-layer back pointers so the optimum can be reconstructed. When
  // off only two layers are alive at any time.
  bool trace = true;
  int threads = 1;
};

// Options shared by the tour and tree solvers.
struct SolveOptions {
  bool trace = true;
  int threads = 1;
  // Run every produced state through the validating canonicalizer (slow).
  bool validate_states = false;
  // Tree solver only: adjacent terminals on a row are always joined.
  bool force_adjacent_terminals = false;
  std::size_t vertex_limit = HananGrid::kDefaultVertexLimit;
};

struct SweepStats {
  std::size_t layer_count = 0;
  std::size_t max_layer_size = 0;
  std::size_t total_expansions = 0;  // successors produced over all layers
  double wall_ms = 0.0;
};

// A segment of the solution and its multiplicity (1 or 2).
struct EdgeUse {
  EdgeEvent event;
  int mult = 0;

  friend bool operator==(const EdgeUse&, const EdgeUse&) = default;
};

// Back pointers of every layer. Entry k of layer l (l >= 1) packs the index of
// its predecessor in layer l - 1 and the multiplicity of the transition.
class SweepTrace {
 public:
  const std::vector<EdgeEvent>& events() const { return events_; }
  StateKey initial() const { return initial_; }
  std::size_t layer_count() const { return layer_sizes_.size(); }
  std::size_t layer_size(std::size_t layer) const { return layer_sizes_[layer]; }
  const std::vector<StateKey>& final_keys() const { return final_keys_; }
  const std::vector<Length>& final_costs() const { return final_costs_; }
  std::size_t memory_bytes() const;

 private:
  friend class SweepRunner;
  friend std::vector<EdgeUse> reconstruct(const SweepTrace&, StateKey);

  std::vector<EdgeEvent> events_;
  StateKey initial_ = 0;
  std::vector<std::size_t> layer_sizes_;
  std::vector<std::vector<std::uint32_t>> back_;  // back_[l - 1] for layer l
  std::vector<StateKey> final_keys_;
  std::vector<Length> final_costs_;
};

struct SweepResult {
  Length best_cost = 0;
  StateKey final_state = 0;
  SweepStats stats;
  std::optional<SweepTrace> trace;
};

// Layered shortest path over the events in order. Each layer keeps the
// cheapest cost per state; equal costs are resolved towards the smaller
// predecessor key, then the smaller multiplicity, so the tables do not depend
// on expansion order or thread count. Throws InfeasibleError when a layer
// empties or no final state is accepted.
SweepResult run_sweep(std::span<const EdgeEvent> events, StateKey initial,
                      const ExpandFn& expand, const AcceptFn& accept,
                      const SweepOptions& options = {});

// Follows back pointers from `final_state` in the last layer. Events taken
// with multiplicity 0 are omitted.
std::vector<EdgeUse> reconstruct(const SweepTrace& trace, StateKey final_state);

}  // namespace rectdp
