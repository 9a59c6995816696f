#include "rectdp/sweep.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <limits>
#include <string>

#include <absl/container/flat_hash_map.h>

#include "rectdp/errors.hpp"

namespace rectdp {

namespace {

// Layers are split into a fixed number of hash shards. The shard count never
// depends on the thread count, which keeps layer order identical however many
// threads build it.
constexpr int kShards = 16;
constexpr std::uint32_t kMaxLayerSize = std::uint32_t{1} << 30;

inline int shard_of(StateKey key) {
  key ^= key >> 33;
  key *= 0xff51afd7ed558ccdULL;
  key ^= key >> 33;
  return static_cast<int>(key >> 60);
}

struct Candidate {
  StateKey key;
  Length cost;
  std::uint32_t pred;
  std::uint8_t mult;
};

struct Layer {
  std::vector<StateKey> keys;
  std::vector<Length> costs;
};

class Shard {
 public:
  void reset(std::size_t expected) {
    index_.clear();
    index_.reserve(expected);
    keys_.clear();
    costs_.clear();
    preds_.clear();
    mults_.clear();
  }

  void offer(StateKey key, Length cost, std::uint32_t pred, std::uint8_t mult,
             const std::vector<StateKey>& prev_keys) {
    auto [it, inserted] =
        index_.try_emplace(key, static_cast<std::uint32_t>(keys_.size()));
    if (inserted) {
      keys_.push_back(key);
      costs_.push_back(cost);
      preds_.push_back(pred);
      mults_.push_back(mult);
      return;
    }
    const std::uint32_t k = it->second;
    bool better = cost < costs_[k];
    if (!better && cost == costs_[k]) {
      const StateKey a = prev_keys[pred];
      const StateKey b = prev_keys[preds_[k]];
      better = a < b || (a == b && mult < mults_[k]);
    }
    if (better) {
      costs_[k] = cost;
      preds_[k] = pred;
      mults_[k] = mult;
    }
  }

  std::size_t size() const { return keys_.size(); }

  void append_to(Layer& layer, std::vector<std::uint32_t>* back) const {
    layer.keys.insert(layer.keys.end(), keys_.begin(), keys_.end());
    layer.costs.insert(layer.costs.end(), costs_.begin(), costs_.end());
    if (back != nullptr) {
      for (std::size_t k = 0; k < keys_.size(); ++k) {
        back->push_back((preds_[k] << 2) | mults_[k]);
      }
    }
  }

 private:
  absl::flat_hash_map<StateKey, std::uint32_t> index_;
  std::vector<StateKey> keys_;
  std::vector<Length> costs_;
  std::vector<std::uint32_t> preds_;
  std::vector<std::uint8_t> mults_;
};

}  // namespace

class SweepRunner {
 public:
  SweepRunner(std::span<const EdgeEvent> events, const ExpandFn& expand,
              const AcceptFn& accept, const SweepOptions& options)
      : events_(events), expand_(expand), accept_(accept), options_(options) {}

  SweepResult run(StateKey initial) {
    const auto start = std::chrono::steady_clock::now();
    SweepResult result;
    if (options_.trace) {
      result.trace.emplace();
      result.trace->events_.assign(events_.begin(), events_.end());
      result.trace->initial_ = initial;
      result.trace->layer_sizes_.push_back(1);
      result.trace->back_.reserve(events_.size());
    }

    Layer current;
    current.keys.push_back(initial);
    current.costs.push_back(0);
    result.stats.max_layer_size = 1;

    for (const EdgeEvent& event : events_) {
      std::vector<std::uint32_t>* back = nullptr;
      if (result.trace) back = &result.trace->back_.emplace_back();
      Layer next = step(current, event, back, result.stats);
      if (next.keys.empty()) {
        throw InfeasibleError("layer after " + to_string(event) +
                              " has no feasible state");
      }
      result.stats.max_layer_size =
          std::max(result.stats.max_layer_size, next.keys.size());
      if (result.trace) result.trace->layer_sizes_.push_back(next.keys.size());
      current = std::move(next);
    }
    result.stats.layer_count = events_.size() + 1;

    bool found = false;
    for (std::size_t k = 0; k < current.keys.size(); ++k) {
      if (!accept_(current.keys[k])) continue;
      const Length c = current.costs[k];
      if (!found || c < result.best_cost ||
          (c == result.best_cost && current.keys[k] < result.final_state)) {
        result.best_cost = c;
        result.final_state = current.keys[k];
        found = true;
      }
    }
    if (!found) throw InfeasibleError("no final state satisfies the acceptance test");

    if (result.trace) {
      result.trace->final_keys_ = std::move(current.keys);
      result.trace->final_costs_ = std::move(current.costs);
    }
    result.stats.wall_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return result;
  }

 private:
  Layer step(const Layer& current, const EdgeEvent& event,
             std::vector<std::uint32_t>* back, SweepStats& stats) {
    const std::size_t n = current.keys.size();
    const std::size_t expected = (n * 2) / kShards + 16;
    for (Shard& shard : shards_) shard.reset(expected);

    if (options_.threads <= 1) {
      std::array<Successor, kMaxSuccessors> out{};
      for (std::size_t p = 0; p < n; ++p) {
        const int count = expand_(current.keys[p], event, out);
        stats.total_expansions += static_cast<std::size_t>(count);
        for (int i = 0; i < count; ++i) {
          shards_[shard_of(out[i].key)].offer(
              out[i].key, current.costs[p] + out[i].cost,
              static_cast<std::uint32_t>(p), out[i].mult, current.keys);
        }
      }
    } else {
      step_parallel(current, event, stats);
    }

    std::size_t total = 0;
    for (const Shard& shard : shards_) total += shard.size();
    if (total >= kMaxLayerSize) throw GuardExceeded("layer too large");
    Layer next;
    next.keys.reserve(total);
    next.costs.reserve(total);
    if (back != nullptr) back->reserve(total);
    for (const Shard& shard : shards_) shard.append_to(next, back);
    return next;
  }

  // Expansion in contiguous chunks, then one merge task per shard that walks
  // the chunks in order; insertion order matches the sequential path.
  void step_parallel(const Layer& current, const EdgeEvent& event,
                     SweepStats& stats) {
    const std::size_t n = current.keys.size();
    const int threads = options_.threads;
    const std::size_t chunks =
        std::min<std::size_t>(n, static_cast<std::size_t>(threads) * 4);
    const std::size_t chunk_size = (n + chunks - 1) / chunks;
    std::vector<std::array<std::vector<Candidate>, kShards>> buffers(chunks);
    std::vector<std::size_t> produced(chunks, 0);
    std::exception_ptr failure;

#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::size_t c = 0; c < chunks; ++c) {
      try {
        std::array<Successor, kMaxSuccessors> out{};
        const std::size_t lo = c * chunk_size;
        const std::size_t hi = std::min(n, lo + chunk_size);
        for (std::size_t p = lo; p < hi; ++p) {
          const int count = expand_(current.keys[p], event, out);
          produced[c] += static_cast<std::size_t>(count);
          for (int i = 0; i < count; ++i) {
            buffers[c][shard_of(out[i].key)].push_back(
                {out[i].key, current.costs[p] + out[i].cost,
                 static_cast<std::uint32_t>(p), out[i].mult});
          }
        }
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (std::size_t count : produced) stats.total_expansions += count;

#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (int s = 0; s < kShards; ++s) {
      for (std::size_t c = 0; c < chunks; ++c) {
        for (const Candidate& cand : buffers[c][s]) {
          shards_[s].offer(cand.key, cand.cost, cand.pred, cand.mult,
                           current.keys);
        }
      }
    }
  }

  std::span<const EdgeEvent> events_;
  const ExpandFn& expand_;
  const AcceptFn& accept_;
  SweepOptions options_;
  std::array<Shard, kShards> shards_;
};

SweepResult run_sweep(std::span<const EdgeEvent> events, StateKey initial,
                      const ExpandFn& expand, const AcceptFn& accept,
                      const SweepOptions& options) {
  SweepRunner runner(events, expand, accept, options);
  return runner.run(initial);
}

std::size_t SweepTrace::memory_bytes() const {
  std::size_t bytes = 0;
  for (const auto& layer : back_) bytes += layer.capacity() * sizeof(std::uint32_t);
  return bytes;
}

std::vector<EdgeUse> reconstruct(const SweepTrace& trace, StateKey final_state) {
  const auto it =
      std::find(trace.final_keys_.begin(), trace.final_keys_.end(), final_state);
  if (it == trace.final_keys_.end()) {
    throw InfeasibleError("final state is not in the last layer");
  }
  std::size_t index = static_cast<std::size_t>(it - trace.final_keys_.begin());
  std::vector<EdgeUse> uses;
  for (std::size_t l = trace.back_.size(); l > 0; --l) {
    const auto& back = trace.back_[l - 1];
    if (index >= back.size()) throw InfeasibleError("corrupt sweep trace");
    const std::uint32_t entry = back[index];
    const int mult = static_cast<int>(entry & 3u);
    if (mult > 0) uses.push_back({trace.events_[l - 1], mult});
    index = entry >> 2;
  }
  if (index != 0) throw InfeasibleError("corrupt sweep trace");
  std::reverse(uses.begin(), uses.end());
  return uses;
}

}  // namespace rectdp
