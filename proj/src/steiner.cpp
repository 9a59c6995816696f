#include "rectdp/steiner.hpp"

#include <array>
#include <set>
#include <tuple>

#include "grid_graph.hpp"
#include "rectdp/errors.hpp"

namespace rectdp {

namespace {

using Row = std::array<std::uint8_t, kMaxRows>;

constexpr std::uint8_t kFreshLabel = 31;

inline StateKey pack_tree(int rows, const Row& comp) {
  Row tag{};
  for (int r = 0; r < rows; ++r) tag[r] = comp[r] != kNoComponent ? 1 : 0;
  return detail::pack(rows, tag.data(), comp.data());
}

inline bool sole_member(int rows, const Row& comp, int row) {
  for (int r = 0; r < rows; ++r) {
    if (r != row && comp[r] == comp[row]) return false;
  }
  return true;
}

}  // namespace

int expand_steiner(StateKey key, const EdgeEvent& e, const HananGrid& grid,
                   bool force_adjacent_terminals,
                   std::span<Successor, kMaxSuccessors> out) {
  const int rows = grid.rows();
  Row tag{};
  Row comp{};
  detail::unpack(key, rows, tag.data(), comp.data());
  const int i = e.row;
  int n = 0;

  if (e.kind == EdgeKind::Vertical) {
    out[n++] = {key, 0, 0};
    const std::uint8_t a = comp[i];
    const std::uint8_t b = comp[i + 1];
    // Joining two rows of one component closes a cycle.
    if (a != kNoComponent && a == b) return n;
    if (a == kNoComponent && b == kNoComponent) {
      comp[i] = comp[i + 1] = kFreshLabel;
    } else if (a == kNoComponent) {
      comp[i] = b;
    } else if (b == kNoComponent) {
      comp[i + 1] = a;
    } else {
      for (int r = 0; r < rows; ++r) {
        if (comp[r] == b) comp[r] = a;
      }
    }
    out[n++] = {pack_tree(rows, comp), e.length, 1};
    return n;
  }

  const bool terminal = grid.is_terminal(i, e.col);
  const bool forced = force_adjacent_terminals && terminal &&
                      grid.is_terminal(i, e.col + 1);
  const std::uint8_t c = comp[i];

  // No edge: a terminal must already be attached, and an attached vertex
  // must not be the last frontier vertex of its component.
  if (!forced && !(terminal && c == kNoComponent) &&
      !(c != kNoComponent && sole_member(rows, comp, i))) {
    Row nc = comp;
    nc[i] = kNoComponent;
    out[n++] = {pack_tree(rows, nc), 0, 0};
  }
  // One edge: an unattached non-terminal would be left as a pendant vertex.
  if (c != kNoComponent) {
    out[n++] = {key, e.length, 1};
  } else if (terminal) {
    Row nc = comp;
    nc[i] = kFreshLabel;
    out[n++] = {pack_tree(rows, nc), e.length, 1};
  }
  return n;
}

bool accept_steiner(StateKey key, const HananGrid& grid) {
  const int rows = grid.rows();
  Row tag{};
  Row comp{};
  detail::unpack(key, rows, tag.data(), comp.data());
  const int last = grid.cols() - 1;
  for (int r = 0; r < rows; ++r) {
    if (comp[r] != kNoComponent && comp[r] != 1) return false;
    if (grid.is_terminal(r, last) && comp[r] == kNoComponent) return false;
  }
  return true;
}

std::vector<SteinerTransition> steiner_transition(const SteinerState& state,
                                                  const EdgeEvent& event,
                                                  const HananGrid& grid,
                                                  bool force_adjacent_terminals) {
  std::array<Successor, kMaxSuccessors> out{};
  const int n =
      expand_steiner(encode(state), event, grid, force_adjacent_terminals, out);
  std::vector<SteinerTransition> result;
  for (int k = 0; k < n; ++k) {
    result.push_back(
        {decode_steiner(out[k].key, state.rows), out[k].cost, out[k].mult});
  }
  return result;
}

SteinerSolution solve_steiner(const Instance& instance, const SolveOptions& options) {
  SteinerSolution solution;
  solution.grid = build_grid(instance, options.vertex_limit);
  const HananGrid& grid = solution.grid;
  if (instance.points.size() == 1) {
    solution.stats.layer_count = 1;
    solution.stats.max_layer_size = 1;
    if (options.trace) solution.tree = SteinerTree{};
    return solution;
  }
  if (grid.rows() > kMaxRows) {
    throw GuardExceeded("tree solver supports at most " +
                        std::to_string(kMaxRows) + " rows, instance has " +
                        std::to_string(grid.rows()));
  }

  const std::vector<EdgeEvent> events = edge_schedule(grid);
  const int rows = grid.rows();
  const bool force = options.force_adjacent_terminals;
  ExpandFn expand;
  if (options.validate_states) {
    expand = [&grid, rows, force](StateKey key, const EdgeEvent& e,
                                  std::span<Successor, kMaxSuccessors> out) {
      const int n = expand_steiner(key, e, grid, force, out);
      for (int k = 0; k < n; ++k) {
        const SteinerState s = decode_steiner(out[k].key, rows);
        if (!(canonicalize(s) == s) || encode(s) != out[k].key) {
          throw StateError(StateError::Kind::BadShape,
                           "state " + to_string(s) + " is not canonical");
        }
      }
      return n;
    };
  } else {
    expand = [&grid, force](StateKey key, const EdgeEvent& e,
                            std::span<Successor, kMaxSuccessors> out) {
      return expand_steiner(key, e, grid, force, out);
    };
  }
  const AcceptFn accept = [&grid](StateKey key) { return accept_steiner(key, grid); };

  SweepResult sweep = run_sweep(events, encode(SteinerState::empty(rows)), expand,
                                accept, {options.trace, options.threads});
  solution.length = sweep.best_cost;
  solution.stats = sweep.stats;
  if (!sweep.trace) return solution;

  SteinerTree tree;
  tree.edges = reconstruct(*sweep.trace, sweep.final_state);
  for (const EdgeUse& use : tree.edges) tree.total_length += use.event.length;
  sweep.trace.reset();
  const auto problems = steiner_tree_violations(grid, tree);
  if (!problems.empty() || tree.total_length != solution.length) {
    throw InfeasibleError("reconstructed Steiner tree is invalid: " +
                          (problems.empty() ? std::string("length mismatch")
                                            : problems.front()));
  }
  solution.tree = std::move(tree);
  return solution;
}

std::vector<std::string> steiner_tree_violations(const HananGrid& grid,
                                                 const SteinerTree& tree) {
  std::vector<std::string> problems;
  const std::size_t nv =
      static_cast<std::size_t>(grid.rows()) * static_cast<std::size_t>(grid.cols());
  detail::UnionFind uf(nv);
  std::vector<bool> touched(nv, false);
  std::set<std::tuple<EdgeKind, int, int>> seen;
  Length total = 0;
  for (const EdgeUse& use : tree.edges) {
    if (!detail::on_grid(grid, use.event)) {
      problems.push_back("edge " + to_string(use.event) + " is not on the grid");
      continue;
    }
    if (use.mult != 1) {
      problems.push_back("edge " + to_string(use.event) + " has multiplicity " +
                         std::to_string(use.mult));
    }
    if (!seen.insert({use.event.kind, use.event.row, use.event.col}).second) {
      problems.push_back("edge " + to_string(use.event) + " listed twice");
      continue;
    }
    const std::size_t a = detail::vertex_id(grid, use.event.from());
    const std::size_t b = detail::vertex_id(grid, use.event.to());
    touched[a] = touched[b] = true;
    if (!uf.unite(a, b)) problems.push_back("edge set contains a cycle");
    total += detail::segment_length(grid, use.event);
  }
  if (total != tree.total_length) {
    problems.push_back("edge lengths sum to " + std::to_string(total) +
                       ", recorded total is " + std::to_string(tree.total_length));
  }
  const auto terminals = grid.terminals();
  if (terminals.size() > 1) {
    const std::size_t root = uf.find(detail::vertex_id(grid, terminals.front()));
    for (const GridVertex& t : terminals) {
      const std::size_t id = detail::vertex_id(grid, t);
      if (!touched[id] || uf.find(id) != root) {
        problems.push_back("terminals are not all connected");
        break;
      }
    }
    for (std::size_t v = 0; v < nv; ++v) {
      if (touched[v] && uf.find(v) != root) {
        problems.push_back("edge set is disconnected");
        break;
      }
    }
  }
  return problems;
}

}  // namespace rectdp
