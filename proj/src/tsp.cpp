#include "rectdp/tsp.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <tuple>

#include "grid_graph.hpp"
#include "rectdp/errors.hpp"

namespace rectdp {

namespace {

using Row = std::array<std::uint8_t, kMaxRows>;

constexpr std::uint8_t kZero = static_cast<std::uint8_t>(Parity::Zero);
constexpr std::uint8_t kOdd = static_cast<std::uint8_t>(Parity::Odd);
constexpr std::uint8_t kEven = static_cast<std::uint8_t>(Parity::Even);
// Label for a component created by the transition; decoded labels are <= 16.
constexpr std::uint8_t kFreshLabel = 31;

inline std::uint8_t advance_tag(std::uint8_t p, int mult) {
  return static_cast<std::uint8_t>(advance(static_cast<Parity>(p), mult));
}

// Joins the components of rows a and b; unlabeled rows join or form a fresh
// component.
inline void merge_rows(int rows, Row& comp, int a, int b) {
  const std::uint8_t ca = comp[a];
  const std::uint8_t cb = comp[b];
  if (ca == kNoComponent && cb == kNoComponent) {
    comp[a] = comp[b] = kFreshLabel;
  } else if (ca == kNoComponent) {
    comp[a] = cb;
  } else if (cb == kNoComponent) {
    comp[b] = ca;
  } else if (ca != cb) {
    for (int r = 0; r < rows; ++r) {
      if (comp[r] == cb) comp[r] = ca;
    }
  }
}

inline bool sole_member(int rows, const Row& comp, int row) {
  for (int r = 0; r < rows; ++r) {
    if (r != row && comp[r] == comp[row]) return false;
  }
  return true;
}

int expand_vertical(StateKey key, int rows, const Row& par, const Row& comp,
                    const EdgeEvent& e, std::span<Successor, kMaxSuccessors> out) {
  out[0] = {key, 0, 0};
  for (int mult = 1; mult <= 2; ++mult) {
    Row p = par;
    Row c = comp;
    p[e.row] = advance_tag(p[e.row], mult);
    p[e.row + 1] = advance_tag(p[e.row + 1], mult);
    merge_rows(rows, c, e.row, e.row + 1);
    out[mult] = {detail::pack(rows, p.data(), c.data()), mult * e.length,
                 static_cast<std::uint8_t>(mult)};
  }
  return 3;
}

int expand_horizontal(StateKey key, int rows, const Row& par, const Row& comp,
                      const EdgeEvent& e, const HananGrid& grid,
                      std::span<Successor, kMaxSuccessors> out) {
  const int i = e.row;
  const bool terminal = grid.is_terminal(i, e.col);
  const std::uint8_t p = par[i];
  int n = 0;

  // Zero edges: the departing vertex keeps its degree, which must be even,
  // and positive for a terminal. It must not be the last frontier vertex of
  // its component, since that component could never reach the last column.
  if ((p == kZero && !terminal) ||
      (p == kEven && !sole_member(rows, comp, i))) {
    Row np = par;
    Row nc = comp;
    np[i] = kZero;
    nc[i] = kNoComponent;
    out[n++] = {detail::pack(rows, np.data(), nc.data()), 0, 0};
  }
  // One edge: only an odd departing vertex ends even; the new vertex is odd
  // and in the same component, so the key is unchanged.
  if (p == kOdd) out[n++] = {key, e.length, 1};
  // Two edges: from an even vertex the state is unchanged. From an untouched
  // vertex the pair would be its only edges, which is a useless back-and-forth
  // unless the vertex is a terminal; then the new vertex is a self-loop.
  if (p == kEven) {
    out[n++] = {key, 2 * e.length, 2};
  } else if (p == kZero && terminal) {
    Row np = par;
    Row nc = comp;
    np[i] = kEven;
    nc[i] = kFreshLabel;
    out[n++] = {detail::pack(rows, np.data(), nc.data()), 2 * e.length, 2};
  }
  return n;
}

}  // namespace

int expand_tsp(StateKey key, const EdgeEvent& event, const HananGrid& grid,
               std::span<Successor, kMaxSuccessors> out) {
  const int rows = grid.rows();
  Row par{};
  Row comp{};
  detail::unpack(key, rows, par.data(), comp.data());
  if (event.kind == EdgeKind::Vertical) {
    return expand_vertical(key, rows, par, comp, event, out);
  }
  return expand_horizontal(key, rows, par, comp, event, grid, out);
}

bool accept_tsp(StateKey key, const HananGrid& grid) {
  const int rows = grid.rows();
  Row par{};
  Row comp{};
  detail::unpack(key, rows, par.data(), comp.data());
  const int last = grid.cols() - 1;
  for (int r = 0; r < rows; ++r) {
    if (par[r] == kOdd) return false;
    if (comp[r] != kNoComponent && comp[r] != 1) return false;
    if (grid.is_terminal(r, last) && par[r] != kEven) return false;
  }
  return true;
}

std::vector<TspTransition> tsp_transition(const TspState& state,
                                          const EdgeEvent& event,
                                          const HananGrid& grid) {
  std::array<Successor, kMaxSuccessors> out{};
  const int n = expand_tsp(encode(state), event, grid, out);
  std::vector<TspTransition> result;
  for (int k = 0; k < n; ++k) {
    result.push_back({decode_tsp(out[k].key, state.rows), out[k].cost, out[k].mult});
  }
  return result;
}

namespace {

void check_state(StateKey key, int rows) {
  const TspState s = decode_tsp(key, rows);
  const TspState c = canonicalize(s);
  if (!(c == s) || encode(c) != key) {
    throw StateError(StateError::Kind::BadShape,
                     "state " + to_string(s) + " is not canonical");
  }
}

}  // namespace

TspSolution solve_tsp(const Instance& instance, const SolveOptions& options) {
  TspSolution solution;
  solution.grid = build_grid(instance, options.vertex_limit);
  const HananGrid& grid = solution.grid;
  if (instance.points.size() == 1) {
    solution.stats.layer_count = 1;
    solution.stats.max_layer_size = 1;
    if (options.trace) {
      solution.subgraph = TourSubgraph{};
      solution.tour = Tour{{GridVertex{0, 0}}};
    }
    return solution;
  }
  if (grid.rows() > kMaxRows) {
    throw GuardExceeded("tour solver supports at most " +
                        std::to_string(kMaxRows) + " rows, instance has " +
                        std::to_string(grid.rows()));
  }

  const std::vector<EdgeEvent> events = edge_schedule(grid);
  const int rows = grid.rows();
  ExpandFn expand;
  if (options.validate_states) {
    expand = [&grid, rows](StateKey key, const EdgeEvent& e,
                           std::span<Successor, kMaxSuccessors> out) {
      const int n = expand_tsp(key, e, grid, out);
      for (int k = 0; k < n; ++k) check_state(out[k].key, rows);
      return n;
    };
  } else {
    expand = [&grid](StateKey key, const EdgeEvent& e,
                     std::span<Successor, kMaxSuccessors> out) {
      return expand_tsp(key, e, grid, out);
    };
  }
  const AcceptFn accept = [&grid](StateKey key) { return accept_tsp(key, grid); };

  SweepResult sweep = run_sweep(events, encode(TspState::empty(rows)), expand,
                                accept, {options.trace, options.threads});
  solution.length = sweep.best_cost;
  solution.stats = sweep.stats;
  if (!sweep.trace) return solution;

  TourSubgraph subgraph;
  subgraph.edges = reconstruct(*sweep.trace, sweep.final_state);
  for (const EdgeUse& use : subgraph.edges) {
    subgraph.total_length += use.mult * use.event.length;
  }
  sweep.trace.reset();
  const auto problems = tour_subgraph_violations(grid, subgraph);
  if (!problems.empty() || subgraph.total_length != solution.length) {
    throw InfeasibleError("reconstructed tour subgraph is invalid: " +
                          (problems.empty() ? std::string("length mismatch")
                                            : problems.front()));
  }
  solution.tour = orient_tour(grid, subgraph);
  solution.subgraph = std::move(subgraph);
  return solution;
}

Tour orient_tour(const HananGrid& grid, const TourSubgraph& subgraph) {
  const GridVertex start = detail::anchor_terminal(grid);
  if (subgraph.edges.empty()) {
    if (grid.terminals().size() > 1) {
      throw InfeasibleError("NotEulerian: empty subgraph with several terminals");
    }
    return Tour{{start}};
  }

  struct Arc {
    std::size_t to;
    std::size_t edge;
  };
  const std::size_t nv =
      static_cast<std::size_t>(grid.rows()) * static_cast<std::size_t>(grid.cols());
  std::vector<std::vector<Arc>> adj(nv);
  std::size_t edge_count = 0;
  std::vector<EdgeUse> edges = subgraph.edges;
  std::sort(edges.begin(), edges.end(), [](const EdgeUse& a, const EdgeUse& b) {
    return std::tie(a.event.col, a.event.row, a.event.kind) <
           std::tie(b.event.col, b.event.row, b.event.kind);
  });
  for (const EdgeUse& use : edges) {
    if (!detail::on_grid(grid, use.event)) {
      throw InfeasibleError("NotEulerian: edge " + to_string(use.event) +
                            " is not on the grid");
    }
    const std::size_t a = detail::vertex_id(grid, use.event.from());
    const std::size_t b = detail::vertex_id(grid, use.event.to());
    for (int k = 0; k < use.mult; ++k) {
      adj[a].push_back({b, edge_count});
      adj[b].push_back({a, edge_count});
      ++edge_count;
    }
  }
  for (const auto& arcs : adj) {
    if (arcs.size() % 2 != 0) throw InfeasibleError("NotEulerian: odd vertex degree");
  }

  std::vector<bool> used(edge_count, false);
  std::vector<std::size_t> next(nv, 0);
  std::vector<std::size_t> stack{detail::vertex_id(grid, start)};
  std::vector<std::size_t> circuit;
  circuit.reserve(edge_count + 1);
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    auto& i = next[u];
    while (i < adj[u].size() && used[adj[u][i].edge]) ++i;
    if (i == adj[u].size()) {
      circuit.push_back(u);
      stack.pop_back();
      continue;
    }
    used[adj[u][i].edge] = true;
    stack.push_back(adj[u][i].to);
  }
  if (circuit.size() != edge_count + 1) {
    throw InfeasibleError("NotEulerian: subgraph is disconnected from the start");
  }
  std::reverse(circuit.begin(), circuit.end());
  circuit.pop_back();

  Tour tour;
  tour.vertices.reserve(circuit.size());
  const std::size_t cols = static_cast<std::size_t>(grid.cols());
  for (std::size_t id : circuit) {
    tour.vertices.push_back({static_cast<int>(id / cols), static_cast<int>(id % cols)});
  }
  return tour;
}

Length tour_length(const HananGrid& grid, const Tour& tour) {
  Length total = 0;
  const std::size_t n = tour.vertices.size();
  for (std::size_t k = 0; n > 1 && k < n; ++k) {
    total += l1(grid.point_at(tour.vertices[k]),
                grid.point_at(tour.vertices[(k + 1) % n]));
  }
  return total;
}

std::vector<Point> tour_points(const HananGrid& grid, const Tour& tour) {
  std::vector<Point> out;
  out.reserve(tour.vertices.size());
  for (const GridVertex& v : tour.vertices) out.push_back(grid.point_at(v));
  return out;
}

namespace {

using SegmentKey = std::tuple<EdgeKind, int, int>;

SegmentKey segment_key(const EdgeEvent& e) { return {e.kind, e.row, e.col}; }

}  // namespace

std::vector<std::string> tour_subgraph_violations(const HananGrid& grid,
                                                  const TourSubgraph& subgraph) {
  std::vector<std::string> problems;
  const std::size_t nv =
      static_cast<std::size_t>(grid.rows()) * static_cast<std::size_t>(grid.cols());
  std::vector<int> degree(nv, 0);
  std::map<SegmentKey, int> multiplicity;
  detail::UnionFind uf(nv);
  Length total = 0;
  for (const EdgeUse& use : subgraph.edges) {
    if (!detail::on_grid(grid, use.event)) {
      problems.push_back("edge " + to_string(use.event) + " is not on the grid");
      continue;
    }
    if (use.mult < 1 || use.mult > 2) {
      problems.push_back("edge " + to_string(use.event) + " has multiplicity " +
                         std::to_string(use.mult));
    }
    int& m = multiplicity[segment_key(use.event)];
    m += use.mult;
    if (m > 2) {
      problems.push_back("segment " + to_string(use.event) + " used more than twice");
    }
    const std::size_t a = detail::vertex_id(grid, use.event.from());
    const std::size_t b = detail::vertex_id(grid, use.event.to());
    degree[a] += use.mult;
    degree[b] += use.mult;
    uf.unite(a, b);
    total += use.mult * detail::segment_length(grid, use.event);
  }
  if (total != subgraph.total_length) {
    problems.push_back("edge lengths sum to " + std::to_string(total) +
                       ", recorded total is " + std::to_string(subgraph.total_length));
  }
  const auto terminals = grid.terminals();
  if (terminals.size() > 1) {
    for (const GridVertex& t : terminals) {
      if (degree[detail::vertex_id(grid, t)] == 0) {
        problems.push_back("terminal at row " + std::to_string(t.row + 1) +
                           ", col " + std::to_string(t.col + 1) + " is not covered");
      }
    }
  }
  std::size_t root = nv;
  for (std::size_t v = 0; v < nv; ++v) {
    if (degree[v] == 0) continue;
    if (degree[v] % 2 != 0) {
      problems.push_back("vertex " + std::to_string(v) + " has odd degree");
    }
    if (root == nv) root = uf.find(v);
    if (uf.find(v) != root) {
      problems.push_back("subgraph is disconnected");
      break;
    }
  }
  return problems;
}

std::vector<std::string> tour_violations(const HananGrid& grid,
                                         const TourSubgraph& subgraph,
                                         const Tour& tour) {
  std::vector<std::string> problems;
  std::map<SegmentKey, int> expected;
  for (const EdgeUse& use : subgraph.edges) expected[segment_key(use.event)] += use.mult;

  std::map<SegmentKey, int> walked;
  const std::size_t n = tour.vertices.size();
  if (n > 1) {
    for (std::size_t k = 0; k < n; ++k) {
      const GridVertex a = tour.vertices[k];
      const GridVertex b = tour.vertices[(k + 1) % n];
      const int dr = b.row - a.row;
      const int dc = b.col - a.col;
      if (std::abs(dr) + std::abs(dc) != 1) {
        problems.push_back("tour step " + std::to_string(k) + " is not a grid edge");
        continue;
      }
      const GridVertex lo = std::min(a, b);
      const EdgeKind kind = dr != 0 ? EdgeKind::Vertical : EdgeKind::Horizontal;
      ++walked[{kind, lo.row, lo.col}];
    }
  }
  if (walked != expected) problems.push_back("tour does not use every edge copy exactly once");

  std::vector<bool> visited(static_cast<std::size_t>(grid.rows() * grid.cols()), false);
  for (const GridVertex& v : tour.vertices) visited[detail::vertex_id(grid, v)] = true;
  for (const GridVertex& t : grid.terminals()) {
    if (!visited[detail::vertex_id(grid, t)]) {
      problems.push_back("tour misses a terminal");
      break;
    }
  }
  return problems;
}

}  // namespace rectdp
