#include "rectdp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "grid_graph.hpp"
#include "rectdp/errors.hpp"

namespace rectdp {

namespace {

constexpr Length kInf = std::numeric_limits<Length>::max() / 4;

struct Arc {
  std::size_t to;
  Length w;
};

std::vector<std::vector<Arc>> grid_adjacency(const HananGrid& grid) {
  const std::size_t nv = static_cast<std::size_t>(grid.rows()) *
                         static_cast<std::size_t>(grid.cols());
  std::vector<std::vector<Arc>> adj(nv);
  for (const EdgeEvent& e : edge_schedule(grid)) {
    const std::size_t a = detail::vertex_id(grid, e.from());
    const std::size_t b = detail::vertex_id(grid, e.to());
    adj[a].push_back({b, e.length});
    adj[b].push_back({a, e.length});
  }
  return adj;
}

// Multi-source Dijkstra where dist holds the initial labels.
void relax(const std::vector<std::vector<Arc>>& adj, std::vector<Length>& dist) {
  using Item = std::pair<Length, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] < kInf) pq.push({dist[v], v});
  }
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != dist[v]) continue;
    for (const Arc& a : adj[v]) {
      if (d + a.w < dist[a.to]) {
        dist[a.to] = d + a.w;
        pq.push({dist[a.to], a.to});
      }
    }
  }
}

}  // namespace

DistanceMatrix distance_matrix(const Instance& instance) {
  DistanceMatrix m;
  m.n = instance.points.size();
  m.d.resize(m.n * m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      m.d[i * m.n + j] = l1(instance.points[i], instance.points[j]);
    }
  }
  return m;
}

Length tsp_bruteforce(const Instance& instance) {
  const std::size_t n = instance.points.size();
  if (n < 1 || n > kTspBruteforceMax) {
    throw GuardExceeded("brute-force tour oracle needs 1 to " +
                        std::to_string(kTspBruteforceMax) + " points, got " +
                        std::to_string(n));
  }
  if (n == 1) return 0;
  const DistanceMatrix dm = distance_matrix(instance);
  std::vector<std::size_t> order(n - 1);
  std::iota(order.begin(), order.end(), std::size_t{1});
  Length best = kInf;
  do {
    Length len = dm(0, order.front()) + dm(order.back(), 0);
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      len += dm(order[k], order[k + 1]);
    }
    best = std::min(best, len);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

Length steiner_oracle(const Instance& instance) {
  const std::size_t k = instance.points.size();
  if (k < 2 || k > kSteinerOracleMaxTerminals) {
    throw GuardExceeded("Steiner oracle needs 2 to " +
                        std::to_string(kSteinerOracleMaxTerminals) +
                        " terminals, got " + std::to_string(k));
  }
  const HananGrid grid = build_grid(instance);
  const std::size_t nv = static_cast<std::size_t>(grid.rows()) *
                         static_cast<std::size_t>(grid.cols());
  if (nv > kSteinerOracleMaxVertices) {
    throw GuardExceeded("Steiner oracle grid has " + std::to_string(nv) +
                        " vertices, limit is " +
                        std::to_string(kSteinerOracleMaxVertices));
  }
  const auto adj = grid_adjacency(grid);
  std::vector<std::size_t> term(k);
  for (std::size_t t = 0; t < k; ++t) {
    term[t] = detail::vertex_id(grid, grid.vertex_of(instance.points[t]));
  }

  // dp[S][v]: cheapest tree containing the terminals of S and vertex v.
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<std::vector<Length>> dp(full + 1, std::vector<Length>(nv, kInf));
  for (std::size_t t = 0; t < k; ++t) {
    dp[std::size_t{1} << t][term[t]] = 0;
    relax(adj, dp[std::size_t{1} << t]);
  }
  for (std::size_t s = 1; s <= full; ++s) {
    if ((s & (s - 1)) == 0) continue;
    std::vector<Length>& cur = dp[s];
    // Each unordered split once: submasks containing the lowest bit of s.
    const std::size_t low = s & (~s + 1);
    for (std::size_t sub = (s - 1) & s; sub > 0; sub = (sub - 1) & s) {
      if ((sub & low) == 0) continue;
      const std::vector<Length>& a = dp[sub];
      const std::vector<Length>& b = dp[s ^ sub];
      for (std::size_t v = 0; v < nv; ++v) {
        if (a[v] + b[v] < cur[v]) cur[v] = a[v] + b[v];
      }
    }
    relax(adj, cur);
  }
  return dp[full][term[0]];
}

Length steiner_exhaustive(const Instance& instance) {
  const HananGrid grid = build_grid(instance);
  const std::vector<EdgeEvent> edges = edge_schedule(grid);
  if (edges.size() > kExhaustiveMaxEdges) {
    throw GuardExceeded("exhaustive checker limited to " +
                        std::to_string(kExhaustiveMaxEdges) + " segments, grid has " +
                        std::to_string(edges.size()));
  }
  const std::vector<GridVertex> terms = grid.terminals();
  if (terms.size() == 1) return 0;
  const std::size_t nv = static_cast<std::size_t>(grid.rows()) *
                         static_cast<std::size_t>(grid.cols());
  Length best = kInf;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << edges.size()); ++mask) {
    detail::UnionFind uf(nv);
    Length len = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if ((mask >> e) & 1U) {
        uf.unite(detail::vertex_id(grid, edges[e].from()),
                 detail::vertex_id(grid, edges[e].to()));
        len += edges[e].length;
      }
    }
    if (len >= best) continue;
    const std::size_t root = uf.find(detail::vertex_id(grid, terms.front()));
    bool ok = true;
    for (const GridVertex& t : terms) {
      ok = ok && uf.find(detail::vertex_id(grid, t)) == root;
    }
    if (ok) best = len;
  }
  return best;
}

Length l1_mst(const Instance& instance) {
  const std::size_t n = instance.points.size();
  if (n <= 1) return 0;
  std::vector<Length> key(n, kInf);
  std::vector<bool> in(n, false);
  key[0] = 0;
  Length total = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in[v] && (u == n || key[v] < key[u])) u = v;
    }
    in[u] = true;
    total += key[u];
    for (std::size_t v = 0; v < n; ++v) {
      if (!in[v]) key[v] = std::min(key[v], l1(instance.points[u], instance.points[v]));
    }
  }
  return total;
}

}  // namespace rectdp
