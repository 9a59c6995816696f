#pragma once

#include <cstddef>
#include <vector>

#include "rectdp/geometry.hpp"

namespace rectdp {

// Pairwise l1 distances, row-major n x n.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<Length> d;

  Length operator()(std::size_t i, std::size_t j) const { return d[i * n + j]; }
};

DistanceMatrix distance_matrix(const Instance& instance);

inline constexpr std::size_t kTspBruteforceMax = 10;
inline constexpr std::size_t kSteinerOracleMaxTerminals = 10;
inline constexpr std::size_t kSteinerOracleMaxVertices = 400;
inline constexpr std::size_t kExhaustiveMaxEdges = 14;

// Shortest closed tour over all cyclic orders with the first point fixed.
// 1 <= n <= 10, otherwise GuardExceeded.
Length tsp_bruteforce(const Instance& instance);

// Dreyfus-Wagner over the Hanan grid graph. 2 <= terminals <= 10 and at most
// 400 grid vertices, otherwise GuardExceeded.
Length steiner_oracle(const Instance& instance);

// Minimum over every connected grid edge subset that touches all terminals.
// Only for grids with at most 14 segments.
Length steiner_exhaustive(const Instance& instance);

// Minimum spanning tree of the terminals under l1 (Prim).
Length l1_mst(const Instance& instance);

}  // namespace rectdp
