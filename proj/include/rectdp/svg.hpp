#pragma once

#include <span>
#include <string>

#include "rectdp/geometry.hpp"
#include "rectdp/solution_io.hpp"

namespace rectdp {

// SVG 1.1 drawing of the Hanan grid (light gray), the terminals (filled
// circles) and the solution edges. Multiplicity-2 edges are drawn as two
// offset strokes. Throws InputError for an edge that is not on the grid.
std::string render_svg(const Instance& instance, std::span<const SolutionEdge> edges);

}  // namespace rectdp
