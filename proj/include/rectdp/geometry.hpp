#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rectdp {

using Coord = std::int64_t;
using Length = std::int64_t;

// Inclusive bound on |x| and |y|.
inline constexpr Coord kMaxAbsCoord = Coord{1} << 31;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

Length l1(Point p, Point q);

// A set of distinct terminals. `original_count` remembers how many points the
// input declared before duplicates were merged.
struct Instance {
  std::vector<Point> points;
  std::size_t original_count = 0;
};

// Deduplicates (first-seen order kept) and range-checks the points.
Instance make_instance(std::vector<Point> points);

// Parses the instance text format: first line n, then n lines "x y"; lines
// starting with '#' are comments.
Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::string& path);
std::string format_instance(const Instance& instance);

enum class Problem { Tsp, Steiner };
std::string_view problem_name(Problem problem);
Problem parse_problem(std::string_view name);

// Row/column of a Hanan grid vertex, 0-based, in solver orientation.
struct GridVertex {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const GridVertex&, const GridVertex&) = default;
};

// Hanan grid in solver orientation: rows are horizontal lines (h of them),
// columns vertical lines (v of them), and h <= v always holds. When the input
// has more distinct y than x values the coordinates are swapped on the way in
// and `transposed()` is set.
class HananGrid {
 public:
  static constexpr std::size_t kDefaultVertexLimit = 10'000'000;

  int rows() const { return static_cast<int>(ys_.size()); }
  int cols() const { return static_cast<int>(xs_.size()); }
  bool transposed() const { return transposed_; }

  // Solver-facing coordinate lines (swapped when transposed).
  const std::vector<Coord>& xs() const { return xs_; }
  const std::vector<Coord>& ys() const { return ys_; }

  bool is_terminal(int row, int col) const {
    return terminal_[static_cast<std::size_t>(row) * xs_.size() +
                     static_cast<std::size_t>(col)] != 0;
  }
  bool is_terminal(GridVertex v) const { return is_terminal(v.row, v.col); }

  // Position of a grid vertex in the caller's original coordinates.
  Point point_at(GridVertex v) const;
  // Grid vertex of an original-coordinate point lying on the grid; throws
  // InputError when the point is not a grid vertex.
  GridVertex vertex_of(Point original) const;

  std::vector<GridVertex> terminals() const;

 private:
  friend HananGrid build_grid(const Instance&, std::size_t);

  std::vector<Coord> xs_;
  std::vector<Coord> ys_;
  std::vector<std::uint8_t> terminal_;  // row-major, rows() x cols()
  bool transposed_ = false;
};

HananGrid build_grid(const Instance& instance,
                     std::size_t vertex_limit = HananGrid::kDefaultVertexLimit);

enum class EdgeKind : std::uint8_t { Vertical, Horizontal };

// One grid segment in sweep order. Vertical(row, col) joins (row, col) and
// (row + 1, col); Horizontal(row, col) joins (row, col) and (row, col + 1).
struct EdgeEvent {
  EdgeKind kind = EdgeKind::Vertical;
  int row = 0;
  int col = 0;
  Length length = 0;

  GridVertex from() const { return {row, col}; }
  GridVertex to() const {
    return kind == EdgeKind::Vertical ? GridVertex{row + 1, col}
                                      : GridVertex{row, col + 1};
  }

  friend bool operator==(const EdgeEvent&, const EdgeEvent&) = default;
};

// Column by column: the h-1 vertical segments bottom to top, then the h
// horizontal segments towards the next column bottom to top.
// Size is (h-1)v + (v-1)h.
std::vector<EdgeEvent> edge_schedule(const HananGrid& grid);

// "V 1 1" / "H 2 3", 1-based; for logs and test failure messages.
std::string to_string(const EdgeEvent& event);

}  // namespace rectdp
