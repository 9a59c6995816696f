#include "rectdp/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "rectdp/errors.hpp"

namespace rectdp {

namespace {

bool in_range(Coord c) { return c >= -kMaxAbsCoord && c <= kMaxAbsCoord; }

// Strict signed decimal: optional '-', then digits, nothing else. Values that
// overflow 64 bits are reported as out of range rather than malformed.
bool parse_int(std::string_view s, Coord& out) {
  if (s.empty() || s.front() == '+') return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec == std::errc::result_out_of_range && ptr == last) {
    out = s.front() == '-' ? -kMaxAbsCoord - 1 : kMaxAbsCoord + 1;
    return true;
  }
  return ec == std::errc() && ptr == last;
}

std::vector<Coord> distinct_sorted(std::vector<Coord> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

int index_of(const std::vector<Coord>& sorted, Coord c) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
  if (it == sorted.end() || *it != c) return -1;
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

Length l1(Point p, Point q) {
  const Length dx = p.x > q.x ? p.x - q.x : q.x - p.x;
  const Length dy = p.y > q.y ? p.y - q.y : q.y - p.y;
  return dx + dy;
}

Instance make_instance(std::vector<Point> points) {
  if (points.empty()) {
    throw InputError(InputError::Kind::EmptyInstance, "instance has no points");
  }
  Instance instance;
  instance.original_count = points.size();
  std::set<Point> seen;
  for (const Point& p : points) {
    if (!in_range(p.x) || !in_range(p.y)) {
      throw InputError(InputError::Kind::CoordinateOutOfRange,
                       "coordinate out of range");
    }
    if (seen.insert(p).second) instance.points.push_back(p);
  }
  return instance;
}

Instance parse_instance(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  // A trailing newline leaves one empty pseudo-line behind.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();

  std::size_t declared = 0;
  bool have_count = false;
  std::vector<Point> points;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.front() == '#') continue;

    if (!have_count) {
      Coord n = 0;
      if (!parse_int(line, n) || n < 0) {
        throw InputError(InputError::Kind::MalformedLine, lineno,
                         "line " + std::to_string(lineno) +
                             ": expected point count");
      }
      if (n == 0) {
        throw InputError(InputError::Kind::EmptyInstance, lineno,
                         "instance declares zero points");
      }
      declared = static_cast<std::size_t>(n);
      have_count = true;
      continue;
    }

    const std::size_t space = line.find(' ');
    Point p;
    if (space == std::string_view::npos ||
        !parse_int(line.substr(0, space), p.x) ||
        !parse_int(line.substr(space + 1), p.y)) {
      throw InputError(InputError::Kind::MalformedLine, lineno,
                       "line " + std::to_string(lineno) +
                           ": expected \"x y\" integers");
    }
    if (!in_range(p.x) || !in_range(p.y)) {
      throw InputError(InputError::Kind::CoordinateOutOfRange, lineno,
                       "line " + std::to_string(lineno) +
                           ": coordinate out of range");
    }
    if (points.size() == declared) {
      throw InputError(InputError::Kind::CountMismatch, lineno,
                       "more points than declared (" +
                           std::to_string(declared) + ")");
    }
    points.push_back(p);
  }
  if (!have_count) {
    throw InputError(InputError::Kind::EmptyInstance, "missing point count");
  }
  if (points.size() != declared) {
    throw InputError(InputError::Kind::CountMismatch,
                     "declared " + std::to_string(declared) + " points, found " +
                         std::to_string(points.size()));
  }
  return make_instance(std::move(points));
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(InputError::Kind::InvalidArgument,
                     "cannot open instance file " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string format_instance(const Instance& instance) {
  std::string out = std::to_string(instance.points.size()) + "\n";
  for (const Point& p : instance.points) {
    out += std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
  }
  return out;
}

std::string_view problem_name(Problem problem) {
  return problem == Problem::Tsp ? "tsp" : "steiner";
}

Problem parse_problem(std::string_view name) {
  if (name == "tsp") return Problem::Tsp;
  if (name == "steiner") return Problem::Steiner;
  throw InputError(InputError::Kind::InvalidArgument,
                   "unknown problem '" + std::string(name) + "'");
}

Point HananGrid::point_at(GridVertex v) const {
  const Coord a = xs_[static_cast<std::size_t>(v.col)];
  const Coord b = ys_[static_cast<std::size_t>(v.row)];
  return transposed_ ? Point{b, a} : Point{a, b};
}

GridVertex HananGrid::vertex_of(Point original) const {
  const Coord a = transposed_ ? original.y : original.x;
  const Coord b = transposed_ ? original.x : original.y;
  const int col = index_of(xs_, a);
  const int row = index_of(ys_, b);
  if (col < 0 || row < 0) {
    throw InputError(InputError::Kind::InvalidArgument,
                     "point is not a Hanan grid vertex");
  }
  return {row, col};
}

std::vector<GridVertex> HananGrid::terminals() const {
  std::vector<GridVertex> out;
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c) {
      if (is_terminal(r, c)) out.push_back({r, c});
    }
  }
  return out;
}

HananGrid build_grid(const Instance& instance, std::size_t vertex_limit) {
  if (instance.points.empty()) {
    throw InputError(InputError::Kind::EmptyInstance, "instance has no points");
  }
  std::vector<Coord> xs;
  std::vector<Coord> ys;
  xs.reserve(instance.points.size());
  ys.reserve(instance.points.size());
  for (const Point& p : instance.points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  HananGrid grid;
  grid.xs_ = distinct_sorted(std::move(xs));
  grid.ys_ = distinct_sorted(std::move(ys));
  if (grid.ys_.size() > grid.xs_.size()) {
    std::swap(grid.xs_, grid.ys_);
    grid.transposed_ = true;
  }
  const std::size_t h = grid.ys_.size();
  const std::size_t v = grid.xs_.size();
  if (h > vertex_limit / v) {
    throw GuardExceeded("Hanan grid has " + std::to_string(h) + "x" +
                        std::to_string(v) + " vertices, limit is " +
                        std::to_string(vertex_limit));
  }
  grid.terminal_.assign(h * v, 0);
  for (const Point& p : instance.points) {
    const GridVertex gv = grid.vertex_of(p);
    grid.terminal_[static_cast<std::size_t>(gv.row) * v +
                   static_cast<std::size_t>(gv.col)] = 1;
  }
  return grid;
}

std::vector<EdgeEvent> edge_schedule(const HananGrid& grid) {
  const int h = grid.rows();
  const int v = grid.cols();
  std::vector<EdgeEvent> events;
  events.reserve(static_cast<std::size_t>(2 * h * v - h - v));
  const auto& xs = grid.xs();
  const auto& ys = grid.ys();
  for (int j = 0; j < v; ++j) {
    for (int i = 0; i + 1 < h; ++i) {
      events.push_back({EdgeKind::Vertical, i, j, ys[i + 1] - ys[i]});
    }
    if (j + 1 < v) {
      for (int i = 0; i < h; ++i) {
        events.push_back({EdgeKind::Horizontal, i, j, xs[j + 1] - xs[j]});
      }
    }
  }
  return events;
}

std::string to_string(const EdgeEvent& event) {
  return std::string(event.kind == EdgeKind::Vertical ? "V " : "H ") +
         std::to_string(event.row + 1) + " " + std::to_string(event.col + 1);
}

}  // namespace rectdp
