#include "rectdp/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "rectdp/errors.hpp"

namespace rectdp {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;
constexpr double kOffset = 3.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string line(double x1, double y1, double x2, double y2, const char* style) {
  return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
         "\" y2=\"" + num(y2) + "\" " + style + "/>\n";
}

}  // namespace

std::string render_svg(const Instance& instance, std::span<const SolutionEdge> edges) {
  std::vector<Coord> xs;
  std::vector<Coord> ys;
  for (const Point& p : instance.points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  if (xs.empty()) throw InputError(InputError::Kind::EmptyInstance, "no points to render");

  const double span_x = static_cast<double>(xs.back() - xs.front());
  const double span_y = static_cast<double>(ys.back() - ys.front());
  const double scale = (kCanvas - 2 * kMargin) / std::max({span_x, span_y, 1.0});
  const double width = span_x * scale + 2 * kMargin;
  const double height = span_y * scale + 2 * kMargin;
  auto px = [&](Coord x) { return kMargin + static_cast<double>(x - xs.front()) * scale; };
  // SVG y grows downwards.
  auto py = [&](Coord y) { return height - kMargin - static_cast<double>(y - ys.front()) * scale; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
         num(height) + "\">\n";

  out += "<g id=\"grid\">\n";
  const char* grid_style = "stroke=\"#d0d0d0\" stroke-width=\"1\"";
  for (const Coord x : xs) out += line(px(x), py(ys.front()), px(x), py(ys.back()), grid_style);
  for (const Coord y : ys) out += line(px(xs.front()), py(y), px(xs.back()), py(y), grid_style);
  out += "</g>\n";

  out += "<g id=\"solution\">\n";
  const char* edge_style = "stroke=\"#1f4e9c\" stroke-width=\"2.5\" stroke-linecap=\"round\"";
  const int rows = static_cast<int>(ys.size());
  const int cols = static_cast<int>(xs.size());
  std::vector<SolutionEdge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  for (const SolutionEdge& e : sorted) {
    const bool vertical = e.kind == EdgeKind::Vertical;
    if (e.row < 0 || e.col < 0 || e.row >= rows || e.col >= cols ||
        (vertical ? e.row + 1 >= rows : e.col + 1 >= cols)) {
      throw InputError(InputError::Kind::InvalidArgument,
                       std::string("edge ") + (vertical ? "V " : "H ") +
                           std::to_string(e.row + 1) + " " + std::to_string(e.col + 1) +
                           " is not on the grid");
    }
    const double x1 = px(xs[static_cast<std::size_t>(e.col)]);
    const double y1 = py(ys[static_cast<std::size_t>(e.row)]);
    const double x2 = vertical ? x1 : px(xs[static_cast<std::size_t>(e.col + 1)]);
    const double y2 = vertical ? py(ys[static_cast<std::size_t>(e.row + 1)]) : y1;
    if (e.mult >= 2) {
      const double dx = vertical ? kOffset : 0.0;
      const double dy = vertical ? 0.0 : kOffset;
      out += line(x1 - dx, y1 - dy, x2 - dx, y2 - dy, edge_style);
      out += line(x1 + dx, y1 + dy, x2 + dx, y2 + dy, edge_style);
    } else {
      out += line(x1, y1, x2, y2, edge_style);
    }
  }
  out += "</g>\n";

  out += "<g id=\"terminals\" fill=\"#c0392b\">\n";
  for (const Point& p : instance.points) {
    out += "<circle cx=\"" + num(px(p.x)) + "\" cy=\"" + num(py(p.y)) + "\" r=\"4\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace rectdp
