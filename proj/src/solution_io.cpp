#include "rectdp/solution_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "grid_graph.hpp"
#include "rectdp/errors.hpp"
#include "rectdp/steiner.hpp"
#include "rectdp/tsp.hpp"

namespace rectdp {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ') ++end;
    if (end > pos) words.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

long long to_integer(std::string_view word, std::size_t line_no) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw InputError(InputError::Kind::MalformedLine, line_no,
                     "line " + std::to_string(line_no) + ": expected an integer, got '" +
                         std::string(word) + "'");
  }
  return value;
}

// Solver and original orientation differ by a swap of axes.
EdgeUse flip(const EdgeUse& use) {
  EdgeUse out = use;
  if (use.event.kind == EdgeKind::Vertical) {
    out.event.kind = EdgeKind::Horizontal;
  } else {
    out.event.kind = EdgeKind::Vertical;
  }
  out.event.row = use.event.col;
  out.event.col = use.event.row;
  return out;
}

}  // namespace

std::string format_solution(const Solution& solution) {
  std::vector<SolutionEdge> edges = solution.edges;
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "problem " << problem_name(solution.problem) << '\n';
  out << "length " << solution.length << '\n';
  for (const SolutionEdge& e : edges) {
    out << (e.kind == EdgeKind::Vertical ? 'V' : 'H') << ' ' << e.row + 1 << ' '
        << e.col + 1 << ' ' << e.mult << '\n';
  }
  return out.str();
}

Solution parse_solution(std::string_view text) {
  Solution solution;
  bool have_problem = false;
  bool have_length = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto words = split_words(line);
    auto bad = [&](const std::string& why) {
      return InputError(InputError::Kind::MalformedLine, line_no,
                        "line " + std::to_string(line_no) + ": " + why);
    };
    if (words[0] == "problem") {
      if (words.size() != 2) throw bad("expected 'problem tsp|steiner'");
      try {
        solution.problem = parse_problem(words[1]);
      } catch (const InputError&) {
        throw bad("unknown problem '" + std::string(words[1]) + "'");
      }
      have_problem = true;
    } else if (words[0] == "length") {
      if (words.size() != 2) throw bad("expected 'length L'");
      solution.length = to_integer(words[1], line_no);
      have_length = true;
    } else if (words[0] == "V" || words[0] == "H") {
      if (words.size() != 4) throw bad("expected 'V|H row col mult'");
      SolutionEdge e;
      e.kind = words[0] == "V" ? EdgeKind::Vertical : EdgeKind::Horizontal;
      const long long r = to_integer(words[1], line_no);
      const long long c = to_integer(words[2], line_no);
      const long long m = to_integer(words[3], line_no);
      if (r < 1 || c < 1 || r > (1 << 30) || c > (1 << 30)) {
        throw bad("indices are 1-based");
      }
      if (m < 1 || m > 2) throw bad("multiplicity must be 1 or 2");
      e.row = static_cast<int>(r - 1);
      e.col = static_cast<int>(c - 1);
      e.mult = static_cast<int>(m);
      solution.edges.push_back(e);
    } else {
      throw bad("unexpected '" + std::string(words[0]) + "'");
    }
  }
  if (!have_problem || !have_length) {
    throw InputError(InputError::Kind::MalformedLine,
                     "solution needs 'problem' and 'length' lines");
  }
  return solution;
}

std::vector<SolutionEdge> to_solution_edges(const HananGrid& grid,
                                            std::span<const EdgeUse> edges) {
  std::vector<SolutionEdge> out;
  out.reserve(edges.size());
  for (const EdgeUse& use : edges) {
    const EdgeUse u = grid.transposed() ? flip(use) : use;
    out.push_back({u.event.kind, u.event.row, u.event.col, u.mult});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeUse> from_solution_edges(const HananGrid& grid,
                                         std::span<const SolutionEdge> edges) {
  std::vector<EdgeUse> out;
  out.reserve(edges.size());
  for (const SolutionEdge& e : edges) {
    EdgeUse use{{e.kind, e.row, e.col, 0}, e.mult};
    if (grid.transposed()) use = flip(use);
    if (!detail::on_grid(grid, use.event)) {
      throw InputError(InputError::Kind::InvalidArgument,
                       std::string("edge ") + (e.kind == EdgeKind::Vertical ? "V " : "H ") +
                           std::to_string(e.row + 1) + " " + std::to_string(e.col + 1) +
                           " is not a segment of the grid");
    }
    use.event.length = detail::segment_length(grid, use.event);
    out.push_back(use);
  }
  return out;
}

std::vector<std::string> verify_solution(const Instance& instance,
                                         const Solution& solution) {
  const HananGrid grid = build_grid(instance);
  std::vector<EdgeUse> uses;
  try {
    uses = from_solution_edges(grid, solution.edges);
  } catch (const InputError& e) {
    return {e.what()};
  }
  Length total = 0;
  for (const EdgeUse& u : uses) total += u.event.length * u.mult;
  std::vector<std::string> problems;
  if (solution.problem == Problem::Tsp) {
    problems = tour_subgraph_violations(grid, {uses, total});
  } else {
    problems = steiner_tree_violations(grid, {uses, total});
  }
  if (total != solution.length) {
    problems.push_back("edges sum to " + std::to_string(total) + ", recorded length is " +
                       std::to_string(solution.length));
  }
  return problems;
}

}  // namespace rectdp
