#include "rainbow/coloring.hpp"

#include <algorithm>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

std::string list_edges(const Graph& g, const std::vector<int>& indices) {
  std::string out;
  for (int i : indices) {
    if (!out.empty()) out += ' ';
    out += to_string(g.edge(i));
  }
  return out;
}

}  // namespace

EdgeColoring::EdgeColoring(const Graph& g, std::vector<Color> by_edge)
    : colors_(std::move(by_edge)) {
  require_total(g, *this);
  for (int i = 0; i < size(); ++i) {
    if (colors_[i] <= 0) {
      throw InputError(ErrorKind::kInvalidColor,
                       "edge " + to_string(g.edge(i)) + " has non-positive color " +
                           std::to_string(colors_[i]));
    }
  }
}

EdgeColoring EdgeColoring::from_assignments(
    const Graph& g, const std::vector<std::pair<Edge, Color>>& records) {
  std::vector<Color> by_edge(g.size(), 0);
  for (const auto& [e, color] : records) {
    auto index = g.edge_index(e.u, e.v);
    if (!index) {
      throw InputError(ErrorKind::kUnknownEdge, "unknown edge " + to_string(e));
    }
    if (by_edge[*index] != 0) {
      throw InputError(ErrorKind::kDuplicateEdge,
                       "duplicate color record for edge " + to_string(g.edge(*index)));
    }
    if (color <= 0) {
      throw InputError(ErrorKind::kInvalidColor, "edge " + to_string(e) +
                                                     " has non-positive color " +
                                                     std::to_string(color));
    }
    by_edge[*index] = color;
  }
  std::vector<int> missing;
  for (int i = 0; i < g.size(); ++i) {
    if (by_edge[i] == 0) missing.push_back(i);
  }
  if (!missing.empty()) {
    throw InputError(ErrorKind::kPartialColoring,
                     "uncolored edges: " + list_edges(g, missing));
  }
  EdgeColoring c;
  c.colors_ = std::move(by_edge);
  return c;
}

std::vector<Color> EdgeColoring::palette() const {
  std::vector<Color> p = colors_;
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

void require_total(const Graph& g, const EdgeColoring& c) {
  if (c.size() == g.size()) return;
  if (c.size() > g.size()) {
    throw InputError(ErrorKind::kUnknownEdge, "coloring has " + std::to_string(c.size()) +
                                                  " entries for " + std::to_string(g.size()) +
                                                  " edges");
  }
  std::vector<int> missing;
  for (int i = c.size(); i < g.size(); ++i) missing.push_back(i);
  throw InputError(ErrorKind::kPartialColoring, "uncolored edges: " + list_edges(g, missing));
}

}  // namespace rainbow
