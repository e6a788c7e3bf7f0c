#pragma once

#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Color ids are positive integers; they need not be contiguous.
using Color = int;

// Total edge coloring of a companion Graph, stored by edge index.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  // `by_edge[i]` colors g.edge(i). Throws InputError if the vector does not
  // cover every edge or holds a non-positive color.
  EdgeColoring(const Graph& g, std::vector<Color> by_edge);

  // Builds from explicit (edge, color) records; edge endpoints may be given
  // in either order. Throws on unknown, duplicate or missing edges.
  static EdgeColoring from_assignments(const Graph& g,
                                       const std::vector<std::pair<Edge, Color>>& records);

  int size() const noexcept { return static_cast<int>(colors_.size()); }
  Color operator[](int edge_index) const { return colors_[edge_index]; }
  const std::vector<Color>& colors() const noexcept { return colors_; }

  // Sorted distinct colors in use.
  std::vector<Color> palette() const;
  int palette_size() const { return static_cast<int>(palette().size()); }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
};

// Throws InputError(kPartialColoring) listing uncolored edges when `c` does
// not cover `g`.
void require_total(const Graph& g, const EdgeColoring& c);

}  // namespace rainbow
