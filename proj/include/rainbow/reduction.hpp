#pragma once

#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

// Edge-subdivision of a colored graph. Original vertices keep their numbers;
// the vertex subdividing edge i of the original (lexicographic order) is
// n + 1 + i. For edge {a, b} with a < b the half-edge at a keeps the original
// color and the half-edge at b gets the fresh color max(palette) + 1 + i.
struct ReductionOutput {
  Graph g_prime;
  EdgeColoring c_prime;
  int original_order = 0;
  std::vector<Edge> original_edges;
  std::vector<Vertex> subdivision_vertex;  // by original edge index
  std::vector<Color> fresh_color;          // by original edge index
  std::vector<Vertex> side_x;              // original vertices
  std::vector<Vertex> side_y;              // subdivision vertices
};

ReductionOutput subdivide_reduce(const Graph& g, const EdgeColoring& c);

// Maps a g_prime path between original vertices back to g by replacing each
// a - v_e - b hop with the edge {a, b}. Throws InputError if an endpoint is a
// subdivision vertex or the path is not a path of g_prime.
Path contract_path(const ReductionOutput& out, const Path& p);

// Threads the subdivision vertex of every edge of a g-path.
Path expand_path(const ReductionOutput& out, const Path& p);

}  // namespace rainbow
