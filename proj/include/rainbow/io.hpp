#pragma once

#include <string>
#include <string_view>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/reduction.hpp"

namespace rainbow {

// Graph text format:
//   p edge <n> <m>
//   e <u> <v>      (exactly m records)
// Blank lines and lines starting with '#' are skipped. Errors carry the
// 1-based line number.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// Coloring text format: one `c <u> <v> <color>` record per edge, any order.
EdgeColoring parse_coloring(std::string_view text, const Graph& g);
std::string serialize_coloring(const Graph& g, const EdgeColoring& c);

// `s <u> <v> <v_e>` for every original edge, then `f <u> <v> <l_e>`.
std::string serialize_provenance(const ReductionOutput& out);

}  // namespace rainbow
