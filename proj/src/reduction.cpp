#include "rainbow/reduction.hpp"

#include <algorithm>

#include "rainbow/errors.hpp"

namespace rainbow {

ReductionOutput subdivide_reduce(const Graph& g, const EdgeColoring& c) {
  require_connected(g);
  require_total(g, c);
  ReductionOutput out;
  const int n = g.order();
  const int m = g.size();
  const auto palette = c.palette();
  const Color base = palette.empty() ? 0 : palette.back();

  out.original_order = n;
  out.original_edges = g.edges();
  std::vector<std::pair<Vertex, Vertex>> halves;
  std::vector<std::pair<Edge, Color>> colored;
  halves.reserve(2 * m);
  colored.reserve(2 * m);
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edge(i);
    const Vertex mid = n + 1 + i;
    const Color fresh = base + 1 + i;
    out.subdivision_vertex.push_back(mid);
    out.fresh_color.push_back(fresh);
    halves.emplace_back(e.u, mid);
    halves.emplace_back(e.v, mid);
    colored.push_back({Edge{e.u, mid}, c[i]});
    colored.push_back({Edge{e.v, mid}, fresh});
  }
  out.g_prime = build_graph(n + m, halves);
  out.c_prime = EdgeColoring::from_assignments(out.g_prime, colored);
  for (Vertex v = 1; v <= n; ++v) out.side_x.push_back(v);
  for (int i = 0; i < m; ++i) out.side_y.push_back(n + 1 + i);
  return out;
}

Path contract_path(const ReductionOutput& out, const Path& p) {
  const int n = out.original_order;
  if (!is_simple_path(out.g_prime, p)) {
    throw InputError(ErrorKind::kPrecondition, "not a path of the subdivided graph");
  }
  if (p.vertices.front() > n || p.vertices.back() > n) {
    throw InputError(ErrorKind::kPrecondition,
                     "path endpoints must be original vertices (1.." + std::to_string(n) + ")");
  }
  // Bipartiteness forces original vertices at even positions.
  Path contracted;
  for (std::size_t i = 0; i < p.vertices.size(); i += 2) {
    contracted.vertices.push_back(p.vertices[i]);
  }
  return contracted;
}

Path expand_path(const ReductionOutput& out, const Path& p) {
  Path expanded;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex v = p.vertices[i];
    if (v < 1 || v > out.original_order) {
      throw InputError(ErrorKind::kOutOfRange, "vertex " + std::to_string(v) +
                                                   " is not an original vertex");
    }
    if (i > 0) {
      const Vertex prev = p.vertices[i - 1];
      const Edge e{std::min(prev, v), std::max(prev, v)};
      auto it = std::lower_bound(out.original_edges.begin(), out.original_edges.end(), e);
      if (it == out.original_edges.end() || *it != e) {
        throw InputError(ErrorKind::kUnknownEdge, "path uses non-edge " + to_string(e));
      }
      expanded.vertices.push_back(out.subdivision_vertex[it - out.original_edges.begin()]);
    }
    expanded.vertices.push_back(v);
  }
  return expanded;
}

}  // namespace rainbow
