#pragma once

// Brute-force reference implementations for tests. Everything here works
// from the raw edge list over an adjacency matrix and shares no search code
// with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace oracle {

using rainbow::Graph;
using rainbow::Vertex;

struct Matrix {
  int n = 0;
  std::vector<std::vector<int>> edge;  // edge index + 1, 0 if absent

  explicit Matrix(const Graph& g) : n(g.order()), edge(n + 1, std::vector<int>(n + 1, 0)) {
    for (int i = 0; i < g.size(); ++i) {
      edge[g.edges()[i].u][g.edges()[i].v] = i + 1;
      edge[g.edges()[i].v][g.edges()[i].u] = i + 1;
    }
  }
};

// Calls visit(path) for every simple u-v path, trying next vertices 1..n in order.
inline void for_each_path(const Matrix& mx, Vertex u, Vertex v,
                          const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> path{u};
  std::vector<char> on(mx.n + 1, 0);
  on[u] = 1;
  std::function<void()> go = [&] {
    Vertex w = path.back();
    if (w == v) {
      visit(path);
      return;
    }
    for (Vertex x = 1; x <= mx.n; ++x) {
      if (!mx.edge[w][x] || on[x]) continue;
      on[x] = 1;
      path.push_back(x);
      go();
      path.pop_back();
      on[x] = 0;
    }
  };
  go();
}

inline bool rainbow_under(const Matrix& mx, const std::vector<int>& colors,
                          const std::vector<Vertex>& path) {
  std::vector<int> seen;
  for (std::size_t i = 1; i < path.size(); ++i) {
    seen.push_back(colors[mx.edge[path[i - 1]][path[i]] - 1]);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// Distance as the shortest simple path found by enumeration.
inline int distance(const Matrix& mx, Vertex u, Vertex v) {
  if (u == v) return 0;
  int best = -1;
  for_each_path(mx, u, v, [&](const std::vector<Vertex>& p) {
    int len = static_cast<int>(p.size()) - 1;
    if (best < 0 || len < best) best = len;
  });
  return best;
}

// Rainbow (strong = geodesic) connectivity by exhaustive path enumeration.
inline bool connected_under(const Graph& g, const std::vector<int>& colors, bool strong) {
  Matrix mx(g);
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      const int d = strong ? distance(mx, u, v) : 0;
      bool ok = false;
      for_each_path(mx, u, v, [&](const std::vector<Vertex>& p) {
        if (strong && static_cast<int>(p.size()) - 1 != d) return;
        ok = ok || rainbow_under(mx, colors, p);
      });
      if (!ok) return false;
    }
  }
  return true;
}

// Minimum k such that some coloring from {1..k}^m (all of them, no symmetry
// reduction) is accepted. Only for tiny graphs.
inline int min_colors(const Graph& g, bool strong) {
  const int m = g.size();
  if (g.order() == 1) return 0;
  for (int k = 1; k <= m; ++k) {
    std::vector<int> colors(m, 1);
    for (;;) {
      if (connected_under(g, colors, strong)) return k;
      int i = 0;
      while (i < m && colors[i] == k) colors[i++] = 1;
      if (i == m) break;
      ++colors[i];
    }
  }
  return m;
}

inline bool connected(const Graph& g) {
  Matrix mx(g);
  for (Vertex v = 2; v <= g.order(); ++v) {
    if (distance(mx, 1, v) < 0) return false;
  }
  return true;
}

// Every labeled graph on n vertices (2^(n choose 2) of them), filtered.
inline std::vector<Graph> labeled_graphs(int n, const std::function<bool(const Graph&)>& keep) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) edges.push_back(slots[i]);
    }
    Graph g = rainbow::build_graph(n, edges);
    if (keep(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracle
