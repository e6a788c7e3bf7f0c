#include "rainbow/graph.hpp"

#include <algorithm>
#include <queue>

#include "rainbow/errors.hpp"

namespace rainbow {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::optional<int> Graph::edge_index(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return std::nullopt;
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
  if (it == adj.end() || it->vertex != v) return std::nullopt;
  return it->edge;
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
  if (n < 1) {
    throw InputError(ErrorKind::kOutOfRange,
                     "vertex count must be positive, got " + std::to_string(n));
  }
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    Edge e{std::min(a, b), std::max(a, b)};
    if (e.u < 1 || e.v > n) {
      throw InputError(ErrorKind::kOutOfRange,
                       "edge " + to_string({a, b}) + " has endpoint outside 1.." +
                           std::to_string(n));
    }
    if (a == b) {
      throw InputError(ErrorKind::kSelfLoop, "self-loop " + to_string({a, b}));
    }
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw InputError(ErrorKind::kDuplicateEdge, "duplicate edge " + to_string(*dup));
  }
  g.adjacency_.assign(n + 1, {});
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges_[i];
    g.adjacency_[e.u].push_back({e.v, i});
    g.adjacency_[e.v].push_back({e.u, i});
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
  return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(),
                                                                    edge_list.size()));
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw InputError(ErrorKind::kOutOfRange, "vertex " + std::to_string(v) +
                                                 " outside 1.." + std::to_string(g.order()));
  }
}

// BFS that also records the parent of each reached vertex.
std::vector<int> bfs(const Graph& g, Vertex source, std::vector<Vertex>* parent) {
  std::vector<int> dist(g.order() + 1, DistanceRow::kUnreachable);
  if (parent) parent->assign(g.order() + 1, 0);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex w = queue.front();
    queue.pop();
    for (const Neighbor& nb : g.neighbors(w)) {
      if (dist[nb.vertex] != DistanceRow::kUnreachable) continue;
      dist[nb.vertex] = dist[w] + 1;
      if (parent) (*parent)[nb.vertex] = w;
      queue.push(nb.vertex);
    }
  }
  return dist;
}

}  // namespace

DistanceRow bfs_distances(const Graph& g, Vertex source) {
  check_vertex(g, source);
  return {source, bfs(g, source, nullptr)};
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> table(g.order() + 1);
  for (Vertex v = 1; v <= g.order(); ++v) table[v] = bfs(g, v, nullptr);
  return table;
}

bool is_connected(const Graph& g) {
  auto dist = bfs(g, 1, nullptr);
  return std::none_of(dist.begin() + 1, dist.end(),
                      [](int d) { return d == DistanceRow::kUnreachable; });
}

void require_connected(const Graph& g) {
  auto dist = bfs(g, 1, nullptr);
  for (Vertex v = 2; v <= g.order(); ++v) {
    if (dist[v] == DistanceRow::kUnreachable) {
      throw InputError(ErrorKind::kDisconnected,
                       "graph is disconnected: vertex " + std::to_string(v) +
                           " is unreachable from vertex 1");
    }
  }
}

int diameter(const Graph& g) {
  require_connected(g);
  int best = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    auto dist = bfs(g, v, nullptr);
    best = std::max(best, *std::max_element(dist.begin() + 1, dist.end()));
  }
  return best;
}

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

std::variant<Bipartition, OddCycle> bipartition(const Graph& g) {
  require_connected(g);
  std::vector<Vertex> parent;
  auto dist = bfs(g, 1, &parent);
  for (const Edge& e : g.edges()) {
    if (dist[e.u] % 2 != dist[e.v] % 2) continue;
    // Same BFS layer parity: walk both tree paths up to their meeting point.
    std::vector<Vertex> up_u{e.u};
    std::vector<Vertex> up_v{e.v};
    Vertex a = e.u;
    Vertex b = e.v;
    while (a != b) {
      if (dist[a] >= dist[b]) {
        a = parent[a];
        up_u.push_back(a);
      } else {
        b = parent[b];
        up_v.push_back(b);
      }
    }
    up_v.pop_back();  // meeting vertex already ends up_u
    OddCycle odd;
    odd.cycle.assign(up_u.rbegin(), up_u.rend());
    odd.cycle.insert(odd.cycle.end(), up_v.begin(), up_v.end());
    return odd;
  }
  Bipartition parts;
  parts.side.assign(g.order() + 1, 0);
  for (Vertex v = 1; v <= g.order(); ++v) {
    parts.side[v] = dist[v] % 2;
    (parts.side[v] == 0 ? parts.x : parts.y).push_back(v);
  }
  return parts;
}

std::variant<CompleteBipartiteParams, NotCompleteBipartite> complete_bipartite_params(
    const Graph& g) {
  auto split = bipartition(g);
  if (auto* odd = std::get_if<OddCycle>(&split)) {
    return NotCompleteBipartite{std::nullopt, *odd};
  }
  const auto& parts = std::get<Bipartition>(split);
  const long long xs = static_cast<long long>(parts.x.size());
  const long long ys = static_cast<long long>(parts.y.size());
  if (g.size() != xs * ys) {
    // Scan cross pairs in lexicographic order for the first non-edge.
    for (Vertex u = 1; u <= g.order(); ++u) {
      for (Vertex v = u + 1; v <= g.order(); ++v) {
        if (parts.side[u] != parts.side[v] && !g.adjacent(u, v)) {
          return NotCompleteBipartite{Edge{u, v}, std::nullopt};
        }
      }
    }
  }
  int s = static_cast<int>(std::min(xs, ys));
  int t = static_cast<int>(std::max(xs, ys));
  return CompleteBipartiteParams{s, t};
}

}  // namespace rainbow
