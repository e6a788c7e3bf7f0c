#pragma once

#include <compare>
#include <initializer_list>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rainbow {

// Vertices are numbered 1..n.
using Vertex = int;

// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex;
  int edge;  // index into Graph::edges()
};

// Immutable simple undirected graph. Edges are kept in lexicographic order
// and every adjacency list is sorted by neighbor, so all iteration in this
// library is deterministic.
class Graph {
 public:
  Graph() = default;

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_.at(index); }

  std::span<const Neighbor> neighbors(Vertex v) const {
    return adjacency_.at(v);
  }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }
  // Index of edge {u, v}, if present.
  std::optional<int> edge_index(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;  // index 0 unused
};

// Validates and normalizes an edge list. Throws InputError on self-loops,
// duplicate (including reversed) pairs and endpoints outside 1..n.
Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list);
Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list);

struct DistanceRow {
  static constexpr int kUnreachable = -1;

  Vertex source = 0;
  std::vector<int> dist;  // indexed by vertex, dist[0] unused

  int at(Vertex v) const { return dist.at(v); }
  bool reachable(Vertex v) const { return dist.at(v) != kUnreachable; }
};

DistanceRow bfs_distances(const Graph& g, Vertex source);

// Full distance table; row v is bfs_distances(g, v).dist.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

// Throws InputError(kDisconnected) when g is disconnected.
int diameter(const Graph& g);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_tree(const Graph& g);

// Throws InputError(kDisconnected) naming an unreachable vertex.
void require_connected(const Graph& g);

struct Bipartition {
  std::vector<Vertex> x;  // side containing vertex 1
  std::vector<Vertex> y;
  std::vector<int> side;  // side[v] in {0, 1}; side[0] unused
};

// Closed walk v_0 .. v_k (v_k adjacent to v_0) of odd length.
struct OddCycle {
  std::vector<Vertex> cycle;
};

std::variant<Bipartition, OddCycle> bipartition(const Graph& g);

struct CompleteBipartiteParams {
  int s = 0;  // s <= t
  int t = 0;
};

struct NotCompleteBipartite {
  // Exactly one of the two is populated.
  std::optional<Edge> missing_pair;
  std::optional<OddCycle> odd_cycle;
};

std::variant<CompleteBipartiteParams, NotCompleteBipartite> complete_bipartite_params(
    const Graph& g);

std::string to_string(const Edge& e);

}  // namespace rainbow
