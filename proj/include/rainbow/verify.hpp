#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct Path {
  std::vector<Vertex> vertices;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

// True when consecutive vertices are adjacent and no vertex repeats.
bool is_simple_path(const Graph& g, const Path& p);
// True when `p` is a simple path whose edge colors are pairwise distinct.
bool is_rainbow_path(const Graph& g, const EdgeColoring& c, const Path& p);

enum class VerifyMode { kRainbow, kStrongRainbow };

struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

struct VerificationReport {
  bool verdict = false;
  VerifyMode mode = VerifyMode::kRainbow;
  // One witness per unordered pair u < v; filled only when requested and the
  // verdict is true.
  std::map<VertexPair, Path> witnesses;
  // Lexicographically first pair lacking a qualifying path.
  std::optional<VertexPair> failing_pair;
};

struct VerifyOptions {
  bool keep_witnesses = false;
  // Pair checks are split across this many worker threads. The report does
  // not depend on the value.
  int threads = 1;
};

// Depth-first search for a rainbow u-v path of length at most max_len.
std::optional<Path> exists_rainbow_path(const Graph& g, const EdgeColoring& c, Vertex u,
                                        Vertex v, int max_len);

VerificationReport is_rainbow_connected(const Graph& g, const EdgeColoring& c,
                                        const VerifyOptions& options = {});
VerificationReport is_strong_rainbow_connected(const Graph& g, const EdgeColoring& c,
                                               const VerifyOptions& options = {});

// All simple u-v paths of length at most l, in lexicographic vertex order.
std::vector<Path> enumerate_paths_up_to(const Graph& g, Vertex u, Vertex v, int l);

namespace detail {

// Pruned depth-first path search over dense color ids 0..palette-1 indexed by
// edge. `dist` is the all-pairs distance table of the graph and must outlive
// the search object.
class PathSearch {
 public:
  PathSearch(const Graph& g, const std::vector<std::vector<int>>& dist);

  void set_coloring(std::span<const int> dense_colors, int palette);

  // Rainbow u-v path of length <= max_len; on success trail() holds it.
  bool rainbow(Vertex u, Vertex v, int max_len);
  // Rainbow u-v geodesic; on success trail() holds it.
  bool geodesic(Vertex u, Vertex v);

  const std::vector<Vertex>& trail() const { return trail_; }

 private:
  bool rainbow_from(Vertex w, Vertex target, int remaining);
  bool geodesic_to(Vertex w, Vertex source);

  const Graph* graph_;
  const std::vector<std::vector<int>>* dist_;
  std::span<const int> colors_;
  std::vector<char> used_;
  std::vector<char> visited_;
  std::vector<Vertex> trail_;
};

}  // namespace detail

// Verdict-only checker, reused across many colorings of one graph.
class ConnectivityChecker {
 public:
  ConnectivityChecker(const Graph& g, VerifyMode mode);

  ConnectivityChecker(const ConnectivityChecker&) = delete;
  ConnectivityChecker& operator=(const ConnectivityChecker&) = delete;

  bool accepts(std::span<const int> dense_colors, int palette);

 private:
  VerifyMode mode_;
  std::vector<std::vector<int>> dist_;
  std::vector<VertexPair> pairs_;  // pairs at distance >= 2, farthest first
  detail::PathSearch search_;
};

}  // namespace rainbow
