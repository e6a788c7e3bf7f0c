#include "rainbow/generate.hpp"

#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t excess = (max % bound + 1) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = next();
    if (excess == 0 || x <= max - excess) return x % bound;
  }
}

namespace {

constexpr std::pair<Family, std::string_view> kNames[] = {
    {Family::kComplete, "complete"},
    {Family::kCompleteBipartite, "complete-bipartite"},
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kStar, "star"},
    {Family::kRandomTree, "random-tree"},
    {Family::kRandomConnected, "random-connected"},
};

[[noreturn]] void bad(const std::string& what) {
  throw InputError(ErrorKind::kPrecondition, what);
}

void need(bool ok, const std::string& what) {
  if (!ok) bad(what);
}

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

EdgeList pruefer_tree(int n, Rng& rng) {
  EdgeList edges;
  if (n == 2) edges.emplace_back(1, 2);
  if (n <= 2) return edges;
  std::vector<int> code(n - 2);
  for (int& x : code) x = static_cast<int>(rng.below(n)) + 1;
  std::vector<int> degree(n + 1, 1);
  for (int x : code) ++degree[x];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 1; v <= n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (int x : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

}  // namespace

Family parse_family(std::string_view name) {
  for (const auto& [family, text] : kNames) {
    if (text == name) return family;
  }
  throw InputError(ErrorKind::kParse, "unknown graph family '" + std::string(name) + "'");
}

std::string_view to_string(Family family) {
  for (const auto& [f, text] : kNames) {
    if (f == family) return text;
  }
  return "unknown";
}

Graph generate(const GeneratorSpec& spec) {
  EdgeList edges;
  const int n = spec.n;
  switch (spec.family) {
    case Family::kComplete:
      need(n >= 1, "complete graph needs n >= 1");
      for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
      }
      return build_graph(n, edges);
    case Family::kCompleteBipartite:
      need(spec.s >= 1 && spec.t >= 1, "complete-bipartite needs s >= 1 and t >= 1");
      for (int u = 1; u <= spec.s; ++u) {
        for (int v = spec.s + 1; v <= spec.s + spec.t; ++v) edges.emplace_back(u, v);
      }
      return build_graph(spec.s + spec.t, edges);
    case Family::kPath:
      need(n >= 1, "path needs n >= 1");
      for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
      return build_graph(n, edges);
    case Family::kCycle:
      need(n >= 3, "cycle needs n >= 3");
      for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(1, n);
      return build_graph(n, edges);
    case Family::kStar:
      need(spec.t >= 1, "star needs t >= 1 leaves");
      for (int v = 2; v <= spec.t + 1; ++v) edges.emplace_back(1, v);
      return build_graph(spec.t + 1, edges);
    case Family::kRandomTree: {
      need(n >= 1, "random-tree needs n >= 1");
      Rng rng(spec.seed);
      return build_graph(n, pruefer_tree(n, rng));
    }
    case Family::kRandomConnected: {
      need(n >= 1, "random-connected needs n >= 1");
      need(spec.p_den >= 1 && spec.p_num >= 1 && spec.p_num <= spec.p_den,
           "random-connected needs 0 < p_num <= p_den");
      Rng rng(spec.seed);
      for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        edges.clear();
        for (int u = 1; u <= n; ++u) {
          for (int v = u + 1; v <= n; ++v) {
            if (rng.below(spec.p_den) < spec.p_num) edges.emplace_back(u, v);
          }
        }
        Graph g = build_graph(n, edges);
        if (is_connected(g)) return g;
      }
      bad("random-connected found no connected sample in " +
          std::to_string(spec.max_attempts) + " attempts");
    }
  }
  bad("unhandled family");
}

}  // namespace rainbow
