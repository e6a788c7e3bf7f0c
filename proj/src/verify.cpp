#include "rainbow/verify.hpp"

#include <algorithm>
#include <thread>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

void check_pair(const Graph& g, Vertex u, Vertex v) {
  for (Vertex x : {u, v}) {
    if (!g.contains(x)) {
      throw InputError(ErrorKind::kOutOfRange, "vertex " + std::to_string(x) +
                                                   " outside 1.." + std::to_string(g.order()));
    }
  }
  if (u == v) {
    throw InputError(ErrorKind::kPrecondition, "endpoints must differ, got " +
                                                   std::to_string(u) + " twice");
  }
}

void check_length_cap(const Graph& g, int l) {
  if (l < 1 || l > g.order() - 1) {
    throw InputError(ErrorKind::kPrecondition, "length bound " + std::to_string(l) +
                                                   " outside 1.." +
                                                   std::to_string(g.order() - 1));
  }
}

// Maps arbitrary positive color ids onto 0..palette-1.
std::vector<int> densify(const EdgeColoring& c, const std::vector<Color>& palette) {
  std::vector<int> dense(c.size());
  for (int i = 0; i < c.size(); ++i) {
    dense[i] = static_cast<int>(
        std::lower_bound(palette.begin(), palette.end(), c[i]) - palette.begin());
  }
  return dense;
}

struct PairOutcome {
  std::optional<std::size_t> first_failure;  // index into the pair list
  std::vector<std::pair<std::size_t, Path>> witnesses;
};

VerificationReport verify(const Graph& g, const EdgeColoring& c, VerifyMode mode,
                          const VerifyOptions& options) {
  require_connected(g);
  require_total(g, c);
  const auto palette = c.palette();
  const auto dense = densify(c, palette);
  const auto dist = all_pairs_distances(g);

  std::vector<VertexPair> pairs;
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) pairs.push_back({u, v});
  }

  // Worker w handles pairs w, w + threads, ... and stops once it fails, since
  // any later pair of its own cannot be the lexicographic minimum.
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(pairs.size())));
  std::vector<PairOutcome> outcomes(threads);
  auto run = [&](int worker) {
    detail::PathSearch search(g, dist);
    search.set_coloring(dense, static_cast<int>(palette.size()));
    PairOutcome& out = outcomes[worker];
    for (std::size_t i = worker; i < pairs.size(); i += threads) {
      const auto [u, v] = pairs[i];
      bool found = mode == VerifyMode::kRainbow ? search.rainbow(u, v, g.order() - 1)
                                                : search.geodesic(u, v);
      if (!found) {
        out.first_failure = i;
        return;
      }
      if (options.keep_witnesses) out.witnesses.emplace_back(i, Path{search.trail()});
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(run, w);
  }

  VerificationReport report;
  report.mode = mode;
  std::optional<std::size_t> failure;
  for (const auto& out : outcomes) {
    if (out.first_failure && (!failure || *out.first_failure < *failure)) {
      failure = out.first_failure;
    }
  }
  report.verdict = !failure.has_value();
  if (failure) {
    report.failing_pair = pairs[*failure];
  } else if (options.keep_witnesses) {
    for (auto& out : outcomes) {
      for (auto& [i, path] : out.witnesses) report.witnesses.emplace(pairs[i], std::move(path));
    }
  }
  return report;
}

void collect_paths(const Graph& g, Vertex w, Vertex target, int remaining,
                   std::vector<char>& visited, std::vector<Vertex>& trail,
                   std::vector<Path>& out) {
  if (w == target) {
    out.push_back(Path{trail});
    return;
  }
  if (remaining == 0) return;
  for (const Neighbor& nb : g.neighbors(w)) {
    if (visited[nb.vertex]) continue;
    visited[nb.vertex] = 1;
    trail.push_back(nb.vertex);
    collect_paths(g, nb.vertex, target, remaining - 1, visited, trail, out);
    trail.pop_back();
    visited[nb.vertex] = 0;
  }
}

}  // namespace

bool is_simple_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<char> seen(g.order() + 1, 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_rainbow_path(const Graph& g, const EdgeColoring& c, const Path& p) {
  if (!is_simple_path(g, p)) return false;
  std::vector<Color> seen;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    seen.push_back(c[*g.edge_index(p.vertices[i - 1], p.vertices[i])]);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

namespace detail {

PathSearch::PathSearch(const Graph& g, const std::vector<std::vector<int>>& dist)
    : graph_(&g), dist_(&dist), visited_(g.order() + 1, 0) {}

void PathSearch::set_coloring(std::span<const int> dense_colors, int palette) {
  colors_ = dense_colors;
  used_.assign(palette, 0);
}

bool PathSearch::rainbow(Vertex u, Vertex v, int max_len) {
  trail_.assign(1, u);
  visited_[u] = 1;
  bool found = rainbow_from(u, v, max_len);
  visited_[u] = 0;
  return found;
}

bool PathSearch::rainbow_from(Vertex w, Vertex target, int remaining) {
  if (w == target) return true;
  const auto& to_target = (*dist_)[target];
  for (const Neighbor& nb : graph_->neighbors(w)) {
    const int color = colors_[nb.edge];
    if (visited_[nb.vertex] || used_[color]) continue;
    if (to_target[nb.vertex] > remaining - 1) continue;
    visited_[nb.vertex] = 1;
    used_[color] = 1;
    trail_.push_back(nb.vertex);
    const bool found = rainbow_from(nb.vertex, target, remaining - 1);
    visited_[nb.vertex] = 0;
    used_[color] = 0;
    if (found) {
      // Leave the trail intact but restore the scratch flags above it.
      return true;
    }
    trail_.pop_back();
  }
  return false;
}

bool PathSearch::geodesic(Vertex u, Vertex v) {
  // Walk back from v through BFS predecessors of u's shortest-path DAG.
  trail_.assign(1, v);
  bool found = geodesic_to(v, u);
  if (found) std::reverse(trail_.begin(), trail_.end());
  return found;
}

bool PathSearch::geodesic_to(Vertex w, Vertex source) {
  if (w == source) return true;
  const auto& from_source = (*dist_)[source];
  for (const Neighbor& nb : graph_->neighbors(w)) {
    if (from_source[nb.vertex] != from_source[w] - 1) continue;
    const int color = colors_[nb.edge];
    if (used_[color]) continue;
    used_[color] = 1;
    trail_.push_back(nb.vertex);
    const bool found = geodesic_to(nb.vertex, source);
    used_[color] = 0;
    if (found) return true;
    trail_.pop_back();
  }
  return false;
}

}  // namespace detail

std::optional<Path> exists_rainbow_path(const Graph& g, const EdgeColoring& c, Vertex u,
                                        Vertex v, int max_len) {
  check_pair(g, u, v);
  check_length_cap(g, max_len);
  require_total(g, c);
  const auto palette = c.palette();
  const auto dense = densify(c, palette);
  const auto dist = all_pairs_distances(g);
  detail::PathSearch search(g, dist);
  search.set_coloring(dense, static_cast<int>(palette.size()));
  if (!search.rainbow(u, v, max_len)) return std::nullopt;
  return Path{search.trail()};
}

VerificationReport is_rainbow_connected(const Graph& g, const EdgeColoring& c,
                                        const VerifyOptions& options) {
  return verify(g, c, VerifyMode::kRainbow, options);
}

VerificationReport is_strong_rainbow_connected(const Graph& g, const EdgeColoring& c,
                                               const VerifyOptions& options) {
  return verify(g, c, VerifyMode::kStrongRainbow, options);
}

std::vector<Path> enumerate_paths_up_to(const Graph& g, Vertex u, Vertex v, int l) {
  check_pair(g, u, v);
  check_length_cap(g, l);
  std::vector<Path> out;
  std::vector<char> visited(g.order() + 1, 0);
  std::vector<Vertex> trail{u};
  visited[u] = 1;
  collect_paths(g, u, v, l, visited, trail, out);
  return out;
}

ConnectivityChecker::ConnectivityChecker(const Graph& g, VerifyMode mode)
    : mode_(mode), dist_(all_pairs_distances(g)), search_(g, dist_) {
  require_connected(g);
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      if (dist_[u][v] >= 2) pairs_.push_back({u, v});
    }
  }
  // Distant pairs fail most often, so test them first.
  std::stable_sort(pairs_.begin(), pairs_.end(), [&](const VertexPair& a, const VertexPair& b) {
    return dist_[a.u][a.v] > dist_[b.u][b.v];
  });
}

bool ConnectivityChecker::accepts(std::span<const int> dense_colors, int palette) {
  search_.set_coloring(dense_colors, palette);
  const int cap = static_cast<int>(dist_.size()) - 2;  // n - 1
  for (const auto& [u, v] : pairs_) {
    bool ok = mode_ == VerifyMode::kRainbow ? search_.rainbow(u, v, cap) : search_.geodesic(u, v);
    if (!ok) return false;
  }
  return true;
}

}  // namespace rainbow
