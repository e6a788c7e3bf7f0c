#include "rainbow/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

long long ceil_integer_root(long long t, long long s) {
  if (s < 1 || t < 1) {
    throw InputError(ErrorKind::kPrecondition, "integer root needs s >= 1 and t >= 1");
  }
  // r^s >= t, evaluated without overflow by stopping once the product reaches t.
  auto reaches = [&](long long r) {
    if (r == 1) return t == 1;
    long long acc = 1;
    for (long long i = 0; i < s; ++i) {
      if (acc >= t / r + (t % r != 0)) return true;  // acc * r >= t
      acc *= r;
    }
    return acc >= t;
  };
  long long lo = 1;
  long long hi = t;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (reaches(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

int kst_rc_formula(long long s, long long t) {
  if (s < 2 || s > t) {
    throw InputError(ErrorKind::kPrecondition,
                     "formula needs 2 <= s <= t, got s=" + std::to_string(s) +
                         " t=" + std::to_string(t));
  }
  return static_cast<int>(std::min<long long>(ceil_integer_root(t, s), 4));
}

namespace {

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, int k, SolveMode mode, const SearchBudget& budget)
      : g_(g),
        k_(k),
        checker_(g, mode == SolveMode::kRc ? VerifyMode::kRainbow : VerifyMode::kStrongRainbow),
        budget_(budget),
        colors_(g.size(), 0),
        diameter_(diameter(g)) {}

  Decision run() {
    Decision d;
    if (k_ >= diameter_ || g_.size() == 0) {
      try {
        if (descend(0, 0)) {
          std::vector<Color> ids(colors_.size());
          std::transform(colors_.begin(), colors_.end(), ids.begin(),
                         [](int c) { return c + 1; });
          d.outcome = DecideOutcome::kFound;
          d.coloring = EdgeColoring(g_, std::move(ids));
        }
      } catch (const BudgetExhausted&) {
        d.outcome = DecideOutcome::kBudgetExhausted;
      }
    }
    d.stats = stats_;
    return d;
  }

 private:
  // colors_[0..edge) fixed with `used` distinct colors 0..used-1.
  bool descend(int edge, int used) {
    if (edge == g_.size()) {
      ++stats_.colorings_tested;
      return checker_.accepts(colors_, used);
    }
    // Every rainbow coloring needs at least diam(G) colors.
    if (used + (g_.size() - edge) < diameter_) return false;
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (++stats_.nodes > budget_.max_nodes) {
        throw BudgetExhausted("search exceeded " + std::to_string(budget_.max_nodes) +
                              " nodes");
      }
      colors_[edge] = c;
      if (descend(edge + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  ConnectivityChecker checker_;
  SearchBudget budget_;
  std::vector<int> colors_;
  int diameter_;
  SearchStats stats_;
};

EdgeColoring uniform_coloring(const Graph& g) {
  return EdgeColoring(g, std::vector<Color>(g.size(), 1));
}

EdgeColoring distinct_coloring(const Graph& g) {
  std::vector<Color> ids(g.size());
  std::iota(ids.begin(), ids.end(), 1);
  return EdgeColoring(g, std::move(ids));
}

SearchBudget remaining(const SearchBudget& budget, const SearchStats& spent) {
  return {budget.max_nodes > spent.nodes ? budget.max_nodes - spent.nodes : 0};
}

SolveResult climb(const Graph& g, int from, SolveMode mode, const SearchBudget& budget) {
  SolveResult result;
  result.mode = mode;
  for (int k = from; k <= g.size(); ++k) {
    Decision d = decide_le_k(g, k, mode, remaining(budget, result.stats));
    result.stats.nodes += d.stats.nodes;
    result.stats.colorings_tested += d.stats.colorings_tested;
    if (d.outcome == DecideOutcome::kBudgetExhausted) {
      throw BudgetExhausted("search budget of " + std::to_string(budget.max_nodes) +
                            " nodes exhausted at k=" + std::to_string(k));
    }
    if (d.outcome == DecideOutcome::kFound) {
      result.value = k;
      result.witness = std::move(*d.coloring);
      return result;
    }
  }
  // All-distinct coloring always qualifies, so k = m must succeed.
  throw std::logic_error("no coloring accepted with m colors");
}

}  // namespace

Decision decide_le_k(const Graph& g, int k, SolveMode mode, const SearchBudget& budget) {
  if (k < 1) {
    throw InputError(ErrorKind::kPrecondition, "k must be positive, got " + std::to_string(k));
  }
  return CanonicalSearch(g, k, mode, budget).run();
}

SolveResult rc_exact(const Graph& g, const SearchBudget& budget) {
  require_connected(g);
  SolveResult result;
  result.mode = SolveMode::kRc;
  if (g.order() == 1) return result;
  if (is_complete(g)) {
    result.value = 1;
    result.witness = uniform_coloring(g);
    return result;
  }
  if (is_tree(g)) {
    // Stars K_{1,t} land here too, with value t.
    result.value = g.order() - 1;
    result.witness = distinct_coloring(g);
    return result;
  }
  auto kst = complete_bipartite_params(g);
  if (auto* p = std::get_if<CompleteBipartiteParams>(&kst); p && p->s >= 2) {
    const int value = kst_rc_formula(p->s, p->t);
    Decision d = decide_rc_le_k(g, value, budget);
    if (d.outcome == DecideOutcome::kBudgetExhausted) {
      throw BudgetExhausted("budget exhausted while searching for a K_{s,t} witness");
    }
    if (d.outcome != DecideOutcome::kFound) {
      throw std::logic_error("no witness found at the K_{s,t} formula value");
    }
    result.value = value;
    result.witness = std::move(*d.coloring);
    result.stats = d.stats;
    return result;
  }
  return climb(g, std::max(1, diameter(g)), SolveMode::kRc, budget);
}

SolveResult src_exact(const Graph& g, const SearchBudget& budget,
                      std::optional<int> known_lower_bound) {
  require_connected(g);
  SolveResult result;
  result.mode = SolveMode::kSrc;
  if (g.order() == 1) return result;
  if (is_complete(g)) {
    result.value = 1;
    result.witness = uniform_coloring(g);
    return result;
  }
  if (is_tree(g)) {
    result.value = g.order() - 1;
    result.witness = distinct_coloring(g);
    return result;
  }
  const int from = std::max({1, diameter(g), known_lower_bound.value_or(1)});
  return climb(g, from, SolveMode::kSrc, budget);
}

}  // namespace rainbow
