#pragma once

#include <cstdint>
#include <optional>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;             // partial assignments visited
  std::uint64_t colorings_tested = 0;  // complete colorings handed to the verifier

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

enum class SolveMode { kRc, kSrc };

struct SolveResult {
  int value = 0;
  EdgeColoring witness;
  SolveMode mode = SolveMode::kRc;
  SearchStats stats;
};

enum class DecideOutcome { kFound, kNo, kBudgetExhausted };

struct Decision {
  DecideOutcome outcome = DecideOutcome::kNo;
  std::optional<EdgeColoring> coloring;  // set iff outcome == kFound
  SearchStats stats;
};

// rc(K_{s,t}) = min(r, 4) where r is the least positive integer with
// r^s >= t. Exact integer arithmetic. Requires 2 <= s <= t.
int kst_rc_formula(long long s, long long t);

// Least r >= 1 with r^s >= t, for s >= 1 and t >= 1.
long long ceil_integer_root(long long t, long long s);

// Searches canonical colorings (the color of edge i is at most one more than
// the largest color on edges 0..i-1) in lexicographic order and returns the
// first one with at most k colors that the verifier for `mode` accepts.
Decision decide_le_k(const Graph& g, int k, SolveMode mode, const SearchBudget& budget = {});

inline Decision decide_rc_le_k(const Graph& g, int k, const SearchBudget& budget = {}) {
  return decide_le_k(g, k, SolveMode::kRc, budget);
}
inline Decision decide_src_le_k(const Graph& g, int k, const SearchBudget& budget = {}) {
  return decide_le_k(g, k, SolveMode::kSrc, budget);
}

// Exact rc(G). Throws BudgetExhausted if the node cap is hit, InputError for
// disconnected input. K_1 yields 0 with an empty witness.
SolveResult rc_exact(const Graph& g, const SearchBudget& budget = {});

// Exact src(G). `known_lower_bound` (e.g. a previously computed rc) raises the
// starting point of the search above diam(G).
SolveResult src_exact(const Graph& g, const SearchBudget& budget = {},
                      std::optional<int> known_lower_bound = std::nullopt);

}  // namespace rainbow
