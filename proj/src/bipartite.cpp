#include "rainbow/bipartite.hpp"

#include <stdexcept>
#include <variant>

#include "rainbow/errors.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

std::string_view to_token(Rc2Reason reason) {
  switch (reason) {
    case Rc2Reason::kNotCompleteBipartite:
      return "not-complete-bipartite";
    case Rc2Reason::kStarWithTNot2:
      return "star-with-t≠2";
    case Rc2Reason::kTExceeds2PowS:
      return "t-exceeds-2^s";
    case Rc2Reason::kTEqualsOne:
      return "t-equals-1";
    case Rc2Reason::kFormulaAccepts:
      return "formula-accepts";
  }
  return "unknown";
}

bool within_power_of_two(long long t, long long s, std::uint64_t* steps) {
  long long acc = 1;
  for (long long i = 0; i < s; ++i) {
    if (acc >= t) break;
    if (steps) ++*steps;
    // One more doubling passes t; stop before it can overflow.
    if (acc > t / 2) return true;
    acc *= 2;
  }
  return t <= acc;
}

Rc2Decision decide_bipartite_rc2(const Graph& g, bool with_witness) {
  Rc2Decision d;
  const auto n = static_cast<std::uint64_t>(g.order());
  const auto m = static_cast<std::uint64_t>(g.size());
  // Bipartition by BFS, then either the count test m = |X||Y| or a scan of
  // cross pairs for the first missing one.
  auto shape = complete_bipartite_params(g);
  d.work += n + 2 * m;
  if (auto* refusal = std::get_if<NotCompleteBipartite>(&shape)) {
    if (refusal->odd_cycle) {
      throw InputError(ErrorKind::kNotBipartite, "graph is not bipartite");
    }
    d.work += n * n;
    d.reason = Rc2Reason::kNotCompleteBipartite;
    d.missing_pair = refusal->missing_pair;
    return d;
  }
  const auto params = std::get<CompleteBipartiteParams>(shape);
  d.params = params;
  d.work += 1;
  if (params.t == 1) {
    d.reason = Rc2Reason::kTEqualsOne;
  } else if (params.s == 1 && params.t != 2) {
    d.reason = Rc2Reason::kStarWithTNot2;
  } else if (!within_power_of_two(params.t, params.s, &d.work)) {
    d.reason = Rc2Reason::kTExceeds2PowS;
  } else {
    d.answer = true;
    d.reason = Rc2Reason::kFormulaAccepts;
    if (with_witness) d.witness = witness_2_coloring(g);
  }
  return d;
}

EdgeColoring witness_2_coloring(const Graph& g) {
  if (!decide_bipartite_rc2(g).answer) {
    throw InputError(ErrorKind::kPrecondition, "rc(G) != 2, no rainbow 2-coloring exists");
  }
  // Existence is guaranteed, so the search runs without a node cap.
  Decision d = decide_rc_le_k(g, 2, SearchBudget{UINT64_MAX});
  if (d.outcome != DecideOutcome::kFound) {
    throw std::logic_error("canonical search found no rainbow 2-coloring");
  }
  return std::move(*d.coloring);
}

}  // namespace rainbow
