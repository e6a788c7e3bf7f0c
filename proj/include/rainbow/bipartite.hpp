#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

enum class Rc2Reason {
  kNotCompleteBipartite,
  kStarWithTNot2,
  kTExceeds2PowS,
  kTEqualsOne,
  kFormulaAccepts,
};

std::string_view to_token(Rc2Reason reason);

struct Rc2Decision {
  bool answer = false;
  Rc2Reason reason = Rc2Reason::kNotCompleteBipartite;
  std::optional<Edge> missing_pair;              // kNotCompleteBipartite only
  std::optional<CompleteBipartiteParams> params;  // set when G = K_{s,t}
  std::optional<EdgeColoring> witness;           // only when requested and answer is yes
  // Elementary steps spent deciding; stays polynomial in n + m.
  std::uint64_t work = 0;
};

// Decides rc(G) = 2 for a connected bipartite graph without any coloring
// search: yes iff G = K_{s,t} with 1 < t <= 2^s. Non-bipartite or
// disconnected input throws InputError.
Rc2Decision decide_bipartite_rc2(const Graph& g, bool with_witness = false);

// True iff t <= 2^s, by doubling an accumulator that stops once it reaches t.
bool within_power_of_two(long long t, long long s, std::uint64_t* steps = nullptr);

// A rainbow 2-coloring, found by the canonical search restricted to k = 2.
// Throws InputError(kPrecondition) when decide_bipartite_rc2 says no.
EdgeColoring witness_2_coloring(const Graph& g);

}  // namespace rainbow
