#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "rainbow/graph.hpp"

namespace rainbow {

// Seedable source of bounded integers with a fixed, portable definition:
// raw 64-bit words come from std::mt19937_64 (whose output sequence the C++
// standard pins down), and below(b) rejects words >= 2^64 - (2^64 mod b)
// before returning word mod b. Reimplementing these two steps in another
// language reproduces every generated corpus.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

enum class Family {
  kComplete,
  kCompleteBipartite,
  kPath,
  kCycle,
  kStar,
  kRandomTree,
  kRandomConnected,
};

// Throws InputError(kParse) for an unknown name.
Family parse_family(std::string_view name);
std::string_view to_string(Family family);

struct GeneratorSpec {
  Family family = Family::kPath;
  int n = 0;  // complete, path, cycle, random-tree, random-connected
  int s = 0;  // complete-bipartite
  int t = 0;  // complete-bipartite; leaf count of star
  // Edge probability p_num / p_den for random-connected.
  std::uint64_t p_num = 1;
  std::uint64_t p_den = 2;
  std::uint64_t seed = 0;
  int max_attempts = 1000;  // random-connected resampling cap
};

// Deterministic in the spec (including the seed). Every result is connected.
// Vertex layouts: path 1-2-..-n; cycle adds {1,n}; star has centre 1;
// K_{s,t} has sides 1..s and s+1..s+t. random-tree decodes a Pruefer
// sequence whose entries are below(n) + 1; random-connected keeps each pair
// u < v (lexicographic) when below(p_den) < p_num and resamples until
// connected.
Graph generate(const GeneratorSpec& spec);

}  // namespace rainbow
