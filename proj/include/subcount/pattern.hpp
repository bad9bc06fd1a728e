#pragma once

#include <cstdint>
#include <vector>

#include "subcount/hypergraph.hpp"

namespace subcount {

struct PatternAnalysis {
  int k = 0;
  std::int64_t automorphisms = 0;
  bool connected = false;
  std::vector<int> arity_multiset;
};

// |Aut(H)| by backtracking over vertex images with edge-preservation pruning.
// Exact for k <= 12; larger patterns are refused (TooLarge).
std::int64_t automorphism_count(const PatternGraph& h);

PatternAnalysis analyze(const PatternGraph& h);

}  // namespace subcount
