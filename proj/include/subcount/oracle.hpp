#pragma once

#include <cstdint>
#include <unordered_map>

#include "subcount/hypergraph.hpp"

namespace subcount {

struct CopyCount {
  std::int64_t copies = 0;          // injective_homs / |Aut(H)|
  std::int64_t injective_homs = 0;  // injective maps V_H -> V_G preserving hyperedges
};

struct OracleOptions {
  std::uint64_t node_cap = 50'000'000;  // visited search nodes before giving up
};

// Exact not-induced copy count of connected H in G by backtracking over a
// connected vertex order of H. Extra edges inside a copy are allowed.
CopyCount exact_count(const DataGraph& g, const PatternGraph& h,
                      const OracleOptions& opts = {});

// Copies that respect a fixed assignment of data vertices to pattern
// vertices: counts vertex sets S whose assigned pattern vertices are exactly
// V_H and whose required hyperedges are present. Unassigned data vertices
// never participate.
std::int64_t exact_count_labeled(
    const DataGraph& g, const PatternGraph& h,
    const std::unordered_map<std::uint64_t, int>& assignment,
    const OracleOptions& opts = {});

}  // namespace subcount
