#pragma once

// Enumeration of simple graphs on up to 7 vertices, one representative per
// isomorphism class. Built by vertex augmentation: every graph on i+1
// vertices arises by deleting some vertex, so extending every i-vertex
// representative by one vertex with every neighbor subset reaches all
// classes. Dedup is a brute-force canonical form: the minimum edge bitmask
// over all k! relabelings.

#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace subcount::testsupport {

struct SmallGraph {
  int k = 0;
  std::vector<std::pair<int, int>> edges;  // a < b
};

inline std::uint32_t edge_bit(int k, int a, int b) {
  if (a > b) std::swap(a, b);
  std::uint32_t idx = 0;
  for (int i = 0; i < a; ++i) idx += static_cast<std::uint32_t>(k - 1 - i);
  return idx + static_cast<std::uint32_t>(b - a - 1);
}

inline std::uint32_t canonical_mask(const SmallGraph& g) {
  std::vector<int> perm(g.k);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~0u;
  do {
    std::uint32_t mask = 0;
    for (auto [a, b] : g.edges) mask |= 1u << edge_bit(g.k, perm[a], perm[b]);
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool small_connected(const SmallGraph& g) {
  if (g.k == 0) return false;
  std::vector<int> root(g.k);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  int comps = g.k;
  for (auto [a, b] : g.edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      root[ra] = rb;
      --comps;
    }
  }
  return comps == 1;
}

// All graphs on exactly k vertices up to isomorphism (isolated vertices
// allowed). Sizes follow 1, 2, 4, 11, 34, 156, 1044.
inline std::vector<SmallGraph> all_graphs(int k) {
  std::vector<SmallGraph> level = {SmallGraph{1, {}}};
  for (int size = 2; size <= k; ++size) {
    std::set<std::uint32_t> seen;
    std::vector<SmallGraph> next;
    for (const auto& g : level) {
      for (std::uint32_t sub = 0; sub < (1u << (size - 1)); ++sub) {
        SmallGraph ext{size, g.edges};
        for (int v = 0; v < size - 1; ++v)
          if (sub >> v & 1u) ext.edges.emplace_back(v, size - 1);
        if (seen.insert(canonical_mask(ext)).second) next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  return level;
}

// Connected graphs on exactly k vertices up to isomorphism. Sizes follow
// 1, 1, 2, 6, 21, 112, 853.
inline std::vector<SmallGraph> connected_graphs(int k) {
  std::vector<SmallGraph> out;
  for (auto& g : all_graphs(k))
    if (small_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace subcount::testsupport
