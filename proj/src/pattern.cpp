#include "subcount/pattern.hpp"

#include <algorithm>

namespace subcount {

namespace {

struct AutSearch {
  int k;
  std::vector<bool> edge_mask;                // indexed by vertex bitmask
  std::vector<std::vector<std::uint32_t>> edges_by_max;  // edge bitmasks, by largest vertex
  std::vector<int> image;
  std::vector<bool> used;
  std::int64_t count = 0;

  void go(int depth) {
    if (depth == k) {
      ++count;
      return;
    }
    for (int img = 0; img < k; ++img) {
      if (used[img]) continue;
      image[depth] = img;
      used[img] = true;
      bool ok = true;
      // every edge whose largest vertex is `depth` is now fully mapped
      for (std::uint32_t em : edges_by_max[depth]) {
        std::uint32_t mapped = 0;
        for (int v = 0; v <= depth; ++v)
          if (em & (1u << v)) mapped |= 1u << image[v];
        if (!edge_mask[mapped]) {
          ok = false;
          break;
        }
      }
      if (ok) go(depth + 1);
      used[img] = false;
    }
  }
};

}  // namespace

std::int64_t automorphism_count(const PatternGraph& h) {
  if (h.k > 12) fail(Errc::TooLarge, "automorphism counting capped at 12 vertices");
  AutSearch s;
  s.k = h.k;
  s.edge_mask.assign(1u << h.k, false);
  s.edges_by_max.resize(h.k);
  for (const auto& e : h.edges) {
    std::uint32_t m = 0;
    for (int v : e) m |= 1u << v;
    s.edge_mask[m] = true;
    s.edges_by_max[e.back()].push_back(m);  // edges are sorted; back() is the max
  }
  s.image.assign(h.k, 0);
  s.used.assign(h.k, false);
  s.go(0);
  return s.count;
}

PatternAnalysis analyze(const PatternGraph& h) {
  PatternAnalysis a;
  a.k = h.k;
  a.automorphisms = automorphism_count(h);
  a.connected = h.connected();
  a.arity_multiset = h.arity_multiset();
  return a;
}

}  // namespace subcount
