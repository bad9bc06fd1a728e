#include "subcount/oracle.hpp"

#include <algorithm>
#include <set>

#include "subcount/pattern.hpp"

namespace subcount {

namespace {

// Vertex order of H in which every vertex after the first shares a hyperedge
// with an earlier one. Exists exactly when H is connected.
std::vector<int> connected_order(const PatternGraph& h) {
  std::vector<int> order;
  std::vector<bool> placed(h.k, false);
  order.push_back(0);
  placed[0] = true;
  while (static_cast<int>(order.size()) < h.k) {
    int next = -1;
    for (const auto& e : h.edges) {
      bool touches = false;
      for (int v : e) touches |= placed[v];
      if (!touches) continue;
      for (int v : e)
        if (!placed[v]) {
          next = v;
          break;
        }
      if (next >= 0) break;
    }
    if (next < 0) fail(Errc::Disconnected, "pattern is not connected");
    order.push_back(next);
    placed[next] = true;
  }
  return order;
}

struct Search {
  const DataGraph* g;
  const PatternGraph* h;
  std::uint64_t node_cap;
  const std::unordered_map<std::uint64_t, int>* assignment = nullptr;  // labeled mode

  std::vector<int> order;                    // pattern vertices, connected order
  std::vector<int> pos;                      // inverse of order
  std::vector<std::vector<int>> edges_done;  // H-edge indices fully mapped at depth d
  std::vector<int> anchor_edge;              // H-edge used to enumerate candidates at depth d
  std::unordered_map<std::uint64_t, std::vector<const DataEdge*>> adj;

  std::vector<std::uint64_t> image;  // pattern vertex -> data vertex
  std::set<std::uint64_t> used;
  std::uint64_t nodes = 0;
  std::int64_t homs = 0;

  void prepare() {
    order = connected_order(*h);
    pos.assign(h->k, 0);
    for (int d = 0; d < h->k; ++d) pos[order[d]] = d;
    edges_done.resize(h->k);
    anchor_edge.assign(h->k, -1);
    for (std::size_t i = 0; i < h->edges.size(); ++i) {
      int maxpos = 0;
      for (int v : h->edges[i]) maxpos = std::max(maxpos, pos[v]);
      edges_done[maxpos].push_back(static_cast<int>(i));
    }
    // candidate anchor: for depth d, a hyperedge containing order[d] and some
    // earlier vertex, with as many earlier vertices as possible
    for (int d = 1; d < h->k; ++d) {
      int best = -1, best_placed = -1;
      for (std::size_t i = 0; i < h->edges.size(); ++i) {
        const auto& e = h->edges[i];
        if (std::find(e.begin(), e.end(), order[d]) == e.end()) continue;
        int n_placed = 0;
        for (int v : e) n_placed += pos[v] < d;
        if (n_placed > best_placed) {
          best_placed = n_placed;
          best = static_cast<int>(i);
        }
      }
      if (best_placed < 1) fail(Errc::Disconnected, "pattern is not connected");
      anchor_edge[d] = best;
    }
    for (const auto& [e, c] : g->edges())
      for (std::uint64_t v : e.v) adj[v].push_back(&e);
    image.assign(h->k, 0);
  }

  bool admissible(int hv, std::uint64_t x) const {
    if (used.count(x)) return false;
    if (assignment) {
      auto it = assignment->find(x);
      if (it == assignment->end() || it->second != hv) return false;
    }
    return true;
  }

  // all hyperedges completed by placing depth d must be present
  bool edges_ok(int d) const {
    for (int ei : edges_done[d]) {
      std::vector<std::uint64_t> ids;
      ids.reserve(h->edges[ei].size());
      for (int v : h->edges[ei]) ids.push_back(image[v]);
      std::sort(ids.begin(), ids.end());
      if (g->count(DataEdge{std::move(ids)}) < 1) return false;
    }
    return true;
  }

  void bump() {
    if (++nodes > node_cap) fail(Errc::SearchCapExceeded, "oracle search cap exceeded");
  }

  void go(int d) {
    if (d == h->k) {
      ++homs;
      return;
    }
    const int hv = order[d];
    if (d == 0) {
      // first vertex ranges over all data vertices on present edges
      std::set<std::uint64_t> seen;
      for (const auto& [e, c] : g->edges())
        for (std::uint64_t x : e.v) seen.insert(x);
      for (std::uint64_t x : seen) {
        bump();
        if (!admissible(hv, x)) continue;
        image[hv] = x;
        used.insert(x);
        if (edges_ok(0)) go(1);
        used.erase(x);
      }
      return;
    }
    const auto& anchor = h->edges[anchor_edge[d]];
    // mapped part of the anchor edge narrows the candidate pool
    std::vector<std::uint64_t> mapped;
    std::uint64_t probe = 0;
    for (int v : anchor)
      if (pos[v] < d) {
        mapped.push_back(image[v]);
        probe = image[v];
      }
    std::sort(mapped.begin(), mapped.end());
    std::set<std::uint64_t> cands;
    auto it = adj.find(probe);
    if (it == adj.end()) return;
    for (const DataEdge* de : it->second) {
      if (de->v.size() != anchor.size()) continue;
      if (!std::includes(de->v.begin(), de->v.end(), mapped.begin(), mapped.end())) continue;
      for (std::uint64_t x : de->v)
        if (!std::binary_search(mapped.begin(), mapped.end(), x)) cands.insert(x);
    }
    for (std::uint64_t x : cands) {
      bump();
      if (!admissible(hv, x)) continue;
      image[hv] = x;
      used.insert(x);
      if (edges_ok(d)) go(d + 1);
      used.erase(x);
    }
  }
};

void check_pattern(const PatternGraph& h) {
  if (h.edges.empty()) fail(Errc::EmptyPattern, "counting needs at least one hyperedge");
  if (!h.connected()) fail(Errc::Disconnected, "counting needs a connected pattern");
}

}  // namespace

CopyCount exact_count(const DataGraph& g, const PatternGraph& h, const OracleOptions& opts) {
  check_pattern(h);
  std::int64_t aut = automorphism_count(h);
  Search s;
  s.g = &g;
  s.h = &h;
  s.node_cap = opts.node_cap;
  s.prepare();
  s.go(0);
  if (s.homs % aut != 0)
    throw std::logic_error("injective hom count not divisible by automorphism count");
  return CopyCount{s.homs / aut, s.homs};
}

std::int64_t exact_count_labeled(const DataGraph& g, const PatternGraph& h,
                                 const std::unordered_map<std::uint64_t, int>& assignment,
                                 const OracleOptions& opts) {
  check_pattern(h);
  Search s;
  s.g = &g;
  s.h = &h;
  s.node_cap = opts.node_cap;
  s.assignment = &assignment;
  s.prepare();
  s.go(0);
  return s.homs;
}

}  // namespace subcount
