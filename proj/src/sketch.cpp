#include "subcount/sketch.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "subcount/rng.hpp"

namespace subcount {

namespace {

constexpr std::uint64_t kColorStream = 0x636f6c6f72ULL;
constexpr std::uint64_t kKeepStream = 0x6b656570ULL;

double materialize_q(double p, const Rat& w) {
  if (w == 0) return 1.0;
  if (w == 1) return p;
  if (w == Rat(1, 2)) return std::sqrt(p);
  return std::pow(p, rat_to_double(w));
}

}  // namespace

std::uint64_t pack_colors(const std::vector<int>& sorted_colors) {
  std::uint64_t key = static_cast<std::uint64_t>(sorted_colors.size()) << 48;
  for (std::size_t i = 0; i < sorted_colors.size(); ++i)
    key |= static_cast<std::uint64_t>(sorted_colors[i]) << (4 * i);
  return key;
}

SketchConfig SketchConfig::make(
    PatternGraph pattern, FractionalCover cover, double p, std::uint64_t seed,
    std::shared_ptr<const std::unordered_map<std::uint64_t, int>> fixed_coloring) {
  if (pattern.edges.empty()) fail(Errc::EmptyPattern, "sketch needs a pattern with hyperedges");
  if (!pattern.connected()) fail(Errc::Disconnected, "sketch needs a connected pattern");
  if (!(p > 0.0) || p > 1.0) fail(Errc::ParameterDomain, "p must lie in (0, 1]");
  if (cover.vertex_weights.size() != static_cast<std::size_t>(pattern.k))
    fail(Errc::ConfigMismatch, "cover size does not match pattern");
  for (const auto& w : cover.vertex_weights)
    if (w < 0) fail(Errc::ParameterDomain, "negative cover weight");
  SketchConfig c;
  c.pattern = std::move(pattern);
  c.cover = std::move(cover);
  c.p = p;
  c.seed = seed;
  c.fixed_coloring = std::move(fixed_coloring);
  c.q.reserve(c.pattern.k);
  for (int a = 0; a < c.pattern.k; ++a)
    c.q.push_back(materialize_q(p, c.cover.vertex_weights[a]));
  c.arity_present.assign(static_cast<std::size_t>(c.pattern.max_arity()) + 1, 0);
  for (const auto& e : c.pattern.edges) {
    c.arity_present[e.size()] = 1;
    c.edge_keys.push_back(pack_colors(e));
  }
  std::sort(c.edge_keys.begin(), c.edge_keys.end());
  c.edge_keys.erase(std::unique(c.edge_keys.begin(), c.edge_keys.end()), c.edge_keys.end());
  return c;
}

int SketchConfig::chi(std::uint64_t v) const {
  if (fixed_coloring) {
    auto it = fixed_coloring->find(v);
    if (it != fixed_coloring->end()) return it->second;
  }
  return static_cast<int>(hash64(seed, kColorStream, v) % static_cast<std::uint64_t>(pattern.k));
}

double SketchConfig::keep_unit(std::uint64_t v) const {
  return to_unit(hash64(seed, kKeepStream, v));
}

bool SketchConfig::keep_vertex(std::uint64_t v) const {
  return keep_unit(v) < q[static_cast<std::size_t>(chi(v))];
}

bool SketchConfig::operator==(const SketchConfig& o) const {
  if (pattern != o.pattern || cover != o.cover || seed != o.seed) return false;
  if (std::bit_cast<std::uint64_t>(p) != std::bit_cast<std::uint64_t>(o.p)) return false;
  if (!fixed_coloring != !o.fixed_coloring) return false;
  if (fixed_coloring && *fixed_coloring != *o.fixed_coloring) return false;
  return true;
}

SketchState make_sketch(SketchConfig config) {
  SketchState s;
  s.config = std::move(config);
  return s;
}

namespace {

// Applies a signed delta to one retained counter, maintaining the
// only-nonzero-entries invariant and the negativity bookkeeping.
void bump_counter(SketchState& s, const DataEdge& e, std::int64_t delta,
                  const EdgeStreamUpdate* cause) {
  if (delta == 0) return;
  auto it = s.retained.find(e);
  std::int64_t old = it == s.retained.end() ? 0 : it->second;
  std::int64_t now = old + delta;
  if (old >= 0 && now < 0) {
    ++s.negative_counters;
    if (!s.first_negative && cause) s.first_negative = *cause;
  } else if (old < 0 && now >= 0) {
    if (--s.negative_counters == 0) s.first_negative.reset();
  }
  if (now == 0) {
    if (it != s.retained.end()) s.retained.erase(it);
  } else if (it == s.retained.end()) {
    s.retained.emplace(e, now);
  } else {
    it->second = now;
  }
}

}  // namespace

namespace detail {
void bump_counter_raw(SketchState& s, const DataEdge& e, std::int64_t delta,
                      const EdgeStreamUpdate* cause) {
  bump_counter(s, e, delta, cause);
}
}  // namespace detail

void update(SketchState& s, const EdgeStreamUpdate& u) {
  ++s.updates_seen;
  const SketchConfig& c = s.config;
  std::size_t arity = u.edge.v.size();
  if (arity >= c.arity_present.size() || !c.arity_present[arity]) return;
  std::vector<int> cols;
  cols.reserve(arity);
  for (std::uint64_t v : u.edge.v) cols.push_back(c.chi(v));
  std::sort(cols.begin(), cols.end());
  for (std::size_t i = 1; i < cols.size(); ++i)
    if (cols[i] == cols[i - 1]) return;  // not colorful
  if (!std::binary_search(c.edge_keys.begin(), c.edge_keys.end(), pack_colors(cols))) return;
  for (std::uint64_t v : u.edge.v)
    if (!c.keep_vertex(v)) return;
  bump_counter(s, u.edge, u.sign, &u);
}

void update_all(SketchState& s, const Stream& stream) {
  for (const auto& u : stream) update(s, u);
}

void merge_into(SketchState& into, const SketchState& other) {
  if (!(into.config == other.config)) fail(Errc::ConfigMismatch, "sketch configs differ");
  for (const auto& [e, cnt] : other.retained) bump_counter(into, e, cnt, nullptr);
  into.updates_seen += other.updates_seen;
  if (into.negative_counters == 0) {
    into.first_negative.reset();
  } else if (!into.first_negative) {
    into.first_negative = other.first_negative;
  }
}

SketchState merge(const SketchState& a, const SketchState& b) {
  SketchState out = a;
  merge_into(out, b);
  return out;
}

std::size_t retained_count(const SketchState& s) {
  std::size_t n = 0;
  for (const auto& [e, c] : s.retained) n += c >= 1;
  return n;
}

std::int64_t colorful_copies(const SketchState& s) {
  if (s.strict_violation())
    fail(Errc::StrictViolation, "sketch holds a negative counter; stream or shard was invalid");
  const PatternGraph& h = s.config.pattern;

  // retained edges grouped by pattern edge (= their color image), with the
  // color -> data vertex binding precomputed
  struct Realization {
    std::vector<std::pair<int, std::uint64_t>> bind;  // (color, vertex)
  };
  std::unordered_map<std::uint64_t, std::vector<Realization>> groups;
  for (const auto& [e, cnt] : s.retained) {
    if (cnt < 1) continue;
    Realization r;
    r.bind.reserve(e.v.size());
    std::vector<int> cols;
    cols.reserve(e.v.size());
    for (std::uint64_t v : e.v) {
      int c = s.config.chi(v);
      r.bind.emplace_back(c, v);
      cols.push_back(c);
    }
    std::sort(cols.begin(), cols.end());
    groups[pack_colors(cols)].push_back(std::move(r));
  }

  // connected order over H's hyperedges: each shares a vertex with an earlier
  // one, so partial assignments stay anchored
  std::vector<std::size_t> edge_order;
  std::vector<bool> edge_used(h.edges.size(), false);
  std::vector<bool> vert_seen(h.k, false);
  edge_order.push_back(0);
  edge_used[0] = true;
  for (int v : h.edges[0]) vert_seen[v] = true;
  while (edge_order.size() < h.edges.size()) {
    bool advanced = false;
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      if (edge_used[i]) continue;
      bool touches = false;
      for (int v : h.edges[i]) touches |= vert_seen[v];
      if (!touches) continue;
      edge_order.push_back(i);
      edge_used[i] = true;
      for (int v : h.edges[i]) vert_seen[v] = true;
      advanced = true;
      break;
    }
    if (!advanced) fail(Errc::Disconnected, "pattern is not connected");
  }

  std::vector<std::uint64_t> image(h.k, 0);
  std::vector<bool> bound(h.k, false);
  std::int64_t copies = 0;

  auto key_of = [&](std::size_t ei) { return pack_colors(h.edges[ei]); };

  std::function<void(std::size_t)> go = [&](std::size_t depth) {
    if (depth == edge_order.size()) {
      ++copies;
      return;
    }
    auto git = groups.find(key_of(edge_order[depth]));
    if (git == groups.end()) return;
    for (const Realization& r : git->second) {
      std::vector<int> newly;
      bool ok = true;
      for (auto [c, v] : r.bind) {
        if (bound[c]) {
          if (image[c] != v) {
            ok = false;
            break;
          }
        } else {
          bound[c] = true;
          image[c] = v;
          newly.push_back(c);
        }
      }
      if (ok) go(depth + 1);
      for (int c : newly) bound[c] = false;
    }
  };
  go(0);
  return copies;
}

bool states_equal(const SketchState& a, const SketchState& b) {
  return a.config == b.config && a.retained == b.retained && a.updates_seen == b.updates_seen;
}

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}
void put_u64(std::vector<std::uint8_t>& out, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}
void put_i64(std::vector<std::uint8_t>& out, std::int64_t x) {
  put_u64(out, static_cast<std::uint64_t>(x));
}

struct Reader {
  const std::vector<std::uint8_t>& b;
  std::size_t at = 0;
  std::uint8_t byte() {
    if (at >= b.size()) fail(Errc::Malformed, "truncated sketch blob");
    return b[at++];
  }
  std::uint32_t u32() {
    std::uint32_t x = 0;
    for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(byte()) << (8 * i);
    return x;
  }
  std::uint64_t u64() {
    std::uint64_t x = 0;
    for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(byte()) << (8 * i);
    return x;
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
};

constexpr std::uint8_t kMagic[4] = {'S', 'C', 'S', 'K'};
constexpr std::uint32_t kVersion = 1;

}  // namespace

std::vector<std::uint8_t> serialize_sketch(const SketchState& s) {
  if (s.config.fixed_coloring)
    fail(Errc::Malformed, "sketches with a fixed coloring are not serializable");
  std::vector<std::uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u32(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(s.config.pattern.k));
  put_u64(out, std::bit_cast<std::uint64_t>(s.config.p));
  put_u64(out, s.config.seed);
  put_u64(out, s.updates_seen);
  for (const auto& w : s.config.cover.vertex_weights) {
    put_i64(out, rat_num_i64(w));
    put_i64(out, rat_den_i64(w));
  }
  put_u64(out, s.retained.size());
  for (const auto& [e, c] : s.retained) {
    put_u32(out, static_cast<std::uint32_t>(e.v.size()));
    for (std::uint64_t v : e.v) put_u64(out, v);
    put_i64(out, c);
  }
  return out;
}

SketchState deserialize_sketch(const PatternGraph& pattern,
                               const std::vector<std::uint8_t>& bytes) {
  Reader r{bytes};
  for (std::uint8_t m : kMagic)
    if (r.byte() != m) fail(Errc::Malformed, "bad sketch magic");
  if (r.u32() != kVersion) fail(Errc::Malformed, "unsupported sketch version");
  std::uint32_t k = r.u32();
  if (k != static_cast<std::uint32_t>(pattern.k))
    fail(Errc::ConfigMismatch, "sketch was built for a different pattern size");
  double p = std::bit_cast<double>(r.u64());
  std::uint64_t seed = r.u64();
  std::uint64_t seen = r.u64();
  FractionalCover cover;
  cover.value = 0;
  for (std::uint32_t a = 0; a < k; ++a) {
    std::int64_t num = r.i64();
    std::int64_t den = r.i64();
    cover.vertex_weights.push_back(make_rat(num, den));
    cover.value += cover.vertex_weights.back();
  }
  SketchState s = make_sketch(SketchConfig::make(pattern, std::move(cover), p, seed));
  s.updates_seen = seen;
  std::uint64_t n = r.u64();
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint32_t arity = r.u32();
    std::vector<std::uint64_t> ids;
    ids.reserve(arity);
    for (std::uint32_t j = 0; j < arity; ++j) ids.push_back(r.u64());
    std::int64_t c = r.i64();
    if (c == 0) fail(Errc::Malformed, "zero counter in sketch blob");
    DataEdge e{std::move(ids)};
    if (!std::is_sorted(e.v.begin(), e.v.end()) ||
        std::adjacent_find(e.v.begin(), e.v.end()) != e.v.end())
      fail(Errc::Malformed, "unsorted edge record in sketch blob");
    if (c < 0) ++s.negative_counters;
    if (!s.retained.emplace(std::move(e), c).second)
      fail(Errc::Malformed, "duplicate edge record in sketch blob");
  }
  if (r.at != bytes.size()) fail(Errc::Malformed, "trailing bytes in sketch blob");
  return s;
}

}  // namespace subcount
