#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "subcount/cover.hpp"
#include "subcount/hypergraph.hpp"

namespace subcount {

// Fixed per-run randomness: a hashed coloring of the vertex universe into
// {0..k-1} and one uniform draw per vertex for the retention test. Both are
// pure functions of (seed, vertex id), so replay order never matters.
struct SketchConfig {
  PatternGraph pattern;
  FractionalCover cover;
  double p = 1.0;
  std::uint64_t seed = 0;
  // p^{w_a} per color, rounded once here and used both for the Bernoulli
  // test and for estimate normalization.
  std::vector<double> q;
  // Optional explicit coloring (exhaustive tests, label-respecting counts).
  // Vertices absent from the map fall back to the hashed color.
  std::shared_ptr<const std::unordered_map<std::uint64_t, int>> fixed_coloring;

  static SketchConfig make(
      PatternGraph pattern, FractionalCover cover, double p, std::uint64_t seed,
      std::shared_ptr<const std::unordered_map<std::uint64_t, int>> fixed_coloring = nullptr);

  int chi(std::uint64_t v) const;
  double keep_unit(std::uint64_t v) const;  // the uniform draw keep_vertex compares
  bool keep_vertex(std::uint64_t v) const;

  bool operator==(const SketchConfig& o) const;

  // lookups derived from the pattern
  std::vector<char> arity_present;       // arity -> does H have such an edge
  std::vector<std::uint64_t> edge_keys;  // sorted packed color sets of E_H
};

std::uint64_t pack_colors(const std::vector<int>& sorted_colors);

struct SketchState {
  SketchConfig config;
  // Only nonzero counters are stored. Counters may run negative while a
  // shard is missing matching insertions; merging restores them.
  std::map<DataEdge, std::int64_t> retained;
  std::uint64_t updates_seen = 0;

  std::int64_t negative_counters = 0;
  std::optional<EdgeStreamUpdate> first_negative;

  bool strict_violation() const { return negative_counters > 0; }
};

SketchState make_sketch(SketchConfig config);

// Processes one turnstile update. Never throws: edges that cannot matter
// (wrong arity, repeated colors, color set not an edge of H, failed
// retention test) only bump updates_seen.
void update(SketchState& s, const EdgeStreamUpdate& u);

void update_all(SketchState& s, const Stream& stream);

// Pointwise counter addition. Configs must match exactly.
void merge_into(SketchState& into, const SketchState& other);
SketchState merge(const SketchState& a, const SketchState& b);

// Number of vertex sets S with chi|S a bijection onto V_H whose required
// hyperedge preimages are all retained. Throws StrictViolation while any
// counter is negative.
std::int64_t colorful_copies(const SketchState& s);

std::size_t retained_count(const SketchState& s);

// Equality of sketch content: config, counters, updates_seen. The
// strict-turnstile diagnostics are deliberately excluded so that shard
// sketches of a valid stream merge back to the whole-stream sketch.
bool states_equal(const SketchState& a, const SketchState& b);

// Versioned little-endian binary layout; records are sorted by edge, so
// equal states serialize to identical bytes. Sketches with a fixed coloring
// are in-memory only and refuse to serialize.
std::vector<std::uint8_t> serialize_sketch(const SketchState& s);
SketchState deserialize_sketch(const PatternGraph& pattern,
                               const std::vector<std::uint8_t>& bytes);

namespace detail {
// Raw counter adjustment; the multi-level driver shares hash work across
// levels and applies deltas directly.
void bump_counter_raw(SketchState& s, const DataEdge& e, std::int64_t delta,
                      const EdgeStreamUpdate* cause);
}  // namespace detail

}  // namespace subcount
