#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "subcount/error.hpp"
#include "subcount/rational.hpp"

namespace subcount {

// Pattern hypergraph H on vertex set {0, ..., k-1}. Hyperedges are stored
// strictly sorted, nonempty, pairwise distinct; the edge list itself is kept
// sorted so semantically equal patterns compare equal.
struct PatternGraph {
  int k = 0;
  std::vector<std::vector<int>> edges;
  std::vector<std::string> labels;  // per-vertex tags, "" when absent

  bool is_graph() const;             // every arity == 2
  bool connected() const;            // all k vertices reachable via hyperedges
  std::vector<int> arity_multiset() const;
  int max_arity() const;

  bool operator==(const PatternGraph&) const = default;
};

// Validates and canonicalizes. Throws Malformed / IndexOutOfRange /
// DuplicateEdge / EmptyPattern (k < 1).
PatternGraph make_pattern(int k, std::vector<std::vector<int>> edges,
                          std::vector<std::string> labels = {});

// Text form:
//   # comment
//   k=3
//   e 0 1
//   e 1 2
//   label 0 person
PatternGraph parse_pattern(const std::string& text);
std::string serialize_pattern(const PatternGraph& h);
PatternGraph load_pattern_file(const std::string& path);

// Cover LP input: a multiset of weighted hyperedges. Unlike PatternGraph,
// duplicate and empty hyperedges are legal here.
struct WeightedPattern {
  int k = 0;
  std::vector<std::vector<int>> edges;
  std::vector<Rat> weights;
};

WeightedPattern make_weighted(int k, std::vector<std::vector<int>> edges,
                              std::vector<Rat> weights);
// Unit weights.
WeightedPattern weighted_from(const PatternGraph& h);

// Data hyperedge: strictly sorted distinct 64-bit vertex ids.
struct DataEdge {
  std::vector<std::uint64_t> v;
  auto operator<=>(const DataEdge&) const = default;
};

// Sorts endpoints; rejects repeated ids.
DataEdge make_data_edge(std::vector<std::uint64_t> endpoints);

struct DataEdgeHash {
  std::size_t operator()(const DataEdge& e) const;
};

struct EdgeStreamUpdate {
  int sign = 1;  // +1 insert, -1 delete
  DataEdge edge;
  bool operator==(const EdgeStreamUpdate&) const = default;
};

using Stream = std::vector<EdgeStreamUpdate>;

// Materialized multigraph under strict-turnstile semantics: every edge
// multiplicity stays nonnegative at all times.
class DataGraph {
 public:
  void apply_update(const EdgeStreamUpdate& u);  // NegativeCount on violation
  std::int64_t count(const DataEdge& e) const;
  std::size_t m() const { return counts_.size(); }
  std::size_t n() const;
  std::size_t max_degree() const;  // distinct present edges through one vertex
  const std::unordered_map<DataEdge, std::int64_t, DataEdgeHash>& edges() const {
    return counts_;
  }

 private:
  std::unordered_map<DataEdge, std::int64_t, DataEdgeHash> counts_;
};

DataGraph graph_from_stream(const Stream& s);

// Text form, one update per line: "+ 17 4 900" inserts, "- 17 4" deletes.
Stream parse_stream(const std::string& text);
std::string serialize_stream(const Stream& s);
Stream load_stream_file(const std::string& path);
void write_stream_file(const std::string& path, const Stream& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace subcount
