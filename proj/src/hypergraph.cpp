#include "subcount/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "subcount/rng.hpp"

namespace subcount {

bool PatternGraph::is_graph() const {
  if (edges.empty()) return false;
  for (const auto& e : edges)
    if (e.size() != 2) return false;
  return true;
}

bool PatternGraph::connected() const {
  if (k <= 0) return false;
  if (k == 1) return true;
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& e : edges)
    for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
  int root = find(0);
  for (int v = 1; v < k; ++v)
    if (find(v) != root) return false;
  return true;
}

std::vector<int> PatternGraph::arity_multiset() const {
  std::vector<int> a;
  a.reserve(edges.size());
  for (const auto& e : edges) a.push_back(static_cast<int>(e.size()));
  std::sort(a.begin(), a.end());
  return a;
}

int PatternGraph::max_arity() const {
  int m = 0;
  for (const auto& e : edges) m = std::max(m, static_cast<int>(e.size()));
  return m;
}

namespace {

std::vector<int> canonical_edge(std::vector<int> e, int k) {
  if (e.empty()) fail(Errc::Malformed, "empty hyperedge");
  std::sort(e.begin(), e.end());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= k)
      fail(Errc::IndexOutOfRange, "vertex index " + std::to_string(e[i]) + " outside [0," +
                                      std::to_string(k) + ")");
    if (i > 0 && e[i] == e[i - 1])
      fail(Errc::Malformed, "repeated vertex " + std::to_string(e[i]) + " in hyperedge");
  }
  return e;
}

}  // namespace

PatternGraph make_pattern(int k, std::vector<std::vector<int>> edges,
                          std::vector<std::string> labels) {
  if (k < 1) fail(Errc::EmptyPattern, "pattern needs at least one vertex");
  if (edges.empty()) fail(Errc::EmptyPattern, "pattern needs at least one hyperedge");
  PatternGraph h;
  h.k = k;
  for (auto& e : edges) h.edges.push_back(canonical_edge(std::move(e), k));
  std::sort(h.edges.begin(), h.edges.end());
  for (std::size_t i = 1; i < h.edges.size(); ++i)
    if (h.edges[i] == h.edges[i - 1]) fail(Errc::DuplicateEdge, "duplicate hyperedge");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(k))
    fail(Errc::Malformed, "label list length != k");
  h.labels = labels.empty() ? std::vector<std::string>(k) : std::move(labels);
  return h;
}

PatternGraph parse_pattern(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int k = -1;
  std::vector<std::vector<int>> edges;
  std::vector<std::pair<int, std::string>> labels;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (k < 0) {
      if (tok.rfind("k=", 0) != 0)
        fail(Errc::Malformed, "line " + std::to_string(lineno) + ": expected k=<int> first");
      try {
        k = std::stoi(tok.substr(2));
      } catch (const std::exception&) {
        fail(Errc::Malformed, "line " + std::to_string(lineno) + ": bad k value");
      }
      std::string rest;
      if (ls >> rest) fail(Errc::Malformed, "line " + std::to_string(lineno) + ": trailing tokens");
      continue;
    }
    if (tok == "e") {
      std::vector<int> e;
      int v;
      while (ls >> v) e.push_back(v);
      if (!ls.eof())
        fail(Errc::Malformed, "line " + std::to_string(lineno) + ": bad vertex index");
      if (e.empty()) fail(Errc::Malformed, "line " + std::to_string(lineno) + ": empty edge");
      edges.push_back(std::move(e));
    } else if (tok == "label") {
      int v;
      std::string name;
      if (!(ls >> v >> name))
        fail(Errc::Malformed, "line " + std::to_string(lineno) + ": expected label <i> <name>");
      labels.emplace_back(v, name);
    } else {
      fail(Errc::Malformed, "line " + std::to_string(lineno) + ": unknown directive '" + tok + "'");
    }
  }
  if (k < 0) fail(Errc::Malformed, "missing k=<int> line");
  std::vector<std::string> label_vec(std::max(k, 0));
  for (auto& [v, name] : labels) {
    if (v < 0 || v >= k) fail(Errc::IndexOutOfRange, "label index " + std::to_string(v));
    label_vec[v] = name;
  }
  return make_pattern(k, std::move(edges), std::move(label_vec));
}

std::string serialize_pattern(const PatternGraph& h) {
  std::ostringstream out;
  out << "k=" << h.k << "\n";
  for (const auto& e : h.edges) {
    out << "e";
    for (int v : e) out << " " << v;
    out << "\n";
  }
  for (int v = 0; v < h.k; ++v)
    if (!h.labels[v].empty()) out << "label " << v << " " << h.labels[v] << "\n";
  return out.str();
}

PatternGraph load_pattern_file(const std::string& path) {
  return parse_pattern(read_text_file(path));
}

WeightedPattern make_weighted(int k, std::vector<std::vector<int>> edges,
                              std::vector<Rat> weights) {
  if (k < 1) fail(Errc::EmptyPattern, "weighted pattern needs at least one vertex");
  if (edges.size() != weights.size()) fail(Errc::Malformed, "weight list length != edge count");
  WeightedPattern w;
  w.k = k;
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= k) fail(Errc::IndexOutOfRange, "vertex index in weighted edge");
      if (i > 0 && e[i] == e[i - 1]) fail(Errc::Malformed, "repeated vertex in weighted edge");
    }
    w.edges.push_back(std::move(e));
  }
  for (const auto& r : weights)
    if (r < 0) fail(Errc::Malformed, "negative edge weight");
  w.weights = std::move(weights);
  return w;
}

WeightedPattern weighted_from(const PatternGraph& h) {
  return make_weighted(h.k, h.edges, std::vector<Rat>(h.edges.size(), Rat(1)));
}

DataEdge make_data_edge(std::vector<std::uint64_t> endpoints) {
  if (endpoints.empty()) fail(Errc::Malformed, "empty data edge");
  std::sort(endpoints.begin(), endpoints.end());
  for (std::size_t i = 1; i < endpoints.size(); ++i)
    if (endpoints[i] == endpoints[i - 1])
      fail(Errc::Malformed, "repeated endpoint " + std::to_string(endpoints[i]));
  return DataEdge{std::move(endpoints)};
}

std::size_t DataEdgeHash::operator()(const DataEdge& e) const {
  std::uint64_t h = 0x2545f4914f6cdd1dULL ^ (e.v.size() * 0x9e3779b97f4a7c15ULL);
  for (std::uint64_t x : e.v) h = mix64(h ^ x);
  return static_cast<std::size_t>(h);
}

void DataGraph::apply_update(const EdgeStreamUpdate& u) {
  if (u.sign != 1 && u.sign != -1) fail(Errc::Malformed, "update sign must be +1 or -1");
  auto it = counts_.find(u.edge);
  std::int64_t cur = (it == counts_.end()) ? 0 : it->second;
  std::int64_t next = cur + u.sign;
  if (next < 0) fail(Errc::NegativeCount, "edge multiplicity would become negative");
  if (next == 0) {
    if (it != counts_.end()) counts_.erase(it);
  } else if (it == counts_.end()) {
    counts_.emplace(u.edge, next);
  } else {
    it->second = next;
  }
}

std::int64_t DataGraph::count(const DataEdge& e) const {
  auto it = counts_.find(e);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t DataGraph::n() const {
  std::set<std::uint64_t> seen;
  for (const auto& [e, c] : counts_)
    for (std::uint64_t v : e.v) seen.insert(v);
  return seen.size();
}

std::size_t DataGraph::max_degree() const {
  std::unordered_map<std::uint64_t, std::size_t> deg;
  for (const auto& [e, c] : counts_)
    for (std::uint64_t v : e.v) ++deg[v];
  std::size_t d = 0;
  for (const auto& [v, x] : deg) d = std::max(d, x);
  return d;
}

DataGraph graph_from_stream(const Stream& s) {
  DataGraph g;
  for (const auto& u : s) g.apply_update(u);
  return g;
}

Stream parse_stream(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Stream s;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    int sign;
    if (tok == "+")
      sign = 1;
    else if (tok == "-")
      sign = -1;
    else
      fail(Errc::Malformed, "line " + std::to_string(lineno) + ": expected + or -");
    std::vector<std::uint64_t> ids;
    std::uint64_t v;
    while (ls >> v) ids.push_back(v);
    if (!ls.eof()) fail(Errc::Malformed, "line " + std::to_string(lineno) + ": bad vertex id");
    if (ids.empty()) fail(Errc::Malformed, "line " + std::to_string(lineno) + ": no endpoints");
    s.push_back({sign, make_data_edge(std::move(ids))});
  }
  return s;
}

std::string serialize_stream(const Stream& s) {
  std::ostringstream out;
  for (const auto& u : s) {
    out << (u.sign > 0 ? "+" : "-");
    for (std::uint64_t v : u.edge.v) out << " " << v;
    out << "\n";
  }
  return out.str();
}

Stream load_stream_file(const std::string& path) { return parse_stream(read_text_file(path)); }

void write_stream_file(const std::string& path, const Stream& s) {
  write_text_file(path, serialize_stream(s));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::Io, "cannot write " + path);
  out << content;
}

}  // namespace subcount
