#pragma once

#include <vector>

#include "subcount/hypergraph.hpp"

namespace subcount::testsupport {

inline PatternGraph triangle() { return make_pattern(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline PatternGraph path(int k) {
  std::vector<std::vector<int>> es;
  for (int i = 0; i + 1 < k; ++i) es.push_back({i, i + 1});
  return make_pattern(k, es);
}

inline PatternGraph cycle(int k) {
  std::vector<std::vector<int>> es;
  for (int i = 0; i < k; ++i) es.push_back({i, (i + 1) % k});
  return make_pattern(k, es);
}

inline PatternGraph star(int leaves) {
  std::vector<std::vector<int>> es;
  for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
  return make_pattern(leaves + 1, es);
}

inline PatternGraph clique(int k) {
  std::vector<std::vector<int>> es;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) es.push_back({i, j});
  return make_pattern(k, es);
}

inline PatternGraph one_hyperedge(int r) {
  std::vector<int> e;
  for (int i = 0; i < r; ++i) e.push_back(i);
  return make_pattern(r, {e});
}

}  // namespace subcount::testsupport
