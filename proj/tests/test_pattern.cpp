#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subcount/pattern.hpp"
#include "support/graph_enum.hpp"
#include "support/patterns.hpp"
#include "support/reference_oracle.hpp"

using namespace subcount;
namespace ts = subcount::testsupport;

TEST_CASE("automorphism counts of standard shapes") {
  CHECK(automorphism_count(ts::triangle()) == 6);
  CHECK(automorphism_count(ts::path(4)) == 2);
  CHECK(automorphism_count(ts::cycle(4)) == 8);
  CHECK(automorphism_count(ts::cycle(5)) == 10);
  CHECK(automorphism_count(ts::clique(4)) == 24);
  CHECK(automorphism_count(ts::star(3)) == 6);
  CHECK(automorphism_count(ts::one_hyperedge(3)) == 6);
  CHECK(automorphism_count(make_pattern(4, {{0, 1, 2}, {2, 3}})) == 2);
}

TEST_CASE("automorphism count is invariant under relabeling") {
  PatternGraph a = make_pattern(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
  PatternGraph b = make_pattern(5, {{4, 3}, {3, 1}, {1, 0}, {0, 2}, {4, 2}, {4, 1}});
  CHECK(automorphism_count(a) == automorphism_count(b));
}

TEST_CASE("automorphisms agree with the permutation reference") {
  for (int k = 2; k <= 5; ++k)
    for (const auto& g : ts::connected_graphs(k)) {
      std::vector<std::vector<int>> es;
      for (auto [x, y] : g.edges) es.push_back({x, y});
      PatternGraph h = make_pattern(k, es);
      CHECK(automorphism_count(h) == ts::ref_automorphisms(h));
    }
}

TEST_CASE("analysis bundles the pieces") {
  PatternAnalysis a = analyze(ts::cycle(5));
  CHECK(a.k == 5);
  CHECK(a.automorphisms == 10);
  CHECK(a.connected);
  CHECK(a.arity_multiset == std::vector<int>{2, 2, 2, 2, 2});
}

TEST_CASE("size guard") {
  std::vector<std::vector<int>> es;
  for (int i = 0; i + 1 < 13; ++i) es.push_back({i, i + 1});
  CHECK_THROWS_AS(automorphism_count(make_pattern(13, es)), Error);
}
