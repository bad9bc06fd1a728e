#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "subcount/cover.hpp"
#include "support/graph_enum.hpp"
#include "support/patterns.hpp"

using namespace subcount;
namespace ts = subcount::testsupport;

namespace {

bool half_integral(const FractionalCover& c) {
  for (const auto& w : c.vertex_weights)
    if (w != 0 && w != Rat(1, 2) && w != 1) return false;
  return true;
}

Rat cover_value(const PatternGraph& h) { return solve_cover(h).value; }

PatternGraph from_small(const ts::SmallGraph& g) {
  std::vector<std::vector<int>> es;
  for (auto [a, b] : g.edges) es.push_back({a, b});
  return make_pattern(g.k, es);
}

}  // namespace

TEST_CASE("known cover values") {
  CHECK(cover_value(ts::triangle()) == Rat(3, 2));
  CHECK(cover_value(ts::cycle(5)) == Rat(5, 2));
  CHECK(cover_value(ts::path(4)) == Rat(2));
  CHECK(cover_value(ts::star(3)) == Rat(1));
  CHECK(cover_value(ts::star(7)) == Rat(1));
  CHECK(cover_value(ts::clique(4)) == Rat(2));
  CHECK(cover_value(ts::one_hyperedge(3)) == Rat(1));
  CHECK(cover_value(make_pattern(5, {{0, 1, 2}, {2, 3, 4}})) == Rat(1));
  CHECK(cover_value(make_pattern(6, {{0, 1, 2}, {3, 4, 5}, {0, 3}})) == Rat(2));
}

TEST_CASE("cover solutions are feasible and tight") {
  for (const PatternGraph& h : {ts::triangle(), ts::cycle(5), ts::clique(4)}) {
    FractionalCover c = solve_cover(h);
    Rat total = 0;
    for (const auto& w : c.vertex_weights) total += w;
    CHECK(total == c.value);
    for (const auto& e : h.edges) {
      Rat got = 0;
      for (int v : e) got += c.vertex_weights[v];
      CHECK(got >= 1);
    }
  }
}

TEST_CASE("duality against the fractional matching") {
  for (int k = 3; k <= 5; ++k)
    for (const auto& g : ts::connected_graphs(k)) {
      PatternGraph h = from_small(g);
      CHECK(solve_cover(h).value == fractional_matching(h));
    }
  CHECK_THROWS_AS(fractional_matching(ts::one_hyperedge(3)), Error);
}

TEST_CASE("generalized cover with priced edges") {
  PatternGraph tri = ts::triangle();
  CHECK(mvc(weighted_from(tri), Rat(1)) == Rat(3, 2));
  CHECK(mvc(weighted_from(tri), Rat(1, 2)) == Rat(3, 2));
  CHECK(mvc(weighted_from(tri), Rat(1, 3)) == Rat(1));
  CHECK(mvc(weighted_from(ts::star(3)), Rat(1, 2)) == Rat(1));

  WeightedPattern w = make_weighted(2, {{}, {0, 1}}, {Rat(2), Rat(1)});
  CHECK(mvc(w, Rat(1, 2)) == Rat(3, 2));

  CHECK_THROWS_AS(mvc(weighted_from(tri), Rat(0)), Error);
  CHECK_THROWS_AS(mvc(weighted_from(tri), Rat(-1)), Error);
}

TEST_CASE("edge price at or above one matches the plain cover") {
  for (int k = 3; k <= 5; ++k)
    for (const auto& g : ts::connected_graphs(k)) {
      if (g.edges.empty()) continue;
      PatternGraph h = from_small(g);
      CHECK(mvc(weighted_from(h), Rat(1)) == solve_cover(h).value);
      CHECK(mvc(weighted_from(h), Rat(7, 2)) == solve_cover(h).value);
    }
}

TEST_CASE("cover identity on every connected graph up to five vertices") {
  for (int k = 3; k <= 5; ++k)
    for (const auto& g : ts::connected_graphs(k)) {
      if (g.edges.size() < 2) continue;
      PatternGraph h = from_small(g);
      ExponentReport rep = exponents(h);
      CHECK(std::max(rep.mu1, rep.mu2) == rep.tau);
      CHECK(half_integral(solve_cover(h)));
    }
}

TEST_CASE("exponent report on the triangle") {
  ExponentReport rep = exponents(ts::triangle());
  CHECK(rep.tau == Rat(3, 2));
  CHECK(rep.mu1 == Rat(1));
  CHECK(rep.mu2 == Rat(3, 2));
  CHECK(rep.upper_exponent == Rat(2, 3));
  CHECK(rep.lower_exponent_eps_t == Rat(2, 3));
  CHECK(rep.lower_exponent_eps2_t == Rat(1));
}

TEST_CASE("full support detection") {
  FullSupportCover c5 = solve_cover_full_support(ts::cycle(5));
  CHECK(c5.full_support);
  CHECK(c5.min_weight == Rat(1, 2));

  FullSupportCover st = solve_cover_full_support(ts::star(3));
  CHECK_FALSE(st.full_support);
  CHECK(st.min_weight == Rat(0));
  CHECK(st.cover.value == Rat(1));

  FullSupportCover p4 = solve_cover_full_support(ts::path(4));
  CHECK(p4.cover.value == Rat(2));
  CHECK(p4.full_support);
  CHECK(p4.min_weight == Rat(1, 2));

  FullSupportCover p3 = solve_cover_full_support(ts::path(3));
  CHECK(p3.cover.value == Rat(1));
  CHECK_FALSE(p3.full_support);
}

TEST_CASE("exponents reject unsupported shapes") {
  CHECK_THROWS_AS(exponents(make_pattern(4, {{0, 1}, {2, 3}})), Error);
  CHECK_THROWS_AS(exponents(make_pattern(2, {{0, 1}})), Error);
}
