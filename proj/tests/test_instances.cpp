#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "subcount/instances.hpp"
#include "subcount/oracle.hpp"
#include "support/patterns.hpp"

using namespace subcount;
namespace ts = subcount::testsupport;

TEST_CASE("planted instances carry an exact verified count") {
  PatternGraph h = ts::triangle();
  PlantedOptions opts;
  opts.pad_edges = 50;
  PlantedInstance inst = gen_planted(h, 25, 42, opts);
  CHECK(inst.true_count == 25);
  CHECK(inst.m == 25 * 3 + 50);
  CHECK(inst.n == 25 * 3 + 100);
  CHECK(inst.max_degree == 2);

  DataGraph g = graph_from_stream(inst.stream);
  CHECK(exact_count(g, h).copies == 25);
}

TEST_CASE("planted instances of hyperedge patterns") {
  PatternGraph h = make_pattern(4, {{0, 1, 2}, {1, 2, 3}});
  PlantedOptions opts;
  opts.pad_edges = 20;
  PlantedInstance inst = gen_planted(h, 10, 7, opts);
  CHECK(inst.true_count == 10);
  DataGraph g = graph_from_stream(inst.stream);
  CHECK(exact_count(g, h).copies == 10);
  for (const auto& [e, c] : g.edges()) CHECK(e.v.size() == 3);
}

TEST_CASE("planted streams are deterministic in the seed") {
  PatternGraph h = ts::triangle();
  PlantedInstance a = gen_planted(h, 12, 9, {});
  PlantedInstance b = gen_planted(h, 12, 9, {});
  PlantedInstance c = gen_planted(h, 12, 10, {});
  CHECK(serialize_stream(a.stream) == serialize_stream(b.stream));
  CHECK(serialize_stream(a.stream) != serialize_stream(c.stream));
}

TEST_CASE("overlapping mode counts whatever it built") {
  PatternGraph h = ts::triangle();
  PlantedOptions opts;
  opts.allow_overlap = true;
  PlantedInstance inst = gen_planted(h, 30, 5, opts);
  DataGraph g = graph_from_stream(inst.stream);
  CHECK(exact_count(g, h).copies == inst.true_count);
  CHECK(inst.true_count >= 1);
}

TEST_CASE("planting rejects unusable patterns") {
  CHECK_THROWS_AS(gen_planted(ts::one_hyperedge(3), 5, 1, {}), Error);
  CHECK_THROWS_AS(gen_planted(make_pattern(4, {{0, 1}, {2, 3}}), 5, 1, {}), Error);
}

TEST_CASE("reduction instance count matches its formula") {
  PatternGraph h = ts::triangle();
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    ReductionInstance inst = gen_reduction(h, 60, 4, Rat(1, 2), seed & 1, seed);
    CHECK(inst.t_prime == 32);
    CHECK(inst.eps_t_prime == 16);
    DataGraph g = graph_from_stream(inst.stream);
    CHECK(exact_count(g, h).copies == inst.formula_count);
  }
}

TEST_CASE("matched promise pairs differ only in the fixed prefix") {
  PatternGraph h = ts::triangle();
  ReductionInstance yes = gen_reduction(h, 60, 4, Rat(1, 2), true, 31);
  ReductionInstance no = gen_reduction(h, 60, 4, Rat(1, 2), false, 31);
  REQUIRE(yes.player_bits.size() == 3);
  CHECK(yes.player_bits[1] == no.player_bits[1]);
  CHECK(yes.player_bits[2] == no.player_bits[2]);
  for (std::int64_t i = yes.eps_t_prime; i < yes.t_prime; ++i)
    CHECK(yes.player_bits[0][i] == no.player_bits[0][i]);
  CHECK(yes.formula_count >= no.formula_count);

  // every prefix column XORs to 0 under YES and to 1 under NO
  for (std::int64_t i = 0; i < yes.eps_t_prime; ++i) {
    int xy = yes.player_bits[0][i] ^ yes.player_bits[1][i] ^ yes.player_bits[2][i];
    int xn = no.player_bits[0][i] ^ no.player_bits[1][i] ^ no.player_bits[2][i];
    CHECK(xy == 0);
    CHECK(xn == 1);
  }
}

TEST_CASE("reduction parameter validation") {
  PatternGraph h = ts::triangle();
  CHECK_THROWS_AS(gen_reduction(h, 60, 0, Rat(1, 2), true, 1), Error);
  CHECK_THROWS_AS(gen_reduction(h, 60, 4, Rat(1, 3), true, 1), Error);
  CHECK_THROWS_AS(gen_reduction(h, 60, 7, Rat(1, 2), true, 1), Error);
  // C5 blows the vertex budget: 2^5 * 4 > 40 even though 4 <= 40/10.
  CHECK_THROWS_AS(gen_reduction(ts::cycle(5), 40, 4, Rat(1, 2), true, 1), Error);
  CHECK_THROWS_AS(gen_reduction(make_pattern(4, {{0, 1}, {2, 3}}), 60, 4, Rat(1, 2), true, 1),
                  Error);
}

TEST_CASE("bounded random streams respect their caps") {
  Stream s = gen_random_bounded(50, 60, 4, 2, 77);
  CHECK(s.size() == 60);
  std::set<DataEdge> seen;
  std::map<std::uint64_t, int> degree;
  for (const auto& u : s) {
    CHECK(u.sign == 1);
    CHECK(u.edge.v.size() == 2);
    CHECK(seen.insert(u.edge).second);
    for (auto v : u.edge.v) {
      CHECK(v < 50);
      ++degree[v];
    }
  }
  for (const auto& [v, dv] : degree) CHECK(dv <= 4);

  Stream hyper = gen_random_bounded(30, 20, 3, 3, 5);
  CHECK(hyper.size() == 20);
  for (const auto& u : hyper) CHECK(u.edge.v.size() == 3);

  CHECK_THROWS_AS(gen_random_bounded(10, 11, 2, 2, 1), Error);
  CHECK_THROWS_AS(gen_random_bounded(1, 1, 1, 2, 1), Error);
}
