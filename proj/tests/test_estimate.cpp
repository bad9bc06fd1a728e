#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "subcount/estimate.hpp"
#include "subcount/rng.hpp"
#include "subcount/instances.hpp"
#include "support/patterns.hpp"
#include "support/stats.hpp"

using namespace subcount;
namespace ts = subcount::testsupport;

TEST_CASE("rate selection follows the cover exponent") {
  Rat tau(3, 2);
  // (100 / (0.09 * 1e6))^(2/3) = (1/900)^(2/3)
  CHECK(choose_p(1e6, 0.3, tau, 100.0) ==
        doctest::Approx(std::pow(1.0 / 900.0, 2.0 / 3.0)));
  CHECK(choose_p(10.0, 0.3, tau, 100.0) == 1.0);
  CHECK(choose_p(1e6, 0.3, Rat(1), 100.0) == doctest::Approx(1.0 / 900.0));
  CHECK_THROWS_AS(choose_p(0.0, 0.3, tau, 100.0), Error);
  CHECK_THROWS_AS(choose_p(100.0, 0.0, tau, 100.0), Error);
}

TEST_CASE("median picks the middle run by value") {
  auto mk = [](double v) {
    Estimate e;
    e.value = v;
    return e;
  };
  CHECK(median_estimate({mk(5), mk(1), mk(9)}).value == 5);
  CHECK(median_estimate({mk(2)}).value == 2);
  CHECK_THROWS_AS(median_estimate({}), Error);
}

TEST_CASE("estimator is exactly unbiased over all colorings at full rate") {
  // Two vertex-disjoint triangles; average over all 3^6 colorings must hit
  // the true count exactly, not approximately.
  PatternGraph h = ts::triangle();
  FractionalCover cover = solve_cover(h);
  PatternAnalysis analysis = analyze(h);
  Stream s = parse_stream("+ 0 1\n+ 1 2\n+ 0 2\n+ 3 4\n+ 4 5\n+ 3 5\n");
  double sum = 0.0;
  for (int code = 0; code < 729; ++code) {
    auto coloring = std::make_shared<std::unordered_map<std::uint64_t, int>>();
    int c = code;
    for (std::uint64_t v = 0; v < 6; ++v) {
      (*coloring)[v] = c % 3;
      c /= 3;
    }
    SketchState st = make_sketch(SketchConfig::make(h, cover, 1.0, 0, coloring));
    update_all(st, s);
    sum += estimate_from(st, analysis).value;
  }
  CHECK(sum / 729.0 == 2.0);
}

TEST_CASE("estimates rescale by the sampling rate") {
  PatternGraph h = ts::triangle();
  FractionalCover cover = solve_cover(h);
  PatternAnalysis analysis = analyze(h);
  PlantedInstance inst = gen_planted(h, 40, 17, {});
  SketchState st = make_sketch(SketchConfig::make(h, cover, 0.49, 3));
  update_all(st, inst.stream);
  Estimate e = estimate_from(st, analysis);
  // q = sqrt(0.49) = 0.7 per color; 27 / (6 * 0.343)
  CHECK(e.value == doctest::Approx(27.0 / (6.0 * 0.343) * e.copies_found));
  CHECK(e.p_used == 0.49);
}

TEST_CASE("estimating with the wrong pattern analysis is rejected") {
  PatternGraph h = ts::triangle();
  SketchState st = make_sketch(SketchConfig::make(h, solve_cover(h), 1.0, 1));
  PatternAnalysis other = analyze(ts::path(4));
  CHECK_THROWS_AS(estimate_from(st, other), Error);
}

TEST_CASE("level driver falls back to full rate on tiny streams") {
  PatternGraph h = ts::triangle();
  FractionalCover cover = solve_cover(h);
  PlantedInstance inst = gen_planted(h, 5, 23, {});
  RatePlan plan;
  Estimate e = run_levels(inst.stream, h, cover, plan, 7);
  CHECK(e.level == 0);
  CHECK(e.p_used == 1.0);
  CHECK(e.value == doctest::Approx(4.5 * e.copies_found));
}

TEST_CASE("level driver picks a deep level once copies are plentiful") {
  PatternGraph h = ts::triangle();
  FractionalCover cover = solve_cover(h);
  PlantedInstance inst = gen_planted(h, 4000, 29, {});
  RatePlan plan;
  Estimate e = run_levels(inst.stream, h, cover, plan, 11);
  CHECK(e.level > 0);
  CHECK(e.p_used < 1.0);
  CHECK(e.copies_found >= 100);
  CHECK(std::abs(e.value - 4000.0) / 4000.0 < 0.5);
}

TEST_CASE("explicit level grids are honored") {
  PatternGraph h = ts::triangle();
  FractionalCover cover = solve_cover(h);
  PlantedInstance inst = gen_planted(h, 30, 31, {});
  RatePlan plan;
  plan.levels = {0.8};
  Estimate e = run_levels(inst.stream, h, cover, plan, 1);
  CHECK(e.p_used == 0.8);
  CHECK(e.level == 0);
}

TEST_CASE("repeated runs reduce by median over derived seeds") {
  PatternGraph h = ts::triangle();
  FractionalCover cover = solve_cover(h);
  PlantedInstance inst = gen_planted(h, 60, 37, {});
  RatePlan plan;
  plan.repetitions = 3;
  Estimate med = run_repeated(inst.stream, h, cover, plan, 5);
  std::vector<Estimate> runs;
  for (int r = 0; r < 3; ++r)
    runs.push_back(run_levels(inst.stream, h, cover, plan, mix64(5 + r)));
  CHECK(med.value == median_estimate(runs).value);

  plan.repetitions = 2;
  CHECK_THROWS_AS(run_repeated(inst.stream, h, cover, plan, 5), Error);
}

TEST_CASE("degree regime guard") {
  Rat tau(3, 2);
  CHECK(degree_regime_ok(1, 0.3, tau, 1e9));
  CHECK_FALSE(degree_regime_ok(1000, 0.3, tau, 100.0));
}
