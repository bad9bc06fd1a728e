#pragma once

#include <cstdint>
#include <vector>

#include "subcount/pattern.hpp"
#include "subcount/sketch.hpp"

namespace subcount {

struct Estimate {
  double value = 0.0;
  std::int64_t copies_found = 0;
  double p_used = 1.0;
  int level = 0;
  std::size_t retained = 0;
};

struct RatePlan {
  double epsilon = 0.3;
  double constant = 100.0;    // C in p = (C / (eps^2 T))^(1/tau)
  std::vector<double> levels; // explicit p grid; empty = 2^-i derived from stream size
  int repetitions = 1;        // odd; median across repetition seeds
};

// Unbiased count estimate from one sketch:
//   k^k * copies_found / (|Aut(H)| * prod_a q_a).
// The q product uses the exact per-color probabilities the sketch sampled
// with, so the estimate is unbiased for the count as realized.
Estimate estimate_from(const SketchState& s, const PatternAnalysis& analysis);

// Sampling rate for a known count guess: min(1, (C / (eps^2 T))^(1/tau)).
double choose_p(double t_guess, double eps, const Rat& tau, double constant);

// Runs one sketch per level p_i over the stream and returns the estimate of
// the deepest (smallest-p) level whose copies_found reached
// theta = max(100, 4/eps^2), falling back to level 0 (p = 1).
Estimate run_levels(const Stream& stream, const PatternGraph& h, const FractionalCover& cover,
                    const RatePlan& plan, std::uint64_t seed);

// plan.repetitions independent driver runs with seeds derived from `seed`,
// reduced by median. The repetition count must be odd and positive.
Estimate run_repeated(const Stream& stream, const PatternGraph& h, const FractionalCover& cover,
                      const RatePlan& plan, std::uint64_t seed);

// Median by value; input should hold an odd number of independent runs.
Estimate median_estimate(std::vector<Estimate> runs);

// Degree condition under which the variance bound is meaningful for graphs
// with a full-support cover: d <= (1/10) * eps^(1/tau) * T^(1/(2 tau)).
bool degree_regime_ok(std::size_t max_degree, double eps, const Rat& tau, double t);

}  // namespace subcount
