#pragma once

#include <vector>

#include "subcount/hypergraph.hpp"
#include "subcount/rational.hpp"

namespace subcount {

struct FractionalCover {
  std::vector<Rat> vertex_weights;  // size k
  std::vector<Rat> edge_weights;    // nonzero only for the generalized cover
  Rat value;

  bool operator==(const FractionalCover&) const = default;
};

// Minimum fractional vertex cover of H: min sum x_v subject to
// sum_{v in e} x_v >= 1 per hyperedge, x >= 0. Exact; the returned solution
// is a vertex of the feasible region (half-integral when H is a graph).
FractionalCover solve_cover(const PatternGraph& h);

struct FullSupportCover {
  FractionalCover cover;
  Rat min_weight;
  bool full_support = false;  // min_weight > 0
};

// Among optimal covers, maximizes the minimum vertex weight.
FullSupportCover solve_cover_full_support(const PatternGraph& h);

// Generalized weighted cover: min sum_v f(v) + lambda * sum_e f(e) subject to
// sum_{v in e} f(v) + f(e) >= w(e), f >= 0. Empty hyperedges are covered by
// their own f(e) alone.
Rat mvc(const WeightedPattern& hw, const Rat& lambda);
FractionalCover mvc_solve(const WeightedPattern& hw, const Rat& lambda);

// LP dual of solve_cover for 2-uniform H: max sum y_e subject to
// sum_{e at v} y_e <= 1, y >= 0. Equals solve_cover(h).value.
Rat fractional_matching(const PatternGraph& h);

struct ExponentReport {
  Rat tau;   // fractional cover number
  Rat mu1;   // max over single-edge deletions of the weight-1 cover
  Rat mu2;   // half-price generalized cover of H itself
  Rat upper_exponent;         // 1/tau, sketch size m / T^(1/tau)
  Rat lower_exponent_eps_t;   // 1/mu2, scaling m / (eps T)^(1/mu2)
  Rat lower_exponent_eps2_t;  // 1/mu1, scaling m / (eps^2 T)^(1/mu1)
};

// Requires connected H with more than one hyperedge.
ExponentReport exponents(const PatternGraph& h);

}  // namespace subcount
