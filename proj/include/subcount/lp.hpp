#pragma once

#include <vector>

#include "subcount/rational.hpp"

namespace subcount {

enum class Rel { Le, Ge, Eq };

struct LpRow {
  std::vector<Rat> a;
  Rel rel = Rel::Le;
  Rat b;
};

struct LpResult {
  Rat value;
  std::vector<Rat> x;
};

// Exact two-phase simplex with Bland's rule over nonnegative variables.
// Small dense problems only; everything here is k <= ~12 pattern work.
// Throws Infeasible when the constraint system is empty of solutions.
LpResult lp_minimize(const std::vector<Rat>& c, const std::vector<LpRow>& rows);
LpResult lp_maximize(const std::vector<Rat>& c, const std::vector<LpRow>& rows);

}  // namespace subcount
