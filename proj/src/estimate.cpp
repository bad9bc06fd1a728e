#include "subcount/estimate.hpp"

#include <algorithm>
#include <cmath>

#include "subcount/rng.hpp"

namespace subcount {

namespace {

double k_to_k(int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= k;
  return r;
}

}  // namespace

Estimate estimate_from(const SketchState& s, const PatternAnalysis& analysis) {
  const PatternGraph& h = s.config.pattern;
  if (analysis.k != h.k || !analysis.connected || analysis.arity_multiset != h.arity_multiset())
    fail(Errc::PatternMismatch, "analysis does not describe the sketch's pattern");
  if (analysis.automorphisms <= 0) fail(Errc::PatternMismatch, "bad automorphism count");
  std::int64_t copies = colorful_copies(s);
  double qprod = 1.0;
  for (double q : s.config.q) qprod *= q;
  Estimate e;
  e.copies_found = copies;
  e.p_used = s.config.p;
  e.retained = retained_count(s);
  e.value = k_to_k(h.k) * static_cast<double>(copies) /
            (static_cast<double>(analysis.automorphisms) * qprod);
  return e;
}

double choose_p(double t_guess, double eps, const Rat& tau, double constant) {
  if (!(t_guess > 0) || !(eps > 0) || !(constant > 0) || tau <= 0)
    fail(Errc::ParameterDomain, "choose_p needs positive T, eps, C, tau");
  double exponent = rat_to_double(Rat(1) / tau);
  double p = std::pow(constant / (eps * eps * t_guess), exponent);
  return std::min(1.0, p);
}

Estimate run_levels(const Stream& stream, const PatternGraph& h, const FractionalCover& cover,
                    const RatePlan& plan, std::uint64_t seed) {
  if (!(plan.epsilon > 0)) fail(Errc::ParameterDomain, "epsilon must be positive");
  std::vector<double> levels = plan.levels;
  if (levels.empty()) {
    std::size_t m = 0;
    for (const auto& u : stream) m += u.sign > 0;
    int top = 0;
    while ((1ULL << top) < std::max<std::size_t>(m, 1)) ++top;
    for (int i = 0; i <= top; ++i) levels.push_back(std::ldexp(1.0, -i));
  }

  std::vector<SketchState> states;
  states.reserve(levels.size());
  for (double p : levels) states.push_back(make_sketch(SketchConfig::make(h, cover, p, seed)));

  // All levels share (seed, pattern), so the coloring and the per-vertex
  // uniform draw are computed once per update; level i only compares the
  // draw against its own q. Retention is nested: failing at one level fails
  // at every deeper one.
  const SketchConfig& base = states[0].config;
  std::vector<int> cols, sorted_cols;
  std::vector<double> units;
  for (const auto& u : stream) {
    for (auto& s : states) ++s.updates_seen;
    std::size_t arity = u.edge.v.size();
    if (arity >= base.arity_present.size() || !base.arity_present[arity]) continue;
    cols.clear();
    units.clear();
    for (std::uint64_t v : u.edge.v) {
      cols.push_back(base.chi(v));
      units.push_back(base.keep_unit(v));
    }
    sorted_cols = cols;
    std::sort(sorted_cols.begin(), sorted_cols.end());
    bool colorful = true;
    for (std::size_t i = 1; i < sorted_cols.size(); ++i)
      colorful &= sorted_cols[i] != sorted_cols[i - 1];
    if (!colorful) continue;
    if (!std::binary_search(base.edge_keys.begin(), base.edge_keys.end(),
                            pack_colors(sorted_cols)))
      continue;
    for (std::size_t li = 0; li < states.size(); ++li) {
      bool kept = true;
      const auto& q = states[li].config.q;
      for (std::size_t j = 0; j < units.size(); ++j)
        kept &= units[j] < q[static_cast<std::size_t>(cols[j])];
      if (!kept) break;
      detail::bump_counter_raw(states[li], u.edge, u.sign, &u);
    }
  }

  PatternAnalysis analysis = analyze(h);
  std::vector<Estimate> ests;
  ests.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    Estimate e = estimate_from(states[i], analysis);
    e.level = static_cast<int>(i);
    ests.push_back(e);
  }
  double theta = std::max(100.0, 4.0 / (plan.epsilon * plan.epsilon));
  int chosen = 0;
  for (std::size_t i = 0; i < ests.size(); ++i)
    if (static_cast<double>(ests[i].copies_found) >= theta) chosen = static_cast<int>(i);
  return ests[static_cast<std::size_t>(chosen)];
}

Estimate run_repeated(const Stream& stream, const PatternGraph& h, const FractionalCover& cover,
                      const RatePlan& plan, std::uint64_t seed) {
  if (plan.repetitions < 1 || plan.repetitions % 2 == 0)
    fail(Errc::ParameterDomain, "repetition count must be odd and positive");
  std::vector<Estimate> runs;
  runs.reserve(static_cast<std::size_t>(plan.repetitions));
  for (int r = 0; r < plan.repetitions; ++r)
    runs.push_back(run_levels(stream, h, cover, plan, mix64(seed + static_cast<std::uint64_t>(r))));
  return median_estimate(std::move(runs));
}

Estimate median_estimate(std::vector<Estimate> runs) {
  if (runs.empty()) fail(Errc::EmptyInput, "median of no estimates");
  std::sort(runs.begin(), runs.end(),
            [](const Estimate& a, const Estimate& b) { return a.value < b.value; });
  return runs[(runs.size() - 1) / 2];
}

bool degree_regime_ok(std::size_t max_degree, double eps, const Rat& tau, double t) {
  if (tau <= 0 || !(eps > 0) || !(t > 0)) fail(Errc::ParameterDomain, "bad degree regime inputs");
  double inv_tau = rat_to_double(Rat(1) / tau);
  double bound = 0.1 * std::pow(eps, inv_tau) * std::pow(t, inv_tau / 2.0);
  return static_cast<double>(max_degree) <= bound;
}

}  // namespace subcount
