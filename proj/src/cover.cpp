#include "subcount/cover.hpp"

#include <algorithm>

#include "subcount/lp.hpp"

namespace subcount {

namespace {

void check_cover_feasible(const std::vector<Rat>& x, const PatternGraph& h) {
  for (const auto& e : h.edges) {
    Rat s = 0;
    for (int v : e) s += x[v];
    if (s < 1) fail(Errc::Infeasible, "cover LP returned an infeasible point");
  }
}

}  // namespace

FractionalCover solve_cover(const PatternGraph& h) {
  if (h.edges.empty()) fail(Errc::EmptyPattern, "cover of a pattern with no hyperedges");
  std::vector<Rat> c(h.k, Rat(1));
  std::vector<LpRow> rows;
  for (const auto& e : h.edges) {
    LpRow r;
    r.a.assign(h.k, Rat(0));
    for (int v : e) r.a[v] = 1;
    r.rel = Rel::Ge;
    r.b = 1;
    rows.push_back(std::move(r));
  }
  LpResult lp = lp_minimize(c, rows);
  check_cover_feasible(lp.x, h);
  return FractionalCover{std::move(lp.x), {}, lp.value};
}

FullSupportCover solve_cover_full_support(const PatternGraph& h) {
  Rat tau = solve_cover(h).value;
  // Second stage: over the optimal face, maximize the smallest vertex weight.
  // Variables are x_0..x_{k-1}, t.
  const int n = h.k + 1;
  std::vector<Rat> c(n, Rat(0));
  c[h.k] = 1;
  std::vector<LpRow> rows;
  for (const auto& e : h.edges) {
    LpRow r;
    r.a.assign(n, Rat(0));
    for (int v : e) r.a[v] = 1;
    r.rel = Rel::Ge;
    r.b = 1;
    rows.push_back(std::move(r));
  }
  {
    LpRow sum;
    sum.a.assign(n, Rat(1));
    sum.a[h.k] = 0;
    sum.rel = Rel::Eq;
    sum.b = tau;
    rows.push_back(std::move(sum));
  }
  for (int v = 0; v < h.k; ++v) {
    LpRow r;
    r.a.assign(n, Rat(0));
    r.a[v] = 1;
    r.a[h.k] = -1;
    r.rel = Rel::Ge;
    r.b = 0;
    rows.push_back(std::move(r));
  }
  LpResult lp = lp_maximize(c, rows);
  std::vector<Rat> x(lp.x.begin(), lp.x.begin() + h.k);
  check_cover_feasible(x, h);
  Rat min_w = x.empty() ? Rat(0) : x[0];
  for (const auto& w : x) min_w = std::min(min_w, w);
  FullSupportCover out;
  out.cover = FractionalCover{std::move(x), {}, tau};
  out.min_weight = min_w;
  out.full_support = min_w > 0;
  return out;
}

FractionalCover mvc_solve(const WeightedPattern& hw, const Rat& lambda) {
  if (lambda <= 0) fail(Errc::ParameterDomain, "lambda must be positive");
  const std::size_t ne = hw.edges.size();
  const std::size_t nv = static_cast<std::size_t>(hw.k);
  std::vector<Rat> c(nv + ne);
  for (std::size_t j = 0; j < nv; ++j) c[j] = 1;
  for (std::size_t j = 0; j < ne; ++j) c[nv + j] = lambda;
  std::vector<LpRow> rows;
  for (std::size_t i = 0; i < ne; ++i) {
    LpRow r;
    r.a.assign(nv + ne, Rat(0));
    for (int v : hw.edges[i]) r.a[v] = 1;
    r.a[nv + i] = 1;
    r.rel = Rel::Ge;
    r.b = hw.weights[i];
    rows.push_back(std::move(r));
  }
  LpResult lp = lp_minimize(c, rows);
  FractionalCover out;
  out.vertex_weights.assign(lp.x.begin(), lp.x.begin() + nv);
  out.edge_weights.assign(lp.x.begin() + nv, lp.x.end());
  out.value = lp.value;
  for (std::size_t i = 0; i < ne; ++i) {
    Rat s = out.edge_weights[i];
    for (int v : hw.edges[i]) s += out.vertex_weights[v];
    if (s < hw.weights[i]) fail(Errc::Infeasible, "generalized cover LP infeasible point");
  }
  return out;
}

Rat mvc(const WeightedPattern& hw, const Rat& lambda) { return mvc_solve(hw, lambda).value; }

Rat fractional_matching(const PatternGraph& h) {
  if (h.edges.empty()) fail(Errc::EmptyPattern, "matching of a pattern with no edges");
  if (!h.is_graph()) fail(Errc::NotAGraph, "fractional matching needs a 2-uniform pattern");
  const std::size_t ne = h.edges.size();
  std::vector<Rat> c(ne, Rat(1));
  std::vector<LpRow> rows;
  for (int v = 0; v < h.k; ++v) {
    LpRow r;
    r.a.assign(ne, Rat(0));
    bool touched = false;
    for (std::size_t i = 0; i < ne; ++i)
      if (h.edges[i][0] == v || h.edges[i][1] == v) {
        r.a[i] = 1;
        touched = true;
      }
    if (!touched) continue;
    r.rel = Rel::Le;
    r.b = 1;
    rows.push_back(std::move(r));
  }
  return lp_maximize(c, rows).value;
}

ExponentReport exponents(const PatternGraph& h) {
  if (!h.connected()) fail(Errc::Disconnected, "exponents need a connected pattern");
  if (h.edges.size() < 2) fail(Errc::TooFewEdges, "exponents need more than one hyperedge");
  ExponentReport rep;
  rep.tau = solve_cover(h).value;
  rep.mu2 = mvc(weighted_from(h), Rat(1, 2));
  rep.mu1 = 0;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    std::vector<std::vector<int>> rest;
    for (std::size_t j = 0; j < h.edges.size(); ++j)
      if (j != i) rest.push_back(h.edges[j]);
    Rat m1 = mvc(make_weighted(h.k, std::move(rest), std::vector<Rat>(h.edges.size() - 1, Rat(1))),
                 Rat(1));
    rep.mu1 = std::max(rep.mu1, m1);
  }
  if (h.is_graph() && std::max(rep.mu1, rep.mu2) != rep.tau)
    throw std::logic_error("cover exponent identity failed on a graph pattern");
  rep.upper_exponent = Rat(1) / rep.tau;
  rep.lower_exponent_eps_t = Rat(1) / rep.mu2;
  rep.lower_exponent_eps2_t = Rat(1) / rep.mu1;
  return rep;
}

}  // namespace subcount
