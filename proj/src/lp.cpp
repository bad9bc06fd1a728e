#include "subcount/lp.hpp"

#include <cstddef>

#include "subcount/error.hpp"

namespace subcount {

namespace {

// Dense tableau. Row layout: [structural | slack/surplus | artificial | rhs].
struct Tableau {
  std::size_t n_struct = 0;
  std::size_t n_total = 0;
  std::size_t first_artificial = 0;
  std::vector<std::vector<Rat>> rows;  // each of size n_total + 1
  std::vector<std::size_t> basis;      // basic column per row

  Rat& rhs(std::size_t i) { return rows[i][n_total]; }

  void pivot(std::size_t r, std::size_t col) {
    Rat piv = rows[r][col];
    for (auto& x : rows[r]) x /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      Rat f = rows[i][col];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= n_total; ++j) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = col;
  }

  // Minimizes cost over columns [0, col_limit); artificial columns are kept
  // out by passing col_limit = first_artificial in phase 2.
  void run(const std::vector<Rat>& cost, std::size_t col_limit) {
    while (true) {
      // reduced cost r_j = c_j - c_B . B^-1 A_j, recomputed from scratch;
      // problem sizes never make this the bottleneck
      std::size_t enter = n_total;
      for (std::size_t j = 0; j < col_limit; ++j) {
        Rat zj = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (cost[basis[i]] != 0) zj += cost[basis[i]] * rows[i][j];
        }
        if (cost[j] - zj < 0) {
          enter = j;
          break;  // Bland: smallest improving index
        }
      }
      if (enter == n_total) return;
      std::size_t leave = rows.size();
      Rat best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rat ratio = rhs(i) / rows[i][enter];
        if (leave == rows.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) fail(Errc::Malformed, "unbounded linear program");
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_minimize(const std::vector<Rat>& c, const std::vector<LpRow>& rows_in) {
  const std::size_t n = c.size();
  std::size_t n_slack = 0, n_art = 0;
  std::vector<LpRow> rows = rows_in;
  for (auto& r : rows) {
    if (r.a.size() != n) fail(Errc::Malformed, "LP row width mismatch");
    if (r.b < 0) {  // normalize to b >= 0
      for (auto& x : r.a) x = -x;
      r.b = -r.b;
      r.rel = r.rel == Rel::Le ? Rel::Ge : (r.rel == Rel::Ge ? Rel::Le : Rel::Eq);
    }
    if (r.rel != Rel::Eq) ++n_slack;
    if (r.rel != Rel::Le) ++n_art;
  }

  Tableau t;
  t.n_struct = n;
  t.first_artificial = n + n_slack;
  t.n_total = n + n_slack + n_art;
  std::size_t slack_at = n, art_at = t.first_artificial;
  for (const auto& r : rows) {
    std::vector<Rat> row(t.n_total + 1, Rat(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = r.a[j];
    row[t.n_total] = r.b;
    std::size_t basic;
    if (r.rel == Rel::Le) {
      row[slack_at] = 1;
      basic = slack_at++;
    } else if (r.rel == Rel::Ge) {
      row[slack_at] = -1;
      ++slack_at;
      row[art_at] = 1;
      basic = art_at++;
    } else {
      row[art_at] = 1;
      basic = art_at++;
    }
    t.rows.push_back(std::move(row));
    t.basis.push_back(basic);
  }

  if (n_art > 0) {
    std::vector<Rat> phase1(t.n_total, Rat(0));
    for (std::size_t j = t.first_artificial; j < t.n_total; ++j) phase1[j] = 1;
    t.run(phase1, t.n_total);
    Rat infeas = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      if (t.basis[i] >= t.first_artificial) infeas += t.rhs(i);
    if (infeas != 0) fail(Errc::Infeasible, "infeasible linear program");
    // Drive leftover zero-level artificials out of the basis; rows that
    // cannot pivot are redundant and dropped.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < t.first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = t.first_artificial;
      for (std::size_t j = 0; j < t.first_artificial; ++j)
        if (t.rows[i][j] != 0) {
          col = j;
          break;
        }
      if (col < t.first_artificial) {
        t.pivot(i, col);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<Rat> phase2(t.n_total, Rat(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  t.run(phase2, t.first_artificial);

  LpResult res;
  res.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) res.x[t.basis[i]] = t.rhs(i);
  res.value = 0;
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

LpResult lp_maximize(const std::vector<Rat>& c, const std::vector<LpRow>& rows) {
  std::vector<Rat> neg(c);
  for (auto& x : neg) x = -x;
  LpResult r = lp_minimize(neg, rows);
  r.value = -r.value;
  return r;
}

}  // namespace subcount
