#include "surfcomp/lp.hpp"

namespace surfcomp {

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> t;  // rows, last column is rhs
  std::vector<size_t> basis;
  size_t cols = 0;                       // structural columns (without rhs)

  void pivot(size_t r, size_t c) {
    Rational inv = 1 / t[r][c];
    for (auto& v : t[r]) v *= inv;
    for (size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rational f = t[i][c];
      for (size_t j = 0; j <= cols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Maximize cost.x over the current basic feasible solution; columns with
  // allowed[j] == false never enter.
  LpStatus optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      size_t enter = cols;
      for (size_t j = 0; j < cols && enter == cols; ++j) {
        if (!allowed[j]) continue;
        Rational red = cost[j];
        for (size_t i = 0; i < t.size(); ++i)
          if (t[i][j] != 0) red -= cost[basis[i]] * t[i][j];
        if (red > 0) enter = j;
      }
      if (enter == cols) return LpStatus::Optimal;
      size_t leave = t.size();
      Rational best;
      for (size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][cols] / t[i][enter];
        if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t.size()) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_maximize(const LpProblem& p) {
  const size_t n = p.n;
  std::vector<bool> freev = p.free_var;
  freev.resize(n, false);
  // column map: original var i -> (plus column, optional minus column)
  std::vector<size_t> plus(n), minus(n, SIZE_MAX);
  size_t col = 0;
  for (size_t i = 0; i < n; ++i) {
    plus[i] = col++;
    if (freev[i]) minus[i] = col++;
  }
  const size_t nstruct = col;
  const size_t m_eq = p.eq.size(), m_le = p.le.size(), m = m_eq + m_le;
  const size_t slack0 = nstruct, art0 = nstruct + m_le, total = art0 + m;

  Tableau tab;
  tab.cols = total;
  tab.t.assign(m, std::vector<Rational>(total + 1, Rational(0)));
  tab.basis.assign(m, 0);
  auto fill = [&](size_t r, const std::vector<Rational>& row, const Rational& rhs) {
    for (size_t i = 0; i < n && i < row.size(); ++i) {
      tab.t[r][plus[i]] = row[i];
      if (minus[i] != SIZE_MAX) tab.t[r][minus[i]] = -row[i];
    }
    tab.t[r][total] = rhs;
  };
  for (size_t r = 0; r < m_eq; ++r) fill(r, p.eq[r], p.eq_rhs[r]);
  for (size_t r = 0; r < m_le; ++r) {
    fill(m_eq + r, p.le[r], p.le_rhs[r]);
    tab.t[m_eq + r][slack0 + r] = 1;
  }
  for (size_t r = 0; r < m; ++r) {
    if (tab.t[r][total] < 0)
      for (auto& v : tab.t[r]) v = -v;
    tab.t[r][art0 + r] = 1;
    tab.basis[r] = art0 + r;
  }

  std::vector<Rational> phase1(total, Rational(0));
  for (size_t j = art0; j < total; ++j) phase1[j] = -1;
  std::vector<bool> allowed(total, true);
  tab.optimize(phase1, allowed);
  for (size_t r = 0; r < m; ++r)
    if (tab.basis[r] >= art0 && tab.t[r][total] != 0) return {LpStatus::Infeasible, {}, 0};

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (size_t r = 0; r < tab.t.size();) {
    if (tab.basis[r] < art0) {
      ++r;
      continue;
    }
    size_t c = art0;
    for (size_t j = 0; j < art0; ++j)
      if (tab.t[r][j] != 0) {
        c = j;
        break;
      }
    if (c == art0) {
      tab.t.erase(tab.t.begin() + static_cast<long>(r));
      tab.basis.erase(tab.basis.begin() + static_cast<long>(r));
      continue;
    }
    tab.pivot(r, c);
    ++r;
  }

  std::vector<Rational> cost(total, Rational(0));
  for (size_t i = 0; i < n && i < p.objective.size(); ++i) {
    cost[plus[i]] = p.objective[i];
    if (minus[i] != SIZE_MAX) cost[minus[i]] = -p.objective[i];
  }
  for (size_t j = art0; j < total; ++j) allowed[j] = false;
  if (tab.optimize(cost, allowed) == LpStatus::Unbounded) return {LpStatus::Unbounded, {}, 0};

  std::vector<Rational> xs(total, Rational(0));
  for (size_t r = 0; r < tab.t.size(); ++r) xs[tab.basis[r]] = tab.t[r][total];
  LpResult res;
  res.status = LpStatus::Optimal;
  res.x.assign(n, Rational(0));
  res.value = 0;
  for (size_t i = 0; i < n; ++i) {
    res.x[i] = xs[plus[i]] - (minus[i] != SIZE_MAX ? xs[minus[i]] : Rational(0));
    if (i < p.objective.size()) res.value += p.objective[i] * res.x[i];
  }
  return res;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const size_t n = a.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t r = c; r < n; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace surfcomp
