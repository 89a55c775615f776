#include "surfcomp/diophantine.hpp"

#include <algorithm>
#include <cmath>

#include "surfcomp/lp.hpp"

namespace surfcomp {

namespace {

size_t rank_of(std::vector<std::vector<Rational>> rows) {
  size_t rank = 0;
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Irrational coordinates of x restricted to the given 1-based indices.
std::vector<Rational> coords_on(const FormalReal& x, const BasisPtr& B, const std::vector<size_t>& S) {
  FormalReal y = B ? x.over(B) : x;
  std::vector<Rational> out;
  for (size_t i : S) out.push_back(y.coord(i));
  return out;
}

FormalReal from_coords(const BasisPtr& B, const std::vector<size_t>& S, const std::vector<Rational>& v,
                       const Rational& q0) {
  std::vector<Rational> c(B->size() + 1, 0);
  c[0] = q0;
  for (size_t i = 0; i < S.size(); ++i) c[S[i]] = v[i];
  return FormalReal(B, c);
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational inf_norm(const std::vector<Rational>& v) {
  Rational m = 0;
  for (const auto& x : v) m = std::max<Rational>(m, abs_q(x));
  return m;
}

// A positive rational strictly below a positive real.
Rational rational_below(const FormalReal& x) {
  Rational q(x.approx() / 2);
  if (q <= 0) q = Rational(1, 1 << 20);
  while (FormalReal(q) >= x) q /= 2;
  return q;
}

long double long_value(const FormalReal& x) {
  Interval iv = x.enclose(128);
  return mpfr_get_ld(iv.lo(), MPFR_RNDN);
}

Rational rational_near(const FormalReal& x, mpfr_prec_t bits) {
  Interval iv = x.enclose(bits);
  Integer z;
  mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), iv.lo());
  Rational q(z);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

Integer round_q(const Rational& x) { return floor_q(x + Rational(1, 2)); }

struct Reduced {
  std::vector<std::vector<Rational>> b;  // reduced rows
  std::vector<std::vector<Integer>> u;   // rows of the unimodular transform
};

std::vector<std::vector<Rational>> gram_schmidt(const std::vector<std::vector<Rational>>& b,
                                                std::vector<std::vector<Rational>>& mu) {
  const size_t d = b.size();
  std::vector<std::vector<Rational>> bs(b);
  mu.assign(d, std::vector<Rational>(d, 0));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < i; ++j) {
      mu[i][j] = dot(b[i], bs[j]) / dot(bs[j], bs[j]);
      for (size_t k = 0; k < bs[i].size(); ++k) bs[i][k] -= mu[i][j] * bs[j][k];
    }
  return bs;
}

// Textbook LLL with delta = 3/4 in exact arithmetic; the dimension is tiny.
Reduced lll(std::vector<std::vector<Rational>> b) {
  const size_t d = b.size();
  Reduced r;
  r.u.assign(d, std::vector<Integer>(d, 0));
  for (size_t i = 0; i < d; ++i) r.u[i][i] = 1;
  std::vector<std::vector<Rational>> mu;
  auto bs = gram_schmidt(b, mu);
  size_t k = 1;
  while (k < d) {
    for (size_t j = k; j-- > 0;) {
      Integer q = round_q(mu[k][j]);
      if (q == 0) continue;
      for (size_t t = 0; t < b[k].size(); ++t) b[k][t] -= Rational(q) * b[j][t];
      for (size_t t = 0; t < d; ++t) r.u[k][t] -= q * r.u[j][t];
      bs = gram_schmidt(b, mu);
    }
    if (dot(bs[k], bs[k]) >= (Rational(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * dot(bs[k - 1], bs[k - 1])) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      std::swap(r.u[k], r.u[k - 1]);
      bs = gram_schmidt(b, mu);
      k = std::max<size_t>(k - 1, 1);
    }
  }
  r.b = std::move(b);
  return r;
}

// Candidates n1 > 0 for |n1 * s_i - alpha_i - round| < tol, from a close
// vector search in the lattice spanned by (s/tol, 1/N) and e_i/tol.
std::vector<Integer> lattice_candidates(const std::vector<FormalReal>& step, const std::vector<Rational>& alpha,
                                        const Rational& tol) {
  const size_t c = step.size();
  const size_t d = c + 1;
  std::vector<Rational> s(c);
  for (size_t i = 0; i < c; ++i) s[i] = rational_near(step[i], 320);
  const Rational W = 1 / tol;
  Rational base = 1;
  for (size_t i = 0; i < c; ++i) base *= W;
  std::vector<Integer> out;
  for (int shift = 0; shift <= 12; shift += 4) {
    const Rational lambda = 1 / (base * Rational(Integer(1) << shift));
    std::vector<std::vector<Rational>> b(d, std::vector<Rational>(d, 0));
    for (size_t i = 0; i < c; ++i) {
      b[0][i] = W * s[i];
      b[i + 1][i] = -W;
    }
    b[0][c] = lambda;
    Reduced r = lll(b);
    std::vector<std::vector<Rational>> mu;
    auto bs = gram_schmidt(r.b, mu);
    std::vector<Rational> t(d, 0);
    for (size_t i = 0; i < c; ++i) t[i] = W * alpha[i];
    std::vector<Integer> coef(d, 0);
    for (size_t j = d; j-- > 0;) {
      Integer q = round_q(dot(t, bs[j]) / dot(bs[j], bs[j]));
      coef[j] = q;
      for (size_t k = 0; k < d; ++k) t[k] -= Rational(q) * r.b[j][k];
    }
    // Babai's answer and its neighbours in the reduced basis.
    std::vector<long> off(d, -2);
    for (;;) {
      Integer n = 0;
      for (size_t j = 0; j < d; ++j) n += (coef[j] + off[j]) * r.u[j][0];
      if (n > 0) out.push_back(n);
      size_t p = 0;
      while (p < d && off[p] == 2) off[p++] = -2;
      if (p == d) break;
      ++off[p];
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<size_t> support_of(const std::vector<FormalReal>& xs) {
  BasisPtr B = common_basis(xs);
  std::vector<size_t> out;
  if (!B) return out;
  for (size_t i = 1; i <= B->size(); ++i)
    if (std::any_of(xs.begin(), xs.end(), [&](const FormalReal& x) { return x.over(B).coord(i) != 0; }))
      out.push_back(i);
  return out;
}

int check_direction(const DirectionRequest& req, const Integer& n0, const std::vector<Rational>& r0p) {
  const size_t c = req.r0.size();
  if (n0 <= 0 || n0 % req.p0 != 0) return 1;
  if (r0p.size() != c) return 2;
  for (const auto& x : r0p) {
    Rational y = Rational(n0) * x / Rational(req.l);
    y.canonicalize();
    if (y.get_den() != 1) return 2;
  }
  std::vector<FormalReal> d;
  for (size_t i = 0; i < c; ++i) d.push_back(req.r0[i] - FormalReal(r0p[i]));
  const FormalReal bound(req.eps1 / Rational(n0));
  for (const auto& x : d)
    if (abs_of(x) >= bound) return 3;
  size_t j = 0;
  for (size_t i = 1; i < c; ++i)
    if (abs_of(d[i]) > abs_of(d[j])) j = i;
  const FormalReal dj = abs_of(d[j]);
  if (dj.is_zero()) return 4;
  const Rational en = inf_norm(req.e);
  for (size_t i = 0; i < c; ++i)
    if (abs_of(d[i] - dj * (req.e[i] / en)) >= dj * req.eps1) return 4;
  return 0;
}

DirectionResult approximate_direction(const DirectionRequest& req, const ScanOptions& opt) {
  const size_t c = req.r0.size();
  if (c == 0 || req.e.size() != c) throw ValidationError("direction and point must have the same length");
  if (req.p0 <= 0 || req.l <= 0) throw ValidationError("p0 and l must be positive");
  if (req.eps1 <= 0) throw ValidationError("eps1 must be positive");
  if (inf_norm(req.e) == 0) throw ValidationError("direction must be nonzero");
  BasisPtr B = common_basis(req.r0);
  if (!B) throw ValidationError("coordinates of r0 must be irrational");
  std::vector<size_t> all;
  for (size_t i = 1; i <= B->size(); ++i) all.push_back(i);
  std::vector<std::vector<Rational>> rows;
  for (const auto& x : req.r0) rows.push_back(coords_on(x, B, all));
  if (rank_of(rows) != c) throw ValidationError("1 and the coordinates of r0 must be linearly independent");

  // Flip signs so the direction is non-negative.
  std::vector<int> sg(c);
  std::vector<Rational> ea(c);
  for (size_t i = 0; i < c; ++i) {
    sg[i] = req.e[i] < 0 ? -1 : 1;
    ea[i] = abs_q(req.e[i]);
  }
  const size_t top = std::max_element(ea.begin(), ea.end()) - ea.begin();
  const Rational a1 = req.eps1 / (2 * Rational(req.l));
  const Rational eta = std::min<Rational>(req.eps1 / 4, Rational(1, 4));
  std::vector<Rational> alpha(c), rho(c);
  for (size_t i = 0; i < c; ++i) {
    rho[i] = ea[i] / ea[top];
    alpha[i] = i == top ? a1 : a1 * std::clamp<Rational>(rho[i], eta, 1 - eta);
  }
  Rational e2 = *std::min_element(alpha.begin(), alpha.end()) / 2;
  auto e2_ok = [&] {
    for (size_t i = 0; i < c; ++i) {
      // The top coordinate carries the sup norm, so its ratio is exactly 1.
      if (i == top) continue;
      if (!(e2 < alpha[i] && alpha[i] < a1 - 2 * e2)) return false;
      if (abs_q((alpha[i] + e2) / (a1 - e2) - rho[i]) >= req.eps1) return false;
      if (abs_q((alpha[i] - e2) / (a1 + e2) - rho[i]) >= req.eps1) return false;
    }
    return true;
  };
  while (!e2_ok()) e2 /= 2;

  std::vector<FormalReal> step(c);
  std::vector<long double> step_ld(c), alpha_ld(c);
  for (size_t i = 0; i < c; ++i) {
    step[i] = req.r0[i] * (Rational(sg[i]) * Rational(req.p0) / Rational(req.l));
    step_ld[i] = long_value(step[i]);
    alpha_ld[i] = alpha[i].get_d();
  }
  const long double tol = e2.get_d() + 1e-9L;

  auto prefilter = [&](long n1) {
    for (size_t i = 0; i < c; ++i) {
      long double y = static_cast<long double>(n1) * step_ld[i] - alpha_ld[i];
      if (std::fabs(y - std::nearbyint(y)) >= tol) return false;
    }
    return true;
  };
  auto certify = [&](const Integer& n1, DirectionResult& out) {
    std::vector<Rational> r0p(c);
    const Integer n0 = n1 * req.p0;
    for (size_t i = 0; i < c; ++i) {
      FormalReal x = step[i] * Rational(n1) - FormalReal(alpha[i]);
      Integer beta = floor_of(x + FormalReal(Rational(1, 2)));
      FormalReal off = x - FormalReal(Rational(beta));
      if (abs_of(off) >= FormalReal(e2)) return false;
      r0p[i] = Rational(sg[i]) * Rational(req.l) * Rational(beta) / Rational(n0);
    }
    if (check_direction(req, n0, r0p) != 0) return false;
    out = {n0, r0p, n1};
    return true;
  };

  constexpr long kBlock = 1 << 15;
  constexpr long kBeforeLattice = 1 << 20;
  std::vector<char> hit(kBlock);
  DirectionResult out;
  bool lattice_tried = false;
  for (long start = 1; start <= opt.budget; start += kBlock) {
    if (!lattice_tried && start > kBeforeLattice) {
      lattice_tried = true;
      for (const Integer& n1 : lattice_candidates(step, alpha, e2))
        if (certify(n1, out)) return out;
    }
    const long len = std::min<long>(kBlock, opt.budget - start + 1);
    const bool par = opt.parallel;
#pragma omp parallel for schedule(static) if (par)
    for (long k = 0; k < len; ++k) hit[k] = prefilter(start + k);
    for (long k = 0; k < len; ++k)
      if (hit[k] && certify(Integer(start + k), out)) return out;
  }
  throw SearchBudgetExceeded("no n1 up to " + std::to_string(opt.budget));
}

FormalReal WeightSystem::column(size_t j) const {
  FormalReal s(0);
  for (size_t i = 0; i < k(); ++i) s += a[i] * b[i][j];
  return s;
}

void WeightSystem::validate() const {
  if (a.empty()) throw ValidationError("weight system needs at least one weight");
  if (b.size() != k() || eps.size() != k()) throw ValidationError("b and eps need one row per weight");
  for (const auto& row : b)
    if (row.size() != s()) throw ValidationError("b rows must have equal length");
  if (n0 <= 0) throw ValidationError("n0 must be positive");
  FormalReal sum(0), es(0);
  for (size_t i = 0; i < k(); ++i) {
    if (sign(a[i]) <= 0 || a[i] > FormalReal(1)) throw ValidationError("weights must lie in (0,1]");
    if (eps[i] < 0) throw ValidationError("eps must be non-negative");
    sum += a[i];
    es += a[i] * eps[i];
    for (const auto& x : b[i]) {
      if (x < 0 || x > 1) throw ValidationError("b entries must lie in [0,1]");
      Rational y = x * Rational(n0);
      y.canonicalize();
      if (y.get_den() != 1) throw ValidationError("n0*b must be integral");
    }
  }
  if (sum != FormalReal(1)) throw ValidationError("weights must sum to 1");
  if (sign(target) < 0) throw ValidationError("target must be non-negative");
  if (es < target) throw ValidationError("sum a_i eps_i is below the target");
  for (size_t j = 0; j < s(); ++j) {
    FormalReal x = column(j);
    if (sign(x) < 0 || x > FormalReal(1)) throw ValidationError("column sums must lie in [0,1]");
  }
}

int check_weights(const WeightSystem& ws, const Integer& p, const WeightResult& r) {
  if (r.n <= 0 || r.n % ws.n0 != 0 || r.n % p != 0) return 1;
  if (r.a.size() != ws.k()) return 2;
  Rational sum = 0;
  for (const auto& x : r.a) {
    if (x <= 0) return 2;
    sum += x;
  }
  if (sum != 1) return 2;
  for (const auto& x : r.a) {
    Rational y = Rational(r.n) * x / Rational(ws.n0);
    y.canonicalize();
    if (y.get_den() != 1) return 3;
  }
  Rational es = 0;
  for (size_t i = 0; i < ws.k(); ++i) es += r.a[i] * ws.eps[i];
  if (FormalReal(es) < ws.target) return 4;
  for (size_t j = 0; j < ws.s(); ++j) {
    FormalReal x = ws.column(j);
    Rational xp = 0;
    for (size_t i = 0; i < ws.k(); ++i) xp += r.a[i] * ws.b[i][j];
    Integer rhs = r.n * floor_of(x) + floor_of(frac_of(x) * Rational(r.n + 1));
    if (Rational(r.n) * xp != Rational(rhs)) return 5;
    if (r.moreover && FormalReal(xp) < x) return 6;
  }
  return 0;
}

WeightResult complement_weights(const WeightSystem& ws, const CoeffSet& gamma, const Integer& p,
                                const ScanOptions& opt) {
  ws.validate();
  if (p <= 0) throw ValidationError("p must be positive");
  for (size_t j = 0; j < ws.s(); ++j)
    if (!gamma.contains(ws.column(j))) throw ValidationError("column sum " + ws.column(j).str() + " is not in the set");

  if (std::all_of(ws.a.begin(), ws.a.end(), [](const FormalReal& x) { return x.is_rational(); })) {
    WeightResult r;
    std::vector<Rational> a;
    for (const auto& x : ws.a) a.push_back(x.as_rational());
    r.n = lcm_z(ws.n0 * lcm_denominators(a), p);
    r.a = a;
    if (check_weights(ws, p, r) != 0) throw ValidationError("rational weights failed verification");
    return r;
  }

  std::vector<FormalReal> span_in = gamma.values();
  span_in.push_back(ws.target);
  std::vector<FormalReal> everything = span_in;
  everything.insert(everything.end(), ws.a.begin(), ws.a.end());
  const BasisPtr B = common_basis(everything);
  const std::vector<size_t> S = support_of(everything);
  const size_t c = S.size();
  const SpanCertificate cert = span_certificate_on(span_in, S);

  // Working basis R_j and each a_i = q0 + sum q_j R_j.
  std::vector<FormalReal> R;
  std::vector<std::vector<Rational>> q(ws.k());
  std::vector<Rational> q0(ws.k());
  for (size_t i = 0; i < ws.k(); ++i) {
    std::vector<Rational> u = coords_on(ws.a[i], B, S);
    FormalReal ai = ws.a[i].over(B);
    if (cert.holds) {
      std::vector<std::vector<Rational>> V(c, std::vector<Rational>(c));
      for (size_t j = 0; j < c; ++j) {
        std::vector<Rational> vj = coords_on(cert.basis[j], B, S);
        for (size_t r = 0; r < c; ++r) V[r][j] = vj[r];
      }
      auto sol = solve_linear(V, u);
      if (!sol) throw ValidationError("certificate basis is singular");
      q[i] = *sol;
      Rational s = 0;
      for (const auto& x : q[i]) s += x;
      q0[i] = ai.rational_part() + cert.shift * s;
    } else {
      q[i] = u;
      q0[i] = ai.rational_part();
    }
  }
  if (cert.holds) {
    R = cert.basis;
  } else {
    for (size_t j = 0; j < c; ++j) {
      std::vector<Rational> unit(c, 0);
      unit[j] = 1;
      R.push_back(from_coords(B, S, unit, 0));
    }
  }
  for (size_t i = 0; i < ws.k(); ++i) {
    FormalReal back(q0[i]);
    for (size_t j = 0; j < c; ++j) back += R[j] * q[i][j];
    if (back != ws.a[i]) throw ValidationError("weight does not lie in the working span");
  }

  std::vector<Rational> all_q;
  Rational M = 0;
  for (size_t i = 0; i < ws.k(); ++i) {
    all_q.push_back(q0[i]);
    Rational row = 0;
    for (const auto& x : q[i]) {
      all_q.push_back(x);
      row += abs_q(x);
    }
    M = std::max<Rational>(M, row);
  }
  const Integer l = lcm_denominators(all_q);

  std::vector<Rational> g(c, 0);
  for (size_t i = 0; i < ws.k(); ++i)
    for (size_t j = 0; j < c; ++j) g[j] += ws.eps[i] * q[i][j];
  std::vector<Rational> e(c, 1);
  Rational tol = 1;
  if (cert.holds) {
    for (auto& x : e) x = -1;
  } else if (inf_norm(g) != 0) {
    Rational gn = 0;
    for (size_t j = 0; j < c; ++j) {
      e[j] = -g[j];
      gn += abs_q(g[j]);
    }
    Rational ge = dot(g, e) / inf_norm(e);
    tol = std::min<Rational>(tol, abs_q(ge) / (2 * gn));
  }

  FormalReal low(1);
  for (const auto& x : gamma.values()) {
    if (sign(x) > 0) low = min_of(low, x);
    if (x < FormalReal(1)) low = min_of(low, FormalReal(1) - x);
  }
  for (const auto& x : ws.a) low = min_of(low, x);
  const Rational e_dd = rational_below(low) / 2;
  Rational e_ddd = std::min<Rational>(e_dd * e_dd / M, tol) / 2;

  for (int attempt = 0; attempt < 8; ++attempt, e_ddd /= 2) {
    DirectionRequest req{l * ws.n0 * p, l * ws.n0, e_ddd, R, e};
    DirectionResult d = approximate_direction(req, opt);
    WeightResult r;
    r.n = d.n0;
    r.moreover = cert.holds;
    for (size_t i = 0; i < ws.k(); ++i) {
      Rational v = q0[i];
      for (size_t j = 0; j < c; ++j) v += q[i][j] * d.r0p[j];
      r.a.push_back(v);
    }
    if (check_weights(ws, p, r) == 0) return r;
  }
  throw SearchBudgetExceeded("no verified weights after shrinking the tolerance");
}

SimplexEnclosure simplex_enclose(const std::vector<std::vector<Rational>>& points) {
  if (points.empty()) throw ValidationError("simplex_enclose needs at least one point");
  const size_t n = points[0].size();
  Rational worst = 0;
  for (const auto& x : points) {
    if (x.size() != n) throw ValidationError("points must have equal dimension");
    Rational s = 0;
    for (const auto& v : x) s += abs_q(v);
    worst = std::max<Rational>(worst, Rational(n) * s);
  }
  SimplexEnclosure out;
  out.M = floor_q(worst) + 1;
  const Rational big = 3 * Rational(out.M);
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rational> v(n, 0);
    v[i] = big;
    out.vertices.push_back(v);
  }
  out.vertices.push_back(std::vector<Rational>(n, -big));
  for (const auto& x : points) {
    std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(n + 1));
    std::vector<Rational> rhs(n + 1);
    for (size_t r = 0; r < n; ++r) {
      for (size_t j = 0; j <= n; ++j) A[r][j] = out.vertices[j][r];
      rhs[r] = x[r];
    }
    for (size_t j = 0; j <= n; ++j) A[n][j] = 1;
    rhs[n] = 1;
    auto lam = solve_linear(A, rhs);
    if (!lam || std::any_of(lam->begin(), lam->end(), [](const Rational& v) { return v <= 0; }))
      throw ValidationError("point is not interior to the enclosing simplex");
    out.barycentric.push_back(*lam);
  }
  return out;
}

SpanCertificate span_certificate(const std::vector<FormalReal>& gamma) {
  return span_certificate_on(gamma, support_of(gamma));
}

SpanCertificate span_certificate_on(const std::vector<FormalReal>& gamma, const std::vector<size_t>& S) {
  for (const auto& x : gamma)
    if (sign(x) < 0) throw ValidationError("span certificate needs non-negative values");
  const BasisPtr B = common_basis(gamma);
  const size_t c = S.size();
  SpanCertificate cert;
  std::vector<size_t> irr;
  std::vector<std::vector<Rational>> vec(gamma.size());
  for (size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i].is_rational()) continue;
    vec[i] = coords_on(gamma[i], B, S);
    FormalReal back = from_coords(B, S, vec[i], gamma[i].over(B).rational_part());
    if (back != gamma[i]) throw ValidationError("value uses a coordinate outside the support");
    irr.push_back(i);
  }

  if (c == 0) {
    for (const auto& x : gamma) cert.coords.push_back({x.as_rational()});
    return cert;
  }

  if (!irr.empty()) {
    // Is 0 a convex combination of the coordinate vectors?
    LpProblem hull;
    hull.n = irr.size();
    hull.objective.assign(hull.n, 0);
    hull.free_var.assign(hull.n, false);
    for (size_t r = 0; r < c; ++r) {
      std::vector<Rational> row;
      for (size_t i : irr) row.push_back(vec[i][r]);
      hull.eq.push_back(row);
      hull.eq_rhs.push_back(0);
    }
    hull.eq.push_back(std::vector<Rational>(hull.n, 1));
    hull.eq_rhs.push_back(1);
    LpResult res = lp_maximize(hull);
    if (res.status == LpStatus::Optimal) {
      cert.holds = false;
      Integer L = lcm_denominators(res.x);
      std::vector<Integer> z;
      Integer g = 0;
      for (const auto& x : res.x) {
        Rational y = x * Rational(L);
        y.canonicalize();
        z.push_back(y.get_num());
        g = gcd_z(g, y.get_num());
      }
      FormalReal v(0);
      for (size_t k = 0; k < irr.size(); ++k) {
        if (z[k] == 0) continue;
        cert.members.push_back(irr[k]);
        cert.lambda.push_back(z[k] / g);
        v += gamma[irr[k]] * Rational(z[k] / g);
      }
      if (!v.is_rational() || v.is_zero()) throw ValidationError("hull witness is not a nonzero rational");
      cert.value = v.as_rational();
      return cert;
    }
  }

  // Separating functional t with t.a_i >= 1 on every coordinate vector.
  std::vector<Rational> t(c, 0);
  if (irr.empty()) {
    t[0] = 1;
  } else {
    LpProblem sep;
    sep.n = c;
    sep.objective.assign(c, 0);
    sep.free_var.assign(c, true);
    for (size_t i : irr) {
      std::vector<Rational> row;
      for (const auto& x : vec[i]) row.push_back(-x);
      sep.le.push_back(row);
      sep.le_rhs.push_back(-1);
    }
    LpResult res = lp_maximize(sep);
    if (res.status != LpStatus::Optimal) throw ValidationError("no separating functional found");
    t = res.x;
  }
  const Rational b = irr.empty() ? Rational(1) : dot(t, vec[irr[0]]);

  // Radial projections onto the hyperplane t.x = b, enclosed by a simplex there.
  std::vector<std::vector<Rational>> V;
  std::vector<std::vector<Rational>> mu(gamma.size());
  if (c == 1) {
    V.push_back({b / t[0]});
    for (size_t i : irr) mu[i] = {1};
  } else {
    size_t k = 0;
    while (t[k] == 0) ++k;
    std::vector<std::vector<Rational>> ys;
    for (size_t i : irr) {
      Rational f = b / dot(t, vec[i]);
      std::vector<Rational> y;
      for (size_t r = 0; r < c; ++r)
        if (r != k) y.push_back(vec[i][r] * f);
      ys.push_back(y);
    }
    if (ys.empty()) ys.push_back(std::vector<Rational>(c - 1, 0));
    SimplexEnclosure enc = simplex_enclose(ys);
    for (const auto& w : enc.vertices) {
      std::vector<Rational> v(c);
      Rational rest = b;
      for (size_t r = 0, m = 0; r < c; ++r) {
        if (r == k) continue;
        v[r] = w[m++];
        rest -= t[r] * v[r];
      }
      v[k] = rest / t[k];
      V.push_back(v);
    }
    for (size_t m = 0; m < irr.size(); ++m) mu[irr[m]] = enc.barycentric[m];
  }

  std::vector<std::vector<Rational>> a(gamma.size());
  Rational shift = 0;
  for (size_t i : irr) {
    Rational scale = dot(t, vec[i]) / b;
    Rational total = 0;
    for (const auto& m : mu[i]) {
      a[i].push_back(scale * m);
      total += scale * m;
    }
    Rational q0 = gamma[i].over(B).rational_part();
    if (q0 < 0) shift = std::max<Rational>(shift, -q0 / total);
  }
  cert.shift = shift;
  for (const auto& v : V) cert.basis.push_back(from_coords(B, S, v, -shift));
  for (size_t i = 0; i < gamma.size(); ++i) {
    std::vector<Rational> row{0};
    if (gamma[i].is_rational()) {
      row[0] = gamma[i].as_rational();
      row.resize(c + 1, 0);
    } else {
      Rational total = 0;
      for (const auto& x : a[i]) total += x;
      row[0] = gamma[i].over(B).rational_part() + shift * total;
      row.insert(row.end(), a[i].begin(), a[i].end());
    }
    cert.coords.push_back(row);
  }
  if (!verify_span_certificate(gamma, cert)) throw ValidationError("span certificate failed verification");
  return cert;
}

bool verify_span_certificate(const std::vector<FormalReal>& gamma, const SpanCertificate& cert) {
  if (!cert.holds) {
    if (cert.members.empty() || cert.members.size() != cert.lambda.size() || cert.value == 0) return false;
    FormalReal v(0);
    for (size_t k = 0; k < cert.members.size(); ++k) {
      if (cert.lambda[k] <= 0 || cert.members[k] >= gamma.size()) return false;
      if (gamma[cert.members[k]].is_rational()) return false;
      v += gamma[cert.members[k]] * Rational(cert.lambda[k]);
    }
    return v == FormalReal(cert.value);
  }
  const size_t c = cert.basis.size();
  if (cert.coords.size() != gamma.size()) return false;
  if (c > 0) {
    std::vector<FormalReal> bs = cert.basis;
    BasisPtr B = common_basis(bs);
    if (!B) return false;
    std::vector<size_t> all;
    for (size_t i = 1; i <= B->size(); ++i) all.push_back(i);
    std::vector<std::vector<Rational>> rows;
    for (const auto& x : bs) rows.push_back(coords_on(x, B, all));
    if (rank_of(rows) != c) return false;
  }
  for (size_t i = 0; i < gamma.size(); ++i) {
    const auto& row = cert.coords[i];
    if (row.size() != c + 1) return false;
    FormalReal v(row[0]);
    for (size_t j = 0; j < c; ++j) v += cert.basis[j] * row[j + 1];
    if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x < 0; })) return false;
    if (v != gamma[i]) return false;
  }
  return true;
}

}  // namespace surfcomp
