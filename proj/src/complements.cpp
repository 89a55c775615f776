#include "surfcomp/complements.hpp"

#include <algorithm>

namespace surfcomp {

namespace {

FormalReal cap_for(const FormalReal& eps) { return sign(eps) == 0 ? FormalReal(1) : FormalReal(1) - eps; }

void check_eps(const FormalReal& eps) {
  if (sign(eps) < 0 || eps >= FormalReal(1)) throw ValidationError("eps must lie in [0,1)");
}

// Splits a deficit into pieces of at most unit.
std::vector<Rational> fill(Rational deficit, const Rational& unit) {
  std::vector<Rational> out;
  while (deficit > 0) {
    Rational piece = std::min<Rational>(unit, deficit);
    out.push_back(piece);
    deficit -= piece;
  }
  return out;
}

}  // namespace

Rational rounding_bound(const FormalReal& b, const Integer& n) {
  if (n <= 0) throw ValidationError("n must be positive");
  Integer req = n * floor_of(b) + floor_of(frac_of(b) * Rational(n + 1));
  return Rational(req) / Rational(n);
}

CoeffReport check_n_complement_coeffs(const std::vector<FormalReal>& B, const ComplementCandidate& cand) {
  if (cand.n <= 0) throw ValidationError("n must be positive");
  CoeffReport rep;
  const size_t len = std::max(B.size(), cand.plus.size());
  for (size_t k = 0; k < len; ++k) {
    CoeffCheck row;
    row.index = k;
    row.shared = k < B.size() && k < cand.plus.size();
    if (k < cand.plus.size()) {
      const FormalReal& x = cand.plus[k];
      row.integral = x.is_rational() && Rational(x.as_rational() * Rational(cand.n)).get_den() == 1 && sign(x) >= 0 &&
                     x <= FormalReal(1);
    }
    if (k < B.size()) {
      row.required = cand.n * floor_of(B[k]) + floor_of(frac_of(B[k]) * Rational(cand.n + 1));
      row.bound_ok = row.shared && cand.plus[k] * Rational(cand.n) >= FormalReal(Rational(row.required));
    }
    rep.ok = rep.ok && row.integral && row.bound_ok;
    rep.rows.push_back(row);
  }
  return rep;
}

std::optional<Dim1Result> dim1_complement_at(const Dim1Germ& g, const FormalReal& eps, const Integer& n) {
  const FormalReal cap = cap_for(eps);
  Dim1Result r{n, {}, {}};
  Rational sum = 0;
  for (const auto& b : g.coeffs) {
    Rational q = rounding_bound(b, n);
    if (FormalReal(q) > cap) return std::nullopt;
    r.plus.push_back(q);
    sum += q;
  }
  if (g.local) return r;
  if (sum > 2) return std::nullopt;
  const Rational deficit = 2 - sum;
  if (deficit == 0) return r;
  const Integer units = floor_of(cap * Rational(n));
  if (units < 1) return std::nullopt;
  r.added = fill(deficit, Rational(units) / Rational(n));
  return r;
}

Dim1Result dim1_complement_search(const Dim1Germ& g, const FormalReal& eps, const Integer& p, long n_max) {
  check_eps(eps);
  if (p <= 0) throw ValidationError("p must be positive");
  if (g.local && g.coeffs.size() != 1) throw ValidationError("a local germ carries exactly one coefficient");
  FormalReal sum(0);
  const FormalReal cap = cap_for(eps);
  for (const auto& b : g.coeffs) {
    if (sign(b) < 0 || b > FormalReal(1)) throw ValidationError("coefficients must lie in [0,1]");
    if (b > cap) throw NotRComplementary("coefficient " + b.str() + " exceeds " + cap.str());
    sum += b;
  }
  if (!g.local && sum > FormalReal(2)) throw NotRComplementary("degree " + sum.str() + " exceeds 2");
  for (Integer n = p; n <= n_max; n += p)
    if (auto r = dim1_complement_at(g, eps, n)) return *r;
  throw Infeasible("no n <= " + std::to_string(n_max));
}

EllipticBase EllipticBase::xm(long m) {
  EllipticBase eb;
  eb.fibers.push_back({m, 0});
  return eb;
}

void EllipticBase::validate() const {
  if (genus != 0 && genus != 1) throw ValidationError("base genus must be 0 or 1");
  for (const auto& f : fibers) {
    if (f.m < 1) throw ValidationError("fiber multiplicity must be positive");
    if (f.b < 0 || f.b > 1) throw ValidationError("fiber coefficient must lie in [0,1]");
  }
}

std::optional<EllipticResult> elliptic_base_at(const EllipticBase& eb, const Rational& eps, const Integer& n) {
  const FormalReal cap = cap_for(eps);
  EllipticResult r{n, {}, {}};
  Rational deficit = 2 - 2 * eb.genus - eb.degL;
  std::vector<Rational> hi;
  for (const auto& f : eb.fibers) {
    Rational d = (f.m - 1 + f.b) / Rational(f.m);
    Rational lo = rounding_bound(d, n);
    Rational top = f.b == 1 ? Rational(1) : Rational(n - 1) / Rational(n);
    if (lo > top) return std::nullopt;
    r.c.push_back(lo);
    hi.push_back(top);
    deficit -= lo;
  }
  if (deficit < 0) return std::nullopt;
  if (deficit == 0) return r;
  const Integer units = floor_of(cap * Rational(n));
  if (units >= 1) {
    r.added = fill(deficit, Rational(units) / Rational(n));
    return r;
  }
  for (size_t i = 0; i < r.c.size() && deficit > 0; ++i) {
    Rational step = std::min<Rational>(hi[i] - r.c[i], deficit);
    r.c[i] += step;
    deficit -= step;
  }
  if (deficit > 0) return std::nullopt;
  return r;
}

EllipticResult elliptic_base_minimal_n(const EllipticBase& eb, const Rational& eps, long n_max) {
  eb.validate();
  check_eps(FormalReal(eps));
  for (long n = 1; n <= n_max; ++n)
    if (auto r = elliptic_base_at(eb, eps, n)) return *r;
  throw Infeasible("no n <= " + std::to_string(n_max));
}

P2Mld p2_lines_mld(const std::vector<FormalReal>& lines, const std::vector<std::vector<size_t>>& pattern) {
  const size_t L = lines.size();
  std::vector<std::vector<bool>> covered(L, std::vector<bool>(L, false));
  std::vector<std::vector<size_t>> points;
  for (auto pt : pattern) {
    std::sort(pt.begin(), pt.end());
    if (pt.size() < 2) throw UnrealizablePattern("a point needs at least two lines");
    if (pt.back() >= L) throw UnrealizablePattern("line index out of range");
    if (std::adjacent_find(pt.begin(), pt.end()) != pt.end()) throw UnrealizablePattern("repeated line at a point");
    for (size_t i = 0; i < pt.size(); ++i)
      for (size_t j = i + 1; j < pt.size(); ++j) {
        if (covered[pt[i]][pt[j]])
          throw UnrealizablePattern("lines " + std::to_string(pt[i] + 1) + " and " + std::to_string(pt[j] + 1) +
                                    " meet twice");
        covered[pt[i]][pt[j]] = true;
      }
    points.push_back(pt);
  }
  for (size_t i = 0; i < L; ++i)
    for (size_t j = i + 1; j < L; ++j)
      if (!covered[i][j]) points.push_back({i, j});

  P2Mld best{FormalReal(1), "general curve"};
  auto offer = [&](const FormalReal& v, const std::string& w) {
    if (v < best.value) best = {v, w};
  };
  for (size_t i = 0; i < L; ++i) offer(FormalReal(1) - lines[i], "L" + std::to_string(i + 1));
  for (size_t j = 0; j < points.size(); ++j) {
    Cluster cl;
    cl.add_point();
    Boundary b;
    std::vector<std::string> names;
    for (size_t i : points[j]) {
      names.push_back("L" + std::to_string(i + 1));
      cl.add_branch(names.back(), {0}, {1});
      b.push_back(lines[i]);
    }
    GermMld m = mld_smooth_germ(cl, b);
    offer(m.value, "P" + std::to_string(j + 1) + ":" + m.witness.label(names));
  }
  for (size_t i = 0; i < L; ++i) offer(FormalReal(2) - lines[i], "pt(L" + std::to_string(i + 1) + ")");
  return best;
}

DecompReport verify_decomposition(const std::vector<FormalReal>& B, const std::vector<DecompPart>& parts,
                                  const FormalReal& eps, const GermContext* ctx) {
  for (const auto& p : parts)
    if (p.coeffs.size() != B.size()) throw ValidationError("every part needs one coefficient per component");
  DecompReport rep;
  FormalReal sa(0), se(0);
  for (const auto& p : parts) {
    if (sign(p.a) <= 0) rep.ok[0] = false;
    sa += p.a;
    se += p.a * p.eps;
  }
  if (sa != FormalReal(1)) rep.ok[0] = false;
  rep.detail[0] = "sum a = " + sa.str();
  rep.ok[1] = se >= eps;
  rep.detail[1] = "sum a*eps = " + se.str();
  for (size_t k = 0; k < B.size(); ++k) {
    FormalReal s(0);
    for (const auto& p : parts) s += p.a * p.coeffs[k];
    if (s < B[k]) {
      rep.ok[2] = false;
      rep.detail[2] = "component " + std::to_string(k + 1) + " falls short";
    }
  }
  if (!ctx || (!ctx->graph && !ctx->cluster)) {
    rep.detail[3] = "no germ context";
  } else {
    rep.detail[3] = "lc verified, complement existence not checked";
    for (size_t i = 0; i < parts.size(); ++i) {
      Boundary b(parts[i].coeffs.begin(), parts[i].coeffs.end());
      try {
        FormalReal m = ctx->graph ? mld_log_smooth(*ctx->graph, b).value : mld_smooth_germ(*ctx->cluster, b).value;
        if (m < FormalReal(parts[i].eps)) {
          rep.ok[3] = false;
          rep.detail[3] = "part " + std::to_string(i + 1) + " has mld " + m.str();
        }
      } catch (const Error& e) {
        rep.ok[3] = false;
        rep.detail[3] = "part " + std::to_string(i + 1) + ": " + e.what();
      }
    }
  }
  for (const auto& p : parts) {
    if (eps.is_rational() && p.eps != eps.as_rational()) rep.ok[4] = false;
    if (eps != FormalReal(1) && p.eps == 1) rep.ok[4] = false;
  }
  return rep;
}

}  // namespace surfcomp
