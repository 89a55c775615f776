#include "surfcomp/coeff_sets.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace surfcomp {

namespace {

void sort_unique(std::vector<FormalReal>& xs) {
  std::sort(xs.begin(), xs.end(), [](const FormalReal& a, const FormalReal& b) { return compare(a, b) == Cmp::LT; });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

CoeffSet::CoeffSet(std::vector<FormalReal> xs, bool allow_above_one) : values_(std::move(xs)) {
  for (const auto& x : values_) {
    if (sign(x) < 0) throw ValidationError("coefficients must be non-negative");
    if (!allow_above_one && x > FormalReal(1)) throw ValidationError("coefficients must be at most 1");
  }
  sort_unique(values_);
}

CoeffSet CoeffSet::of(const std::vector<Rational>& xs) {
  std::vector<FormalReal> v(xs.begin(), xs.end());
  return CoeffSet(std::move(v));
}

CoeffSet CoeffSet::standard(int max_n) {
  std::vector<Rational> xs;
  for (int n = 1; n <= max_n; ++n) xs.push_back(1 - Rational(1, n));
  xs.push_back(1);
  CoeffSet s = of(xs);
  s.tag = "standard";
  s.truncation = max_n;
  return s;
}

bool CoeffSet::contains(const FormalReal& x) const {
  return std::find(values_.begin(), values_.end(), x) != values_.end();
}

std::vector<Rational> CoeffSet::rationals() const {
  std::vector<Rational> out;
  for (const auto& x : values_) out.push_back(x.as_rational());
  return out;
}

std::string CoeffSet::str() const { return join(values_); }

CoeffSet gamma_plus(const CoeffSet& gamma, int max_terms) {
  std::vector<FormalReal> level{FormalReal(0)};
  std::vector<FormalReal> all = level;
  for (int t = 0; t < max_terms; ++t) {
    std::vector<FormalReal> next;
    for (const auto& s : level)
      for (const auto& g : gamma.values()) {
        FormalReal v = s + g;
        if (v <= FormalReal(1)) next.push_back(v);
      }
    sort_unique(next);
    if (next.empty()) break;
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  CoeffSet out(std::move(all));
  out.truncation = max_terms;
  return out;
}

DSet d_of(const CoeffSet& gamma, int max_m, int max_terms) {
  CoeffSet gp = gamma_plus(gamma, max_terms);
  std::vector<DEntry> prov;
  for (long m = 1; m <= max_m; ++m)
    for (const auto& f : gp.values()) {
      FormalReal v = (f + FormalReal(m - 1)) / Rational(m);
      if (v > FormalReal(1)) continue;
      if (std::none_of(prov.begin(), prov.end(), [&](const DEntry& e) { return e.value == v; })) prov.push_back({v, m, f});
    }
  std::vector<FormalReal> vals;
  for (const auto& e : prov) vals.push_back(e.value);
  DSet out{CoeffSet(vals), {}};
  out.set.truncation = max_m;
  for (const auto& v : out.set.values())
    for (const auto& e : prov)
      if (e.value == v) out.provenance.push_back(e);
  return out;
}

DDReport check_dd_identity(const std::vector<Rational>& gamma, int bound) {
  // Gamma_+ of a finite rational set is finite; close under sums <= 1.
  std::set<Rational> gp{0};
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Rational> cur(gp.begin(), gp.end());
    for (const auto& s : cur)
      for (const auto& g : gamma)
        if (g > 0 && s + g <= 1 && gp.insert(s + g).second) grew = true;
  }
  const Integer L = lcm_denominators(std::vector<Rational>(gp.begin(), gp.end()));
  auto small = [bound](const Rational& q) { return q.get_den() <= bound; };

  // D(Gamma) with inner m up to bound*L, complete for sums of denominator <= bound.
  DDReport rep;
  rep.inner_max_m = bound * L.get_si();
  std::vector<Rational> d;
  for (long m = 1; m <= rep.inner_max_m; ++m)
    for (const auto& f : gp) {
      Rational v = (m - 1 + f) / Rational(m);
      if (v <= 1) d.push_back(v);
    }
  // D(Gamma)_+: at most one summand has m >= 2 unless the sum is 1/2 + 1/2.
  std::set<Rational> dplus{0, 1};
  std::vector<Rational> gps(gp.begin(), gp.end());
  for (const auto& x : d)
    for (const auto& g : gps) {
      Rational s = x + g;
      if (s > 1) break;
      if (small(s)) dplus.insert(s);
    }

  std::set<Rational> lhs, rhs{1};
  for (long m = 1; m <= bound; ++m) {
    for (const auto& f : dplus) {
      Rational v = (m - 1 + f) / Rational(m);
      if (v <= 1 && small(v)) lhs.insert(v);
    }
    for (const auto& f : gp) {
      Rational v = (m - 1 + f) / Rational(m);
      if (v <= 1 && small(v)) rhs.insert(v);
    }
  }
  rep.lhs_size = lhs.size();
  rep.rhs_size = rhs.size();
  for (const auto& v : lhs)
    if (!rhs.count(v)) {
      rep.holds = false;
      rep.counterexample = v;
      rep.side = "D(D(G))";
      return rep;
    }
  for (const auto& v : rhs)
    if (!lhs.count(v)) {
      rep.holds = false;
      rep.counterexample = v;
      rep.side = "D(G)+{1}";
      return rep;
    }
  return rep;
}

FormalReal Projection::apply(const FormalReal& x) const {
  for (const auto& [a, b] : map)
    if (a == x) return b;
  throw ValidationError("value outside the projection domain: " + x.str());
}

CoeffSet Projection::image() const {
  std::vector<FormalReal> v;
  for (const auto& [a, b] : map) v.push_back(b);
  return CoeffSet(v, true);
}

Projection projection_g(const CoeffSet& gamma, const CoeffSet& gamma2, const Rational& alpha) {
  if (gamma.empty()) throw EmptyGamma("projection needs a non-empty set");
  if (alpha <= 0) throw ValidationError("alpha must be positive");
  const auto& G = gamma.values();
  Integer M = floor_of(G.back());
  if (!frac_of(G.back()).is_zero()) M += 1;
  if (M < 1) M = 1;
  Integer N = ceil_q(Rational(M) / alpha);
  Rational width = Rational(1) / Rational(N);
  // Bucket 0 is [0, 1/N], bucket k is (k/N, (k+1)/N].
  auto bucket = [&](const FormalReal& x) -> Integer {
    if (x <= FormalReal(width)) return 0;
    FormalReal y = x * Rational(N);
    Integer k = floor_of(y);
    return frac_of(y).is_zero() ? Integer(k - 1) : k;
  };
  std::map<Integer, std::vector<FormalReal>> buckets;
  for (const auto& x : G) buckets[bucket(x)].push_back(x);
  const auto& G2 = gamma2.values();

  Projection p;
  p.buckets = N.get_si();
  for (const auto& x : G) {
    const auto& bk = buckets[bucket(x)];
    FormalReal gx = x;
    if (G2.empty() || x > G2.back()) {
      gx = bk.back();
    } else {
      FormalReal f = *std::find_if(G2.begin(), G2.end(), [&](const FormalReal& b) { return b >= x; });
      for (const auto& y : bk)
        if (y <= f) gx = max_of(gx, y);
    }
    p.map.emplace_back(x, gx);
  }

  for (const auto& [x, gx] : p.map) {
    if (gx < x || gx > x + FormalReal(alpha)) throw ValidationError("projection violates x <= g(x) <= x + alpha");
    if (p.apply(gx) != gx) throw ValidationError("projection is not idempotent");
    for (const auto& [y, gy] : p.map)
      if (y >= x && gy < gx) throw ValidationError("projection is not monotone");
    for (const auto& b : G2)
      if (b >= x && b < gx) throw ValidationError("projection crosses a value of the second set");
  }
  return p;
}

}  // namespace surfcomp
