#include "surfcomp/polytope.hpp"

#include <algorithm>
#include <numeric>

namespace surfcomp {

Germ Germ::of(DualGraph g) {
  g.validate();
  if (!is_snc_certified(g)) throw NotSNC("every mark needs one host, one branch and multiplicity 1");
  if (g.empty()) throw ValidationError("empty graph has no exceptional strata");
  Germ out;
  out.strata_ = graph_strata(g);
  out.exceptional_ = g.size();
  out.graph_ = std::move(g);
  return out;
}

Germ Germ::of(Cluster c) {
  c.validate();
  Germ out;
  Cluster r = resolve_to_snc(c);
  out.strata_ = cluster_strata(r);
  out.exceptional_ = r.points.size();
  out.cluster_ = std::move(c);
  return out;
}

size_t Germ::branches() const { return graph_ ? graph_->branches.size() : cluster_->branches.size(); }

std::vector<std::string> Germ::names() const { return graph_ ? graph_->branches : cluster_->branch_names(); }

MldResult Germ::mld(const Boundary& b) const {
  if (b.size() != branches()) throw ValidationError("one coefficient per branch is required");
  for (const auto& x : b)
    if (x > FormalReal(1)) throw NotLC("boundary coefficient above 1");
  for (size_t k = 0; k < exceptional_; ++k)
    if (sign(strata_[k].form.eval(b)) < 0) throw NotLC("negative log discrepancy on E" + std::to_string(k + 1));
  return minimize_strata(strata_, b);
}

namespace {

Rational min_value(const std::vector<Stratum>& strata, const std::vector<Rational>& x) {
  Rational m = strata[0].form.eval(x);
  for (const auto& s : strata) m = std::min<Rational>(m, s.form.eval(x));
  return m;
}

std::vector<std::vector<Rational>> corners(const std::vector<std::pair<Rational, Rational>>& box) {
  std::vector<std::vector<Rational>> out{{}};
  for (const auto& [lo, hi] : box) {
    std::vector<std::vector<Rational>> next;
    for (const auto& c : out) {
      next.push_back(c);
      next.back().push_back(lo);
      if (hi != lo) {
        next.push_back(c);
        next.back().push_back(hi);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

LinearityCertificate mld_box_certify(const Germ& germ, const std::vector<FormalReal>& v, const Rational& delta,
                                     const FormalReal& eps) {
  if (delta <= 0) throw ValidationError("delta must be positive");
  MldResult at_v = germ.mld(v);
  if (at_v.value < eps) throw NotEpsLC("mld " + at_v.value.str() + " is below " + eps.str());

  LinearityCertificate cert;
  cert.center = v;
  cert.delta = delta;
  cert.witness = at_v.witness;
  cert.witness_label = at_v.witness.label(germ.names());
  for (const auto& x : v) {
    if (x.is_rational()) {
      cert.box.emplace_back(x.as_rational(), x.as_rational());
      continue;
    }
    FormalReal y = x / delta;
    Rational lo = Rational(floor_of(y)) * delta;
    Rational hi = Rational(floor_of(y) + 1) * delta;
    cert.box.emplace_back(std::max<Rational>(lo, 0), std::min<Rational>(hi, 1));
  }

  const auto& strata = germ.strata();
  for (const auto& c : corners(cert.box)) {
    ++cert.corners_checked;
    if (cert.witness.form.eval(c) != min_value(strata, c))
      throw LinearityFailsAtDelta("witness " + cert.witness_label + " is not minimal at a box corner");
  }

  // Kuhn triangulation: order the irrational coordinates by their position in the box.
  std::vector<size_t> free;
  std::vector<FormalReal> t(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_rational()) continue;
    free.push_back(i);
    t[i] = (v[i] - FormalReal(cert.box[i].first)) / (cert.box[i].second - cert.box[i].first);
  }
  std::stable_sort(free.begin(), free.end(), [&](size_t a, size_t b) { return t[a] > t[b]; });
  std::vector<Rational> vert;
  for (size_t i = 0; i < v.size(); ++i) vert.push_back(cert.box[i].first);
  auto push = [&](const FormalReal& w) {
    if (sign(w) > 0) {
      cert.vertices.push_back(vert);
      cert.weights.push_back(w);
    }
  };
  push(free.empty() ? FormalReal(1) : FormalReal(1) - t[free[0]]);
  for (size_t k = 0; k < free.size(); ++k) {
    vert[free[k]] = cert.box[free[k]].second;
    push(k + 1 < free.size() ? t[free[k]] - t[free[k + 1]] : t[free[k]]);
  }

  for (const auto& vx : cert.vertices) {
    Rational val = cert.witness.form.eval(vx);
    if (eps.is_rational()) {
      if (val < eps.as_rational()) throw LinearityFailsAtDelta("vertex value below eps");
      cert.eps.push_back(eps.as_rational());
    } else {
      cert.eps.push_back(val);
    }
  }
  std::string bad = verify_certificate(germ, cert, eps);
  if (!bad.empty()) throw LinearityFailsAtDelta(bad);
  return cert;
}

std::string verify_certificate(const Germ& germ, const LinearityCertificate& cert, const FormalReal& eps) {
  const size_t m = cert.center.size();
  if (cert.vertices.size() != cert.weights.size() || cert.eps.size() != cert.weights.size())
    return "vertex, weight and value lists differ in length";
  FormalReal sa(0), se(0);
  std::vector<FormalReal> bary(m, FormalReal(0));
  for (size_t j = 0; j < cert.weights.size(); ++j) {
    if (sign(cert.weights[j]) <= 0) return "weights must be positive";
    sa += cert.weights[j];
    se += cert.weights[j] * cert.eps[j];
    for (size_t i = 0; i < m; ++i) {
      const auto& [lo, hi] = cert.box[i];
      if (cert.vertices[j][i] < lo || cert.vertices[j][i] > hi) return "vertex outside the box";
      bary[i] += cert.weights[j] * cert.vertices[j][i];
    }
    Boundary b(cert.vertices[j].begin(), cert.vertices[j].end());
    FormalReal mv = germ.mld(b).value;
    Rational wv = cert.witness.form.eval(cert.vertices[j]);
    if (mv != FormalReal(wv)) return "witness does not realize mld at a vertex";
    if (eps.is_rational() ? cert.eps[j] != eps.as_rational() : cert.eps[j] != wv) return "vertex value mismatch";
    if (FormalReal(cert.eps[j]) > mv) return "vertex is not eps_j-lc";
  }
  if (sa != FormalReal(1)) return "weights do not sum to 1";
  for (size_t i = 0; i < m; ++i)
    if (bary[i] != cert.center[i]) return "weighted vertices miss the center";
  if (se < eps) return "weighted values fall below eps";
  return "";
}

DeltaSearch find_delta(const Germ& germ, const std::vector<FormalReal>& v, const FormalReal& eps,
                       const Rational& delta0, int max_halvings) {
  Rational delta = delta0;
  for (int h = 0; h <= max_halvings; ++h, delta /= 2) {
    try {
      return {delta, h, mld_box_certify(germ, v, delta, eps)};
    } catch (const LinearityFailsAtDelta&) {
    }
  }
  const auto& strata = germ.strata();
  MldResult at_v = germ.mld(v);
  size_t ties = 0;
  for (const auto& s : strata)
    if (s.form.eval(v) == at_v.value && s.form != at_v.witness.form) ++ties;
  throw NoCertificateFound(ties ? "distinct candidates tie at v (a wall passes through it)"
                                : "no tie at v; delta still too coarse");
}

namespace {

// Divisor realizing pld at v must stay minimal over the divisors at every corner.
bool pld_linear(const DualGraph& g, const LinearityCertificate& cert) {
  auto forms = log_discrepancy_forms(g);
  size_t best = 0;
  FormalReal bv = forms[0].eval(cert.center);
  for (size_t k = 1; k < forms.size(); ++k) {
    FormalReal x = forms[k].eval(cert.center);
    if (x < bv) {
      bv = x;
      best = k;
    }
  }
  for (const auto& c : corners(cert.box)) {
    Rational w = forms[best].eval(c);
    for (const auto& f : forms)
      if (f.eval(c) < w) return false;
  }
  return true;
}

}  // namespace

GermDecomposition decompose_germ(const DualGraph& g, const std::vector<FormalReal>& v, const FormalReal& eps,
                                 const FormalReal& eps_pld) {
  Germ germ = Germ::of(g);
  PldResult p = pld(g, v);
  if (!p.value || *p.value != eps_pld) throw ValidationError("eps' must equal pld at v");
  Rational delta(1, 4);
  for (int h = 0; h <= 40; ++h, delta /= 2) {
    LinearityCertificate cert;
    try {
      cert = mld_box_certify(germ, v, delta, eps);
    } catch (const LinearityFailsAtDelta&) {
      continue;
    }
    if (!pld_linear(g, cert)) continue;
    GermDecomposition d;
    d.index = 1;
    for (size_t j = 0; j < cert.vertices.size(); ++j) {
      Boundary b(cert.vertices[j].begin(), cert.vertices[j].end());
      GermPart part{cert.weights[j], cert.vertices[j], cert.eps[j], pld(g, b).value->as_rational()};
      d.index = lcm_z(d.index, cartier_index(g, b).index);
      d.parts.push_back(std::move(part));
    }
    d.cert = std::move(cert);
    if (check_germ_decomposition(g, v, eps, eps_pld, d) == 0) return d;
  }
  throw LinearityFailsAtDelta("no decomposition verified down to delta " + to_string(delta));
}

int check_germ_decomposition(const DualGraph& g, const std::vector<FormalReal>& v, const FormalReal& eps,
                             const FormalReal& eps_pld, const GermDecomposition& d) {
  FormalReal sa(0), se(0), sp(0);
  std::vector<FormalReal> bary(v.size(), FormalReal(0));
  for (const auto& p : d.parts) {
    if (sign(p.a) <= 0 || p.coeffs.size() != v.size()) return 1;
    sa += p.a;
    se += p.a * p.eps;
    sp += p.a * p.pld;
    for (size_t i = 0; i < v.size(); ++i) bary[i] += p.a * p.coeffs[i];
  }
  if (d.parts.empty() || sa != FormalReal(1)) return 1;
  for (size_t i = 0; i < v.size(); ++i)
    if (bary[i] != v[i]) return 2;
  if (se < eps || sp != eps_pld) return 3;
  Germ germ = Germ::of(g);
  for (const auto& p : d.parts) {
    Boundary b(p.coeffs.begin(), p.coeffs.end());
    auto q = pld(g, b);
    if (!q.value || *q.value != FormalReal(p.pld)) return 4;
    if (germ.mld(b).value < FormalReal(p.eps)) return 5;
    if (d.index % cartier_index(g, b).index != 0) return 6;
    if (eps.is_rational() && p.eps != eps.as_rational()) return 7;
    if (eps != FormalReal(1) && p.eps == 1) return 7;
  }
  return 0;
}

}  // namespace surfcomp
