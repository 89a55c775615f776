#include "surfcomp/suites.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "surfcomp/coeff_sets.hpp"
#include "surfcomp/complements.hpp"
#include "surfcomp/diophantine.hpp"
#include "surfcomp/dual_graph.hpp"
#include "surfcomp/generators.hpp"
#include "surfcomp/oracles.hpp"
#include "surfcomp/polytope.hpp"
#include "surfcomp/smooth_germ.hpp"

namespace surfcomp {

std::pair<size_t, std::string> run_instances(size_t n, int jobs, const std::function<std::string(size_t)>& body) {
  std::vector<std::string> msg(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
  for (long i = 0; i < count; ++i) {
    const size_t k = static_cast<size_t>(i);
    try {
      msg[k] = body(k);
    } catch (const std::exception& e) {
      msg[k] = std::string("unexpected ") + e.what();
    }
  }
  size_t bad = 0;
  std::string first;
  for (size_t i = 0; i < n; ++i)
    if (!msg[i].empty()) {
      if (bad++ == 0) first = "instance " + std::to_string(i) + ": " + msg[i];
    }
  return {bad, first};
}

namespace {

using Clock = std::chrono::steady_clock;

gen::Rng rng_for(const SuiteOptions& opt, std::uint64_t tag, size_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(i)};
  return gen::Rng(seq);
}

CheckRow finish(const char* suite, const char* name, size_t n, std::pair<size_t, std::string> res, Clock::time_point t0,
                std::string summary = "") {
  CheckRow r;
  r.suite = suite;
  r.name = name;
  r.instances = n;
  r.failures = res.first;
  r.detail = res.first ? res.second : summary;
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

DualGraph marked_chain(const std::vector<long>& weights, size_t mark_vertex) {
  DualGraph g = chain_graph(weights);
  g.add_mark(mark_vertex, g.branch_index("B1"));
  return g;
}

std::vector<Rational> rationals(const std::vector<FormalReal>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(x.as_rational());
  return out;
}

}  // namespace

namespace checks {

CheckRow chain_32_family(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  const std::vector<Rational> ts{Q(0), Q(1, 7), Q(1, 2), Q(5, 6)};
  auto res = run_instances(30 * ts.size(), opt.jobs, [&](size_t i) -> std::string {
    const long m = static_cast<long>(i / ts.size()) + 1;
    const Rational& t = ts[i % ts.size()];
    std::vector<long> w(static_cast<size_t>(m) + 1, 2);
    w[0] = 3;
    PldResult p = pld(marked_chain(w, 0), {t});
    Rational want = ((1 - t) * (m + 1) + 1) / Rational(2 * m + 3);
    if (!p.value || *p.value != FormalReal(want))
      return "m=" + std::to_string(m) + " t=" + to_string(t) + " gave " + (p.value ? p.value->str() : "inf");
    return "";
  });
  return finish("graph", "chain_3_2s_pld", 30 * ts.size(), res, t0);
}

CheckRow closed_form(const SuiteOptions& opt, size_t count) {
  auto t0 = Clock::now();
  auto res = run_instances(count, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 2, i);
    gen::ChainFamily f = gen::chain_family(rng, 12, 40);
    PldResult p = pld(f.graph, f.b);
    FormalReal cf = pld_closed_form(f.mq1.m, f.mq1.q, f.alpha1, f.mq2.m, f.mq2.q, f.alpha2, f.A);
    if (!p.value || *p.value != cf) return "solver " + (p.value ? p.value->str() : "inf") + " vs closed form " + cf.str();
    return "";
  });
  return finish("graph", "closed_form_vs_solver", count, res, t0);
}

CheckRow cofactor(const SuiteOptions& opt, size_t count) {
  auto t0 = Clock::now();
  auto res = run_instances(count, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 3, i);
    DualGraph g = gen::negdef_tree(rng, 12, i % 5 == 0 ? 1 : 2, 6, true, true);
    auto a = log_discrepancy_forms(g);
    auto c = cofactor_forms(g);
    for (size_t k = 0; k < a.size(); ++k)
      if (a[k] != c[k]) return "E" + std::to_string(k + 1) + ": " + a[k].str() + " vs " + c[k].str();
    return "";
  });
  return finish("graph", "cofactor_vs_solve", count, res, t0);
}

CheckRow du_val(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  std::vector<std::pair<std::string, DualGraph>> graphs;
  for (int n = 1; n <= 10; ++n) graphs.emplace_back("A" + std::to_string(n), ade_A(n));
  for (int n = 4; n <= 10; ++n) graphs.emplace_back("D" + std::to_string(n), ade_D(n));
  for (int n = 6; n <= 8; ++n) graphs.emplace_back("E" + std::to_string(n), ade_E(n));
  auto res = run_instances(graphs.size(), opt.jobs, [&](size_t i) -> std::string {
    const auto& [name, g] = graphs[i];
    PldResult p = pld(g, {});
    if (!p.value || *p.value != FormalReal(1)) return name + " pld " + (p.value ? p.value->str() : "inf");
    Integer I = cartier_index(g, {}).index;
    if (I != 1) return name + " index " + to_string(I);
    return "";
  });
  return finish("graph", "du_val", graphs.size(), res, t0);
}

CheckRow mld_oracle(const SuiteOptions& opt, size_t count) {
  auto t0 = Clock::now();
  const std::vector<Rational> pool{Q(0), Q(1, 2), Q(2, 3), Q(5, 6)};
  auto res = run_instances(count, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 5, i);
    gen::ClusterPair cp = gen::smooth_cluster(rng, 5, 3, pool);
    oracle::BlowupMin o = oracle::blowup_mld(cp.c, cp.b, 8);
    Boundary b(cp.b.begin(), cp.b.end());
    try {
      GermMld m = mld_smooth_germ(cp.c, b);
      if (m.value != FormalReal(o.value)) return "library " + m.value.str() + " vs oracle " + to_string(o.value);
    } catch (const NotLC&) {
      if (o.value >= 0) return "library says not lc, oracle minimum " + to_string(o.value);
    }
    return "";
  });
  return finish("germ", "mld_vs_blowup_oracle", count, res, t0);
}

CheckRow concavity_bounds(const SuiteOptions& opt, size_t count) {
  auto t0 = Clock::now();
  std::vector<size_t> applied(count, 0);
  auto res = run_instances(count, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 6, i);
    gen::GraphPair gp = gen::lc_graph(rng, 10);
    const auto a = rationals(log_discrepancies(gp.g, gp.b));
    if (!std::all_of(a.begin(), a.end(), [](const Rational& x) { return x >= 0 && x <= 1; })) return "";
    const auto adj = gp.g.adjacency();
    auto w = [&](size_t k) { return gp.g.vertices[k].weight; };
    size_t uses = 0;
    for (size_t k = 0; k < a.size(); ++k) {
      if (a[k] > 0) {
        ++uses;
        if (Rational(w(k)) > Rational(floor_q(2 / a[k]))) return "(1) fails at E" + std::to_string(k + 1);
      }
      if (w(k) < 2) continue;
      for (size_t x : adj[k]) {
        ++uses;
        if (2 * (1 - a[k]) < 1 - a[x]) return "(2) first inequality fails at E" + std::to_string(k + 1);
      }
      for (size_t x = 0; x < adj[k].size(); ++x)
        for (size_t y = x + 1; y < adj[k].size(); ++y) {
          ++uses;
          if (2 * a[k] > a[adj[k][x]] + a[adj[k][y]]) return "(2) second inequality fails at E" + std::to_string(k + 1);
        }
    }
    // (5): paths v_0, v_1, ..., v_n with w_1 >= 3, inner weights >= 2, a_1 >= a_0.
    std::string bad;
    std::function<void(std::vector<size_t>&, const Rational&)> walk = [&](std::vector<size_t>& path, const Rational& eps) {
      const size_t n = path.size() - 1;
      if (n >= 1) {
        ++uses;
        if (Rational(static_cast<long>(n)) > Rational(floor_q(1 / eps)) && bad.empty())
          bad = "(5) fails on a path of length " + std::to_string(n);
      }
      const size_t last = path.back();
      if (n >= 2 && w(last) < 2) return;
      for (size_t x : adj[last]) {
        if (std::find(path.begin(), path.end(), x) != path.end()) continue;
        path.push_back(x);
        walk(path, eps);
        path.pop_back();
      }
    };
    for (size_t v0 = 0; v0 < a.size(); ++v0)
      for (size_t v1 : adj[v0]) {
        if (w(v1) < 3 || a[v1] < a[v0] || a[v1] <= 0) continue;
        std::vector<size_t> path{v0, v1};
        walk(path, a[v1]);
      }
    applied[i] = uses;
    return bad;
  });
  size_t total = 0;
  for (size_t x : applied) total += x;
  return finish("graph", "concavity_bounds", count, res, t0, "inequalities checked=" + std::to_string(total));
}

CheckRow acc_family(const SuiteOptions& opt, size_t families) {
  auto t0 = Clock::now();
  const Rational tol(1, 1000000);
  std::vector<Rational> gaps(families);
  std::vector<int> kinds(families, 0);
  auto res = run_instances(families, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 2, i);
    gen::ChainFamily f = gen::chain_family(rng, 12, 40);
    const FormalReal x1 = f.alpha1 / Rational(f.mq1.m - f.mq1.q);
    const FormalReal x2 = f.alpha2 / Rational(f.mq2.m - f.mq2.q);
    const Rational limit = min_of(x1, x2).as_rational();
    std::set<long> As{f.A, f.A + 1, 2 * f.A, 10 * f.A, 100, 1000, 10000, 100000};
    std::string out;
    Rational prev;
    bool first = true;
    for (long A : As) {
      if (A < f.A) continue;
      Rational v = pld_closed_form(f.mq1.m, f.mq1.q, f.alpha1, f.mq2.m, f.mq2.q, f.alpha2, A).as_rational();
      if (!first && v > prev && out.empty()) {
        out = "pld increases at A=" + std::to_string(A);
        kinds[i] |= 1;
      }
      first = false;
      prev = v;
    }
    gaps[i] = abs_q(prev - limit);
    if (gaps[i] > tol) {
      kinds[i] |= 2;
      if (out.empty()) out = "gap " + to_string(gaps[i]) + " at A=100000 (limit " + to_string(limit) + ")";
    }
    CoeffSet gp = gamma_plus(CoeffSet::of(f.gamma), 12);
    bool member = false;
    for (const auto& bp : gp.values()) {
      Rational top = 1 - bp.as_rational();
      if (limit == 0) {
        member = member || top == 0;
      } else {
        Rational l = top / limit;
        member = member || (l > 0 && l.get_den() == 1);
      }
    }
    if (!member) {
      kinds[i] |= 4;
      if (out.empty()) out = "limit " + to_string(limit) + " not of the form (1-b+)/l";
    }
    return out;
  });
  Rational worst = 0;
  size_t mono = 0, gap = 0, mem = 0;
  for (size_t i = 0; i < families; ++i) {
    worst = std::max<Rational>(worst, gaps[i]);
    mono += kinds[i] & 1 ? 1 : 0;
    gap += kinds[i] & 2 ? 1 : 0;
    mem += kinds[i] & 4 ? 1 : 0;
  }
  CheckRow r = finish("graph", "acc_limit", families, res, t0);
  r.detail = "monotone_violations=" + std::to_string(mono) + " gap_violations=" + std::to_string(gap) +
             " membership_violations=" + std::to_string(mem) + " max_gap~" + std::to_string(worst.get_d()) +
             (res.first ? "; " + res.second : "");
  return r;
}

CheckRow dd_identity(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  const std::vector<std::vector<Rational>> gammas{{Q(0)}, {Q(1, 2)}, {Q(2, 5), Q(3, 7)}};
  auto res = run_instances(gammas.size(), opt.jobs, [&](size_t i) -> std::string {
    DDReport r = check_dd_identity(gammas[i], 40);
    if (!r.holds) return "extra value " + (r.counterexample ? to_string(*r.counterexample) : "?") + " on " + r.side;
    return "";
  });
  return finish("sets", "dd_identity", gammas.size(), res, t0);
}

CheckRow minimal_complement_family(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  const Rational eps(1, 2);
  auto res = run_instances(11, opt.jobs, [&](size_t i) -> std::string {
    const long m = static_cast<long>(i) + 2;
    EllipticBase eb = EllipticBase::xm(m);
    for (long n = 1; n < m; ++n)
      if (elliptic_base_at(eb, eps, n) || oracle::elliptic_feasible(eb, eps, n))
        return "m=" + std::to_string(m) + " already works at n=" + std::to_string(n);
    if (!oracle::elliptic_feasible(eb, eps, m)) return "oracle finds no complement at n=m=" + std::to_string(m);
    EllipticResult r = elliptic_base_minimal_n(eb, eps, 64);
    if (r.n != m) return "m=" + std::to_string(m) + " minimal n " + to_string(r.n);
    return "";
  });
  return finish("complements", "minimal_complement_index", 11, res, t0);
}

CheckRow dim1_desk(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  const std::vector<Rational> pool{Q(1, 2), Q(2, 3), Q(3, 4), Q(4, 5), Q(5, 6)};
  std::vector<std::vector<Rational>> sets{{}};
  for (size_t size = 1; size <= 5; ++size) {
    std::vector<size_t> idx(size, 0);
    for (;;) {
      std::vector<Rational> s;
      Rational sum = 0;
      for (size_t k : idx) {
        s.push_back(pool[k]);
        sum += pool[k];
      }
      if (sum <= 2) sets.push_back(s);
      size_t p = size;
      while (p > 0 && idx[p - 1] == pool.size() - 1) --p;
      if (p == 0) break;
      ++idx[p - 1];
      for (size_t q = p; q < size; ++q) idx[q] = idx[p - 1];
    }
  }
  std::vector<long> n_half(sets.size(), 0);
  auto res = run_instances(sets.size(), opt.jobs, [&](size_t i) -> std::string {
    Dim1Germ g;
    for (const auto& x : sets[i]) g.coeffs.emplace_back(x);
    Dim1Result r = dim1_complement_search(g, FormalReal(0), 1, 64);
    auto o = oracle::dim1_scan(sets[i], false, 0, 1, 64);
    if (!o || Integer(*o) != r.n) return "eps=0: library " + to_string(r.n) + " vs scan " + (o ? std::to_string(*o) : "none");
    if (r.n > 6) return "eps=0 needs n=" + to_string(r.n);
    auto o2 = oracle::dim1_scan(sets[i], false, Q(1, 2), 2, 64);
    try {
      Dim1Result r2 = dim1_complement_search(g, FormalReal(Q(1, 2)), 2, 64);
      if (!o2 || Integer(*o2) != r2.n) return "eps=1/2: library " + to_string(r2.n) + " vs scan";
      n_half[i] = r2.n.get_si();
    } catch (const NotRComplementary&) {
      if (o2) return "eps=1/2: library refuses but the scan finds n=" + std::to_string(*o2);
    }
    return "";
  });
  long N = *std::max_element(n_half.begin(), n_half.end());
  return finish("complements", "dim1_desk", sets.size(), res, t0, "N=" + std::to_string(N));
}

namespace {

// Direction postconditions, restated.
std::string audit_direction(const DirectionRequest& req, const DirectionResult& r) {
  if (r.n0 <= 0 || r.n0 % req.p0 != 0) return "p0 does not divide n0";
  const size_t c = req.r0.size();
  if (r.r0p.size() != c) return "wrong length";
  std::vector<FormalReal> d;
  FormalReal dn(0);
  for (size_t i = 0; i < c; ++i) {
    Rational y = Rational(r.n0) * r.r0p[i] / Rational(req.l);
    y.canonicalize();
    if (y.get_den() != 1) return "n0 r0' not in lZ";
    d.push_back(req.r0[i] - FormalReal(r.r0p[i]));
    dn = max_of(dn, abs_of(d.back()));
  }
  if (!(dn < FormalReal(req.eps1 / Rational(r.n0)))) return "too far from r0";
  if (sign(dn) == 0) return "r0' equals r0";
  Rational en = 0;
  for (const auto& x : req.e) en = std::max<Rational>(en, abs_q(x));
  for (size_t i = 0; i < c; ++i)
    if (!(abs_of(d[i] - dn * (req.e[i] / en)) < dn * req.eps1)) return "direction off in coordinate " + std::to_string(i + 1);
  return "";
}

std::string audit_weights(const gen::WeightInstance& w, const WeightResult& r) {
  const WeightSystem& ws = w.ws;
  if (r.n % ws.n0 != 0) return "n0 does not divide n";
  if (r.n % w.p != 0) return "p does not divide n";
  Rational sum = 0, es = 0;
  for (size_t i = 0; i < ws.k(); ++i) {
    if (r.a[i] <= 0) return "non-positive weight";
    sum += r.a[i];
    es += r.a[i] * ws.eps[i];
    Rational y = Rational(r.n) * r.a[i] / Rational(ws.n0);
    y.canonicalize();
    if (y.get_den() != 1) return "n a' not in n0 Z";
  }
  if (sum != 1) return "weights do not sum to 1";
  if (FormalReal(es) < ws.target) return "eps condition fails";
  std::vector<FormalReal> span_in = w.gamma;
  span_in.push_back(ws.target);
  const bool want_moreover = span_certificate(span_in).holds;
  if (want_moreover != r.moreover) return "monotone clause flag disagrees with the span certificate";
  for (size_t j = 0; j < ws.s(); ++j) {
    FormalReal x(0);
    Rational xp = 0;
    for (size_t i = 0; i < ws.k(); ++i) {
      x += ws.a[i] * ws.b[i][j];
      xp += r.a[i] * ws.b[i][j];
    }
    Integer fl = floor_of(x);
    Integer rhs = r.n * fl + floor_of((x - FormalReal(Rational(fl))) * Rational(r.n + 1));
    if (Rational(r.n) * xp != Rational(rhs)) return "rounding identity fails in column " + std::to_string(j + 1);
    if (want_moreover && FormalReal(xp) < x) return "monotone clause fails in column " + std::to_string(j + 1);
  }
  return "";
}

}  // namespace

CheckRow dioph_audit(const SuiteOptions& opt, size_t count) {
  auto t0 = Clock::now();
  const auto bases = gen::audit_bases();
  std::vector<int> moreover(count, 0);
  auto res = run_instances(count, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 11, i);
    const BasisPtr& B = bases[(i / 2) % bases.size()];
    ScanOptions so{opt.budget, opt.jobs > 1};
    if (i % 2 == 0) {
      DirectionRequest req = gen::direction_request(rng, B);
      DirectionResult r = approximate_direction(req, so);
      std::string bad = audit_direction(req, r);
      return bad.empty() ? "" : "direction: " + bad;
    }
    gen::WeightInstance w = gen::weight_instance(rng, B);
    WeightResult r = complement_weights(w.ws, CoeffSet(w.gamma), w.p, so);
    moreover[i] = r.moreover ? 1 : 0;
    std::string bad = audit_weights(w, r);
    return bad.empty() ? "" : "weights: " + bad;
  });
  size_t m = 0;
  for (int x : moreover) m += static_cast<size_t>(x);
  return finish("dioph", "approximation_audit", count, res, t0, "monotone_clause_instances=" + std::to_string(m));
}

CheckRow span_agreement(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  const auto bases = gen::audit_bases();
  std::vector<std::vector<FormalReal>> inputs;
  // Every pair of positive a + b*sqrt2 with a, b in [-3, 3], b != 0.
  std::vector<FormalReal> singles;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      FormalReal x(bases[0], {Q(a), Q(b)});
      if (b != 0 && sign(x) > 0) singles.push_back(x);
    }
  for (size_t i = 0; i < singles.size(); ++i)
    for (size_t j = i; j < singles.size(); ++j) inputs.push_back({singles[i], singles[j]});
  for (size_t i = 0; i < 300; ++i) {
    auto rng = rng_for(opt, 12, i);
    inputs.push_back(gen::span_input(rng, bases[i % bases.size()]));
  }
  auto res = run_instances(inputs.size() + 3, opt.jobs, [&](size_t i) -> std::string {
    if (i == inputs.size()) {
      auto B = bases[0];
      FormalReal r1(B, {Q(0), Q(1)});
      std::vector<FormalReal> g{r1 - FormalReal(1), FormalReal(2) - r1};
      SpanCertificate c = span_certificate(g);
      if (c.holds || c.value != 1) return "{r1-1, 2-r1} should fail with witness 1";
      return "";
    }
    if (i == inputs.size() + 1) {
      auto B = bases[0];
      std::vector<FormalReal> g{FormalReal(B, {Q(0), Q(1, 2)})};
      SpanCertificate c = span_certificate(g);
      if (!c.holds || !verify_span_certificate(g, c)) return "{r1/2} should hold";
      return "";
    }
    if (i == inputs.size() + 2) {
      std::vector<FormalReal> g{FormalReal(Q(1, 2)), FormalReal(Q(2, 3))};
      SpanCertificate c = span_certificate(g);
      if (!c.holds || !c.basis.empty() || !verify_span_certificate(g, c)) return "rational input should hold with c=0";
      return "";
    }
    const auto& g = inputs[i];
    SpanCertificate c = span_certificate(g);
    const bool brute_holds = oracle::rational_combination(g, 50).empty();
    if (c.holds != brute_holds) return "certificate " + std::string(c.holds ? "holds" : "fails") + ", brute force disagrees";
    if (!verify_span_certificate(g, c)) return "certificate does not verify";
    return "";
  });
  return finish("dioph", "span_certificate", inputs.size() + 3, res, t0);
}

namespace {

std::string probe_certificate(const Germ& germ, const LinearityCertificate& cert, const FormalReal& eps, gen::Rng& rng) {
  std::string bad = verify_certificate(germ, cert, eps);
  if (!bad.empty()) return bad;
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> probe;
    for (const auto& [lo, hi] : cert.box) probe.push_back(lo + (hi - lo) * Q(gen::uniform(rng, 0, 1000), 1000));
    Boundary b(probe.begin(), probe.end());
    if (germ.mld(b).value != FormalReal(cert.witness.form.eval(probe))) return "witness misses mld at a probe";
  }
  for (size_t i = 0; i < cert.center.size(); ++i) {
    FormalReal s(0);
    for (size_t j = 0; j < cert.vertices.size(); ++j) s += cert.weights[j] * cert.vertices[j][i];
    if (s != cert.center[i]) return "weighted vertices miss v";
  }
  if (eps.is_rational())
    for (const auto& e : cert.eps)
      if (e != eps.as_rational()) return "eps_j differs from eps";
  return "";
}

}  // namespace

CheckRow polytope_probes(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  auto res = run_instances(2, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 13, i);
    BasisPtr B = make_basis({{"r1", "sqrt(2)"}});
    FormalReal v = FormalReal(B, {Q(0), Q(1, 2)});
    FormalReal eps(Q(1, 10));
    if (i == 0) {
      Germ germ = Germ::of(marked_chain({2}, 0));
      LinearityCertificate cert = mld_box_certify(germ, {v}, Q(1, 20), eps);
      return probe_certificate(germ, cert, eps, rng);
    }
    Germ germ = Germ::of(marked_chain({3, 2, 2, 2}, 0));
    DeltaSearch d = find_delta(germ, {v}, eps, Q(1, 4), 20);
    return probe_certificate(germ, d.cert, eps, rng);
  });
  return finish("polytope", "certificate_probes", 2, res, t0);
}

CheckRow chain_delta(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  auto res = run_instances(500, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 20, i);
    std::vector<long> w(static_cast<size_t>(gen::uniform(rng, 0, 10)));
    for (auto& x : w) x = gen::uniform(rng, 2, 9);
    ChainMQ mq = chain_to_mq(w);
    if (delta(chain_graph(w)) != mq.m) return "Delta differs from m";
    if (mq_to_chain(mq) != w) return "round trip changes the chain";
    return "";
  });
  return finish("graph", "chain_delta_is_m", 500, res, t0);
}

CheckRow logdisc_denominators(const SuiteOptions& opt, size_t count) {
  auto t0 = Clock::now();
  auto res = run_instances(count, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 21, i);
    DualGraph g = gen::negdef_tree(rng, 10, 2, 6, false, true);
    const Integer D = delta(g);
    for (const auto& f : log_discrepancy_forms(g)) {
      std::vector<Rational> xs{f.c};
      xs.insert(xs.end(), f.lin.begin(), f.lin.end());
      if (D % lcm_denominators(xs) != 0) return "denominator does not divide Delta";
    }
    return "";
  });
  return finish("graph", "denominators_divide_delta", count, res, t0);
}

CheckRow pld_equals_mld_long(const SuiteOptions& opt, size_t count) {
  auto t0 = Clock::now();
  std::vector<int> used(count, 0);
  auto res = run_instances(count, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 22, i);
    gen::ChainFamily f = gen::chain_family(rng, 6, 30);
    MldResult m = mld_log_smooth(f.graph, f.b);
    if (sign(m.value) <= 0) return "";
    const Rational eps = m.value.as_rational();
    if (Rational(static_cast<long>(f.graph.size())) <= 2 * Rational(floor_q(1 / eps))) return "";
    used[i] = 1;
    PldResult p = pld(f.graph, f.b);
    if (!p.value || *p.value != m.value) return "mld " + m.value.str() + " differs from pld";
    return "";
  });
  size_t n = 0;
  for (int x : used) n += static_cast<size_t>(x);
  return finish("graph", "long_graph_mld_is_pld", count, res, t0, "hypothesis met=" + std::to_string(n));
}

CheckRow first_blowup(const SuiteOptions& opt, size_t count) {
  auto t0 = Clock::now();
  const std::vector<Rational> pool{Q(0), Q(1, 3), Q(1, 2), Q(2, 3), Q(1)};
  auto res = run_instances(count, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 23, i);
    gen::ClusterPair cp = gen::smooth_cluster(rng, 5, 3, pool);
    Boundary b(cp.b.begin(), cp.b.end());
    FormalReal a1 = cluster_log_discrepancies(cp.c, b)[0];
    if (a1 < FormalReal(1) || !germ_is_lc(cp.c, b)) return "";
    GermMld m = mld_smooth_germ(cp.c, b);
    if (m.value != a1) return "a(E1) >= 1 but mld " + m.value.str();
    return "";
  });
  return finish("germ", "first_blowup_rule", count, res, t0);
}

CheckRow nakamura_baseline(const SuiteOptions&) {
  auto t0 = Clock::now();
  std::string bad;
  NakamuraReport a = nakamura_scan({Q(1)}, 3, 2);
  if (a.N != 2) bad = "Gamma={1}: N=" + to_string(a.N);
  NakamuraReport b = nakamura_scan({Q(1, 2)}, 4, 3);
  NakamuraReport bs = nakamura_scan_serial({Q(1, 2)}, 4, 3);
  if (bad.empty() && b.N != 3) bad = "Gamma={1/2}: N=" + to_string(b.N);
  if (bad.empty() && (b.N != bs.N || b.instances != bs.instances || !(b.worst == bs.worst)))
    bad = "parallel scan differs from the serial one";
  return finish("germ", "nakamura_baseline", 2, {bad.empty() ? 0 : 1, bad}, t0,
                "N(1)=" + to_string(a.N) + " N(1/2)=" + to_string(b.N));
}

CheckRow sets_projection(const SuiteOptions& opt, size_t count) {
  auto t0 = Clock::now();
  auto res = run_instances(count, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 24, i);
    auto random_set = [&](long size) {
      std::vector<Rational> xs;
      for (long k = 0; k < size; ++k) xs.push_back(Q(gen::uniform(rng, 0, 12), 12));
      return CoeffSet::of(xs);
    };
    CoeffSet g = random_set(gen::uniform(rng, 1, 6));
    CoeffSet g2 = random_set(gen::uniform(rng, 1, 4));
    Rational alpha = Q(1, gen::uniform(rng, 2, 8));
    Projection p = projection_g(g, g2, alpha);
    for (const auto& [x, y] : p.map) {
      if (y < x || y > x + FormalReal(alpha)) return "g moves " + x.str() + " too far";
      if (p.apply(y) != y) return "g o g differs from g at " + x.str();
      for (const auto& [x2, y2] : p.map)
        if (x <= x2 && y > y2) return "g is not monotone";
      for (const auto& beta : g2.values())
        if (beta >= x && beta < y) return "a point of the closed set separates " + x.str() + " from g";
    }
    return "";
  });
  return finish("sets", "projection_properties", count, res, t0);
}

CheckRow gamma_plus_stable(const SuiteOptions& opt) {
  auto t0 = Clock::now();
  auto res = run_instances(100, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 25, i);
    std::vector<Rational> xs;
    for (long k = gen::uniform(rng, 1, 3); k > 0; --k) {
      const long d = gen::uniform(rng, 2, 8);
      xs.push_back(Q(gen::uniform(rng, 1, d), d));
    }
    CoeffSet g = CoeffSet::of(xs);
    Rational least = *std::min_element(xs.begin(), xs.end());
    const int stable = static_cast<int>(ceil_q(1 / least).get_si());
    CoeffSet prev = gamma_plus(g, 0);
    for (int t = 1; t <= stable + 2; ++t) {
      CoeffSet cur = gamma_plus(g, t);
      for (const auto& x : prev.values())
        if (!cur.contains(x)) return "not monotone in the term count";
      if (t > stable && cur.size() != prev.size()) return "still growing past the stable level";
      prev = cur;
    }
    return "";
  });
  return finish("sets", "gamma_plus_stabilizes", 100, res, t0);
}

CheckRow monotone_reduction(const SuiteOptions& opt, size_t count) {
  auto t0 = Clock::now();
  auto res = run_instances(count, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 26, i);
    const long n = gen::uniform(rng, 1, 12);
    std::vector<FormalReal> B, P;
    bool ge = true;
    for (long k = gen::uniform(rng, 1, 4); k > 0; --k) {
      Rational b = Q(gen::uniform(rng, 0, n), n), bp = Q(gen::uniform(rng, 0, n), n);
      ge = ge && bp >= b;
      B.emplace_back(b);
      P.emplace_back(bp);
    }
    if (check_n_complement_coeffs(B, {n, P}).ok != ge) return "n=" + std::to_string(n) + " disagrees with B+ >= B";
    return "";
  });
  return finish("complements", "integral_b_reduction", count, res, t0);
}

CheckRow dim1_minimal(const SuiteOptions& opt, size_t count) {
  auto t0 = Clock::now();
  const std::vector<Rational> pool{Q(0), Q(1, 3), Q(1, 2), Q(3, 5), Q(2, 3), Q(3, 4), Q(7, 10), Q(1)};
  const std::vector<Rational> eps_pool{Q(0), Q(1, 10), Q(1, 4), Q(1, 3)};
  auto res = run_instances(count, opt.jobs, [&](size_t i) -> std::string {
    auto rng = rng_for(opt, 27, i);
    const bool local = gen::uniform(rng, 0, 3) == 0;
    std::vector<Rational> b;
    for (long k = local ? 1 : gen::uniform(rng, 0, 4); k > 0; --k) b.push_back(gen::pick(rng, pool));
    const Rational eps = gen::pick(rng, eps_pool);
    const long p = gen::uniform(rng, 1, 3);
    Dim1Germ g;
    g.local = local;
    for (const auto& x : b) g.coeffs.emplace_back(x);
    auto o = oracle::dim1_scan(b, local, eps, p, 60);
    const std::string tag = std::string(local ? "local" : "global") + " b=" + join(b) + " eps=" + to_string(eps) +
                            " p=" + std::to_string(p) + ": ";
    try {
      Dim1Result r = dim1_complement_search(g, FormalReal(eps), p, 60);
      if (!o || Integer(*o) != r.n) return "library n=" + to_string(r.n) + " vs scan " + (o ? std::to_string(*o) : "none");
      for (Integer n = p; n < r.n; n += p)
        if (dim1_complement_at(g, FormalReal(eps), n)) return "smaller n works";
      std::vector<FormalReal> plus(r.plus.begin(), r.plus.end());
      plus.insert(plus.end(), r.added.begin(), r.added.end());
      if (!check_n_complement_coeffs(g.coeffs, {r.n, plus}).ok) return "returned B+ fails the coefficient check";
    } catch (const NotRComplementary&) {
      if (o) return tag + "library refuses, scan finds n=" + std::to_string(*o);
    } catch (const Infeasible&) {
      if (o) return tag + "library infeasible, scan finds n=" + std::to_string(*o);
    }
    return "";
  });
  return finish("complements", "dim1_minimality", count, res, t0);
}

}  // namespace checks

std::vector<CheckRow> run_verify_suite(const std::string& selector, const SuiteOptions& opt) {
  static const std::vector<std::string> known{"all", "graph", "germ", "sets", "dioph", "complements", "polytope"};
  if (std::find(known.begin(), known.end(), selector) == known.end())
    throw ValidationError("unknown suite " + selector);
  auto want = [&](const char* s) { return selector == "all" || selector == s; };
  std::vector<CheckRow> rows;
  if (want("graph")) {
    rows.push_back(checks::chain_32_family(opt));
    rows.push_back(checks::closed_form(opt, 500));
    rows.push_back(checks::cofactor(opt, 300));
    rows.push_back(checks::chain_delta(opt));
    rows.push_back(checks::logdisc_denominators(opt, 200));
    rows.push_back(checks::du_val(opt));
    rows.push_back(checks::concavity_bounds(opt, 1000));
    rows.push_back(checks::pld_equals_mld_long(opt, 200));
    rows.push_back(checks::acc_family(opt, 100));
  }
  if (want("germ")) {
    rows.push_back(checks::mld_oracle(opt, 200));
    rows.push_back(checks::first_blowup(opt, 200));
    rows.push_back(checks::nakamura_baseline(opt));
  }
  if (want("sets")) {
    rows.push_back(checks::dd_identity(opt));
    rows.push_back(checks::sets_projection(opt, 200));
    rows.push_back(checks::gamma_plus_stable(opt));
  }
  if (want("dioph")) {
    rows.push_back(checks::dioph_audit(opt, 100));
    rows.push_back(checks::span_agreement(opt));
  }
  if (want("complements")) {
    rows.push_back(checks::minimal_complement_family(opt));
    rows.push_back(checks::dim1_desk(opt));
    rows.push_back(checks::monotone_reduction(opt, 300));
    rows.push_back(checks::dim1_minimal(opt, 300));
  }
  if (want("polytope")) rows.push_back(checks::polytope_probes(opt));
  return rows;
}

std::string tsv(const std::vector<CheckRow>& rows, bool timings) {
  std::ostringstream os;
  os << "suite\tcheck\tstatus\tinstances\tfailures\t" << (timings ? "seconds\t" : "") << "detail\n";
  for (const auto& r : rows) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    os << r.suite << '\t' << r.name << '\t' << (r.passed() ? "PASS" : "FAIL") << '\t' << r.instances << '\t'
       << r.failures << '\t';
    if (timings) os << secs << '\t';
    os << r.detail << '\n';
  }
  return os.str();
}

}  // namespace surfcomp
