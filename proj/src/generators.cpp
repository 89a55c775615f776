#include "surfcomp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace surfcomp::gen {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

namespace {

const std::vector<Rational>& mark_pool() {
  static const std::vector<Rational> pool{Q(0), Q(1, 7), Q(1, 5), Q(1, 3), Q(1, 2), Q(2, 3), Q(5, 6)};
  return pool;
}

// Random end chain: empty, or the chain of a random (m, q) with m <= max_m.
DualGraph random_end(Rng& rng, long max_m, const std::string& prefix) {
  if (uniform(rng, 0, 4) == 0) return {};
  long m = uniform(rng, 2, max_m);
  std::vector<long> qs;
  for (long q = 1; q < m; ++q)
    if (std::gcd(m, q) == 1) qs.push_back(q);
  DualGraph g = chain_graph(mq_to_chain({m, pick(rng, qs)}));
  const long marks = uniform(rng, 0, 2);
  for (long i = 0; i < marks; ++i) {
    size_t br = g.branch_index(prefix + std::to_string(i + 1));
    g.add_mark(static_cast<size_t>(uniform(rng, 0, static_cast<long>(g.size()) - 1)), br);
  }
  return g;
}

bool inner_ok(const DualGraph& end, const std::vector<Rational>& coeff_of_branch) {
  if (end.empty()) return true;
  const size_t inner = end.size() - 1;
  if (end.vertices[inner].weight >= 3) return true;
  for (const auto& mk : end.marks)
    if (mk.host == inner)
      for (const auto& inc : mk.incidences)
        if (coeff_of_branch[inc.branch] > 0) return true;
  return false;
}

}  // namespace

bool closed_form_applies(const ChainFamily& f) {
  PldResult p = pld(f.graph, f.b);
  if (!p.lc) return false;
  auto sub = [&](const DualGraph& end) {
    std::vector<Rational> c;
    for (const auto& name : end.branches) {
      auto it = std::find(f.graph.branches.begin(), f.graph.branches.end(), name);
      c.push_back(f.b[static_cast<size_t>(it - f.graph.branches.begin())].as_rational());
    }
    return c;
  };
  if (!inner_ok(f.left, sub(f.left)) || !inner_ok(f.right, sub(f.right))) return false;
  FormalReal x1 = f.alpha1 / Rational(f.mq1.m - f.mq1.q);
  FormalReal x2 = f.alpha2 / Rational(f.mq2.m - f.mq2.q);
  return min_of(x1, x2) * Rational(f.A) >= FormalReal(1);
}

ChainFamily with_A(const ChainFamily& f, long A) {
  ChainFamily out = f;
  out.A = A;
  out.graph = compose_family(f.left, A, f.right);
  return out;
}

ChainFamily chain_family(Rng& rng, long max_m, long max_A) {
  for (;;) {
    ChainFamily f;
    f.left = random_end(rng, max_m, "L");
    f.right = random_end(rng, max_m, "R");
    f.A = uniform(rng, 1, max_A);
    f.graph = compose_family(f.left, f.A, f.right);
    std::set<Rational> used;
    for (size_t i = 0; i < f.graph.branches.size(); ++i) {
      Rational t = pick(rng, mark_pool());
      f.b.push_back(t);
      if (t > 0) used.insert(t);
    }
    f.gamma.assign(used.begin(), used.end());
    f.mq1 = chain_to_mq(f.left.weights());
    f.mq2 = chain_to_mq(f.right.weights());
    auto end_alpha = [&](const DualGraph& end) {
      Boundary be;
      for (const auto& name : end.branches) {
        auto it = std::find(f.graph.branches.begin(), f.graph.branches.end(), name);
        be.push_back(f.b[static_cast<size_t>(it - f.graph.branches.begin())]);
      }
      return alpha_invariant(end, be);
    };
    f.alpha1 = end_alpha(f.left);
    f.alpha2 = end_alpha(f.right);
    if (closed_form_applies(f)) return f;
  }
}

DualGraph negdef_tree(Rng& rng, size_t max_vertices, long min_weight, long max_weight, bool genus, bool marks) {
  for (;;) {
    DualGraph g;
    const size_t n = static_cast<size_t>(uniform(rng, 1, static_cast<long>(max_vertices)));
    for (size_t k = 0; k < n; ++k) {
      long w = uniform(rng, min_weight, max_weight);
      long p = genus && uniform(rng, 0, 9) == 0 ? 1 : 0;
      g.add_vertex(w, p);
      if (k > 0) g.add_edge(static_cast<size_t>(uniform(rng, 0, static_cast<long>(k) - 1)), k);
    }
    if (marks) {
      const long count = uniform(rng, 0, 3);
      for (long i = 0; i < count; ++i) {
        size_t br = g.branch_index("B" + std::to_string(i + 1));
        g.add_mark(static_cast<size_t>(uniform(rng, 0, static_cast<long>(n) - 1)), br);
      }
    }
    if (det_and_negdef(g).negdef) return g;
  }
}

Boundary random_coeffs(Rng& rng, size_t count, const std::vector<Rational>& pool) {
  Boundary b;
  for (size_t i = 0; i < count; ++i) b.push_back(pick(rng, pool));
  return b;
}

GraphPair lc_graph(Rng& rng, size_t max_vertices) {
  static const std::vector<Rational> pool{Q(0), Q(1, 4), Q(1, 3), Q(1, 2), Q(2, 3), Q(3, 4), Q(1)};
  for (;;) {
    const long min_w = uniform(rng, 0, 7) == 0 ? 1 : 2;
    DualGraph g = negdef_tree(rng, max_vertices, min_w, 5, false, true);
    Boundary b = random_coeffs(rng, g.branches.size(), pool);
    if (pld(g, b).lc) return {std::move(g), std::move(b)};
  }
}

ClusterPair smooth_cluster(Rng& rng, int max_points, int max_branches, const std::vector<Rational>& pool) {
  for (;;) {
    Cluster c;
    c.add_point();
    const int n = static_cast<int>(uniform(rng, 1, max_points));
    for (int k = 1; k < n; ++k) {
      size_t h = static_cast<size_t>(uniform(rng, 0, k - 1));
      std::optional<size_t> h2;
      if (h > 0 && uniform(rng, 0, 2) == 0) {
        std::vector<size_t> through_h{*c.points[h].host};
        if (c.points[h].host2) through_h.push_back(*c.points[h].host2);
        h2 = pick(rng, through_h);
      }
      c.add_point(h, h2);
      try {
        c.validate();
      } catch (const Error&) {
        c.points.back().host2.reset();
      }
    }
    const int nb = static_cast<int>(uniform(rng, 1, max_branches));
    std::vector<Rational> b;
    for (int i = 0; i < nb; ++i) {
      size_t end = static_cast<size_t>(uniform(rng, 0, n - 1));
      c.add_branch("B" + std::to_string(i + 1), host_path(c, end));
      b.push_back(pick(rng, pool));
    }
    try {
      c.validate();
    } catch (const Error&) {
      continue;
    }
    return {std::move(c), std::move(b)};
  }
}

std::vector<BasisPtr> audit_bases() {
  return {make_basis({{"r1", "sqrt(2)"}}), make_basis({{"r1", "sqrt(3)"}}),
          make_basis({{"r1", "sqrt(2)"}, {"r2", "sqrt(3)"}})};
}

FormalReal random_irrational(Rng& rng, const BasisPtr& basis, long max_num, long max_den) {
  for (;;) {
    std::vector<Rational> c;
    for (size_t i = 0; i <= basis->size(); ++i) c.push_back(Q(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den)));
    FormalReal x(basis, c);
    if (!x.is_rational()) return x;
  }
}

DirectionRequest direction_request(Rng& rng, const BasisPtr& basis) {
  static const std::vector<Rational> eps_pool{Q(1, 2), Q(1, 3), Q(1, 4), Q(1, 5), Q(1, 10)};
  DirectionRequest req;
  req.p0 = uniform(rng, 1, 3);
  req.l = uniform(rng, 1, 3);
  req.eps1 = pick(rng, eps_pool);
  const size_t c = basis->size();
  for (;;) {
    req.r0.clear();
    for (size_t i = 0; i < c; ++i) req.r0.push_back(random_irrational(rng, basis, 3, 4));
    if (c == 1) break;
    // 1, x1, x2 independent iff the irrational parts are independent.
    Rational det = req.r0[0].coord(1) * req.r0[1].coord(2) - req.r0[0].coord(2) * req.r0[1].coord(1);
    if (det != 0) break;
  }
  do {
    req.e.clear();
    for (size_t i = 0; i < c; ++i) req.e.push_back(Q(uniform(rng, -3, 3)));
  } while (std::all_of(req.e.begin(), req.e.end(), [](const Rational& x) { return x == 0; }));
  return req;
}

WeightInstance weight_instance(Rng& rng, const BasisPtr& basis) {
  static const std::vector<long> n0_pool{2, 3, 4, 6};
  static const std::vector<Rational> eps_pool{Q(0), Q(1, 4), Q(1, 3), Q(1, 2)};
  WeightInstance w;
  WeightSystem& ws = w.ws;
  const size_t k = static_cast<size_t>(uniform(rng, 2, 3));
  for (;;) {
    ws.a.clear();
    FormalReal rest(1);
    for (size_t i = 0; i + 1 < k; ++i) {
      std::vector<Rational> c{Q(uniform(rng, 1, 3), static_cast<long>(2 * k))};
      for (size_t j = 1; j <= basis->size(); ++j) c.push_back(Q(uniform(rng, -1, 1), uniform(rng, 8, 12)));
      ws.a.emplace_back(basis, c);
      rest -= ws.a.back();
    }
    ws.a.push_back(rest);
    bool ok = true;
    for (const auto& x : ws.a) ok = ok && sign(x) > 0 && x <= FormalReal(1);
    if (ok && !std::all_of(ws.a.begin(), ws.a.end(), [](const FormalReal& x) { return x.is_rational(); })) break;
  }
  ws.n0 = pick(rng, n0_pool);
  const size_t s = static_cast<size_t>(uniform(rng, 1, 2));
  ws.b.assign(k, std::vector<Rational>(s));
  ws.eps.clear();
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < s; ++j) ws.b[i][j] = Rational(uniform(rng, 0, ws.n0.get_si())) / Rational(ws.n0);
    ws.eps.push_back(pick(rng, eps_pool));
  }
  FormalReal es(0);
  for (size_t i = 0; i < k; ++i) es += ws.a[i] * ws.eps[i];
  switch (uniform(rng, 0, 2)) {
    case 0: ws.target = es; break;
    case 1: ws.target = FormalReal(0); break;
    default: ws.target = FormalReal(Rational(floor_of(es * Rational(10))) / 10); break;
  }
  for (size_t j = 0; j < s; ++j) w.gamma.push_back(ws.column(j));
  w.p = uniform(rng, 1, 2);
  return w;
}

std::vector<FormalReal> span_input(Rng& rng, const BasisPtr& basis) {
  std::vector<FormalReal> out;
  const long irr = uniform(rng, 1, 3);
  const long rat = uniform(rng, 0, 1);
  while (static_cast<long>(out.size()) < irr) {
    std::vector<Rational> c;
    for (size_t i = 0; i <= basis->size(); ++i) c.push_back(Q(uniform(rng, -3, 3)));
    FormalReal x(basis, c);
    if (!x.is_rational() && sign(x) > 0) out.push_back(x);
  }
  for (long i = 0; i < rat; ++i) out.emplace_back(Q(uniform(rng, 0, 3), uniform(rng, 1, 3)));
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace surfcomp::gen
