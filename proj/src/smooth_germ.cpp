#include "surfcomp/smooth_germ.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace surfcomp {

size_t Cluster::add_point(std::optional<size_t> host, std::optional<size_t> host2) {
  points.push_back({host, host2});
  return points.size() - 1;
}

size_t Cluster::add_branch(const std::string& name, std::vector<size_t> through, std::vector<long> mults) {
  if (mults.empty()) mults.assign(through.size(), 1);
  branches.push_back({name, std::move(through), std::move(mults)});
  return branches.size() - 1;
}

std::vector<std::string> Cluster::branch_names() const {
  std::vector<std::string> out;
  for (const auto& b : branches) out.push_back(b.name);
  return out;
}

long Cluster::mult(size_t branch, size_t point) const {
  const auto& br = branches[branch];
  for (size_t i = 0; i < br.through.size(); ++i)
    if (br.through[i] == point) return br.mults[i];
  return 0;
}

bool Cluster::proximate(size_t q, size_t p) const {
  return q < points.size() && (points[q].host == p || points[q].host2 == p);
}

std::vector<std::pair<size_t, size_t>> Cluster::final_nodes() const {
  std::set<std::pair<size_t, size_t>> nodes;
  for (size_t p = 1; p < points.size(); ++p) {
    size_t h = *points[p].host;
    if (points[p].host2) {
      size_t h2 = *points[p].host2;
      nodes.erase({std::min(h, h2), std::max(h, h2)});
      nodes.insert({h2, p});
    }
    nodes.insert({h, p});
  }
  return {nodes.begin(), nodes.end()};
}

void Cluster::validate() const {
  if (points.empty()) throw ValidationError("cluster needs the origin point");
  if (points[0].host || points[0].host2) throw ValidationError("point 0 is the origin and has no host");
  std::set<std::pair<size_t, size_t>> nodes;
  for (size_t p = 1; p < points.size(); ++p) {
    if (!points[p].host) throw ValidationError("only point 0 may sit at the origin");
    size_t h = *points[p].host;
    if (h >= p) throw ValidationError("host must precede point");
    if (points[p].host2) {
      size_t h2 = *points[p].host2;
      if (h2 >= p) throw ValidationError("host must precede point");
      if (h2 == h) throw ValidationError("the two hosts must differ");
      auto key = std::make_pair(std::min(h, h2), std::max(h, h2));
      if (!nodes.count(key)) throw ValidationError("second host does not meet the first host at this stage");
      nodes.erase(key);
      nodes.insert({h2, p});
    }
    nodes.insert({h, p});
  }
  std::set<std::string> names;
  for (const auto& br : branches) {
    if (!names.insert(br.name).second) throw ValidationError("duplicate branch " + br.name);
    if (br.through.empty() || br.through[0] != 0) throw ValidationError("branch " + br.name + " must pass through the origin");
    if (br.mults.size() != br.through.size()) throw ValidationError("branch " + br.name + " needs one multiplicity per point");
    for (size_t i = 0; i < br.through.size(); ++i) {
      if (br.through[i] >= points.size()) throw ValidationError("branch " + br.name + " passes an unknown point");
      if (br.mults[i] < 1) throw ValidationError("branch multiplicities must be positive");
      if (i > 0 && !proximate(br.through[i], br.through[i - 1]))
        throw InvalidProximity("branch " + br.name + ": point " + std::to_string(br.through[i]) +
                               " is not on the curve of point " + std::to_string(br.through[i - 1]));
    }
  }
  for (size_t i = 0; i < branches.size(); ++i)
    for (size_t p = 0; p < points.size(); ++p) {
      long sum = 0;
      for (size_t q = p + 1; q < points.size(); ++q)
        if (proximate(q, p)) sum += mult(i, q);
      if (mult(i, p) < sum)
        throw InvalidProximity("branch " + branches[i].name + " violates the proximity inequality at point " +
                               std::to_string(p));
    }
}

std::vector<AffineForm> cluster_forms(const Cluster& cl) {
  cl.validate();
  const size_t s = cl.branches.size();
  std::vector<AffineForm> a;
  for (size_t p = 0; p < cl.points.size(); ++p) {
    AffineForm f(s, 0);
    if (p == 0) {
      f.c = 2;
    } else {
      f = a[*cl.points[p].host];
      f += cl.points[p].host2 ? a[*cl.points[p].host2] : AffineForm(s, 1);
    }
    for (size_t i = 0; i < s; ++i) f.lin[i] -= cl.mult(i, p);
    a.push_back(f);
  }
  return a;
}

std::vector<FormalReal> cluster_log_discrepancies(const Cluster& cl, const GermBoundary& b) {
  std::vector<FormalReal> out;
  for (const auto& f : cluster_forms(cl)) out.push_back(f.eval(b));
  return out;
}

Cluster resolve_to_snc(const Cluster& cl) {
  cl.validate();
  Cluster c = cl;
  for (;;) {
    bool changed = false;
    for (size_t p = 0; p < c.points.size() && !changed; ++p)
      for (size_t i = 0; i < c.branches.size() && !changed; ++i) {
        auto& br = c.branches[i];
        auto it = std::find(br.through.begin(), br.through.end(), p);
        if (it == br.through.end()) continue;
        bool last = it + 1 == br.through.end();
        long r = c.mult(i, p);
        for (size_t q = p + 1; q < c.points.size(); ++q)
          if (c.proximate(q, p)) r -= c.mult(i, q);
        if (r <= 0 || (r == 1 && last)) continue;
        size_t t = br.through.back();
        size_t np = last ? c.add_point(p) : c.add_point(t, p);
        c.branches[i].through.push_back(np);
        c.branches[i].mults.push_back(1);
        try {
          c.validate();
        } catch (const Error& e) {
          throw InvalidProximity("cannot complete branch " + c.branches[i].name + ": " + e.what());
        }
        changed = true;
      }
    if (!changed) return c;
  }
}

std::vector<Stratum> cluster_strata(const Cluster& resolved) {
  auto a = cluster_forms(resolved);
  const size_t s = resolved.branches.size();
  std::vector<Stratum> out;
  for (size_t k = 0; k < a.size(); ++k) out.push_back({Stratum::Kind::Divisor, k, k, 0, a[k]});
  for (auto [j, k] : resolved.final_nodes()) out.push_back({Stratum::Kind::Node, k, j, 0, a[j] + a[k]});
  for (size_t i = 0; i < s; ++i) {
    size_t t = resolved.branches[i].through.back();
    AffineForm f = a[t] + AffineForm(s, 1);
    f.lin[i] -= 1;
    out.push_back({Stratum::Kind::Mark, t, t, i, f});
  }
  for (size_t k = 0; k < a.size(); ++k) out.push_back({Stratum::Kind::FreePoint, k, k, 0, a[k] + AffineForm(s, 1)});
  return out;
}

namespace {

void check_lc(const std::vector<Stratum>& strata, size_t npoints, const GermBoundary& b) {
  for (const auto& x : b)
    if (x > FormalReal(1)) throw NotLC("boundary coefficient above 1");
  for (size_t k = 0; k < npoints; ++k)
    if (sign(strata[k].form.eval(b)) < 0) throw NotLC("negative log discrepancy on E" + std::to_string(k + 1));
}

}  // namespace

bool germ_is_lc(const Cluster& cl, const GermBoundary& b) {
  Cluster r = resolve_to_snc(cl);
  try {
    check_lc(cluster_strata(r), r.points.size(), b);
  } catch (const NotLC&) {
    return false;
  }
  return true;
}

GermMld mld_smooth_germ(const Cluster& cl, const GermBoundary& b) {
  if (b.size() != cl.branches.size()) throw ValidationError("one coefficient per branch is required");
  Cluster r = resolve_to_snc(cl);
  auto strata = cluster_strata(r);
  check_lc(strata, r.points.size(), b);
  MldResult m = minimize_strata(strata, b);
  GermMld out{m.value, m.witness, m.witness.form.c.get_num(), {}, r};
  for (const auto& q : m.witness.form.lin) out.l.push_back(Integer(-q));
  return out;
}

std::vector<size_t> host_path(const Cluster& cl, size_t k) {
  std::vector<size_t> path{k};
  while (path.back() != 0) path.push_back(*cl.points[path.back()].host);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Cluster> enumerate_shapes(int max_points) {
  std::vector<Cluster> out;
  std::function<void(Cluster&, size_t)> grow = [&](Cluster& c, size_t min_parent) {
    out.push_back(c);
    if (static_cast<int>(c.points.size()) >= max_points) return;
    auto nodes = c.final_nodes();
    for (size_t h = min_parent; h < c.points.size(); ++h) {
      c.add_point(h);
      grow(c, h);
      c.points.pop_back();
    }
    // satellites, ordered by their larger host
    std::sort(nodes.begin(), nodes.end(), [](const auto& x, const auto& y) {
      return std::make_pair(x.second, x.first) < std::make_pair(y.second, y.first);
    });
    for (auto [j, k] : nodes) {
      if (k < min_parent) continue;
      c.add_point(k, j);
      grow(c, k);
      c.points.pop_back();
    }
  };
  if (max_points >= 1) {
    Cluster c;
    c.add_point();
    grow(c, 0);
  }
  return out;
}

namespace {

struct ScanBest {
  bool any = false;
  Rational N;
  size_t instances = 0;
  Cluster worst;
  std::vector<Rational> coeffs;
  std::string witness;
  Rational mld;
};

ScanBest scan_shape(const Cluster& shape, const std::vector<Rational>& gamma, int max_branches) {
  ScanBest best;
  std::vector<size_t> ends;
  for (size_t p = 0; p < shape.points.size(); ++p) {
    bool free_path = true;
    for (size_t q : host_path(shape, p))
      if (shape.points[q].host2) free_path = false;
    if (free_path) ends.push_back(p);
  }
  const size_t choices = ends.size() * gamma.size();
  std::vector<size_t> cfg;
  std::function<void(size_t)> rec = [&](size_t from) {
    Cluster c = shape;
    std::vector<FormalReal> b;
    std::vector<Rational> bq;
    for (size_t i = 0; i < cfg.size(); ++i) {
      size_t t = ends[cfg[i] / gamma.size()];
      c.add_branch("B" + std::to_string(i + 1), host_path(shape, t));
      bq.push_back(gamma[cfg[i] % gamma.size()]);
      b.emplace_back(bq.back());
    }
    try {
      GermMld m = mld_smooth_germ(c, b);
      ++best.instances;
      Rational d = m.witness.depth();
      if (!best.any || d > best.N) {
        best.any = true;
        best.N = d;
        best.worst = c;
        best.coeffs = bq;
        best.witness = m.witness.label(c.branch_names());
        best.mld = m.value.as_rational();
      }
    } catch (const NotLC&) {
    }
    if (static_cast<int>(cfg.size()) >= max_branches) return;
    for (size_t e = from; e < choices; ++e) {
      cfg.push_back(e);
      rec(e);
      cfg.pop_back();
    }
  };
  rec(0);
  return best;
}

NakamuraReport merge(const std::vector<ScanBest>& parts) {
  NakamuraReport r;
  bool any = false;
  for (const auto& p : parts) {
    r.instances += p.instances;
    if (p.any && (!any || p.N > r.N)) {
      any = true;
      r.N = p.N;
      r.worst = p.worst;
      r.worst_coeffs = p.coeffs;
      r.witness = p.witness;
      r.worst_mld = p.mld;
    }
  }
  return r;
}

}  // namespace

NakamuraReport nakamura_scan_serial(const std::vector<Rational>& gamma, int max_points, int max_branches) {
  auto shapes = enumerate_shapes(max_points);
  std::vector<ScanBest> parts;
  for (const auto& s : shapes) parts.push_back(scan_shape(s, gamma, max_branches));
  return merge(parts);
}

NakamuraReport nakamura_scan(const std::vector<Rational>& gamma, int max_points, int max_branches) {
  auto shapes = enumerate_shapes(max_points);
  std::vector<ScanBest> parts(shapes.size());
  const long n = static_cast<long>(shapes.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) parts[static_cast<size_t>(i)] = scan_shape(shapes[static_cast<size_t>(i)], gamma, max_branches);
  return merge(parts);
}

}  // namespace surfcomp
