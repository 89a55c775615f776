#include "surfcomp/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace surfcomp::oracle {

namespace {

struct Curve {
  Rational coeff;        // 1 - a for exceptional curves, b for branches
  long exceptional = -1; // cluster point that created it
};

class Search {
 public:
  Search(const Cluster& cl, const std::vector<Rational>& b) : cl_(cl), b_(b) {}

  BlowupMin run(int max_depth) {
    std::vector<size_t> br(cl_.branches.size());
    for (size_t i = 0; i < br.size(); ++i) br[i] = i;
    best_ = {Rational(2), 1, 0};
    seen_ = false;
    cluster_point(0, {}, br, 1, max_depth);
    return best_;
  }

 private:
  void offer(const Rational& a, int depth) {
    ++best_.divisors;
    if (!seen_ || a < best_.value || (a == best_.value && depth < best_.depth)) best_ = {a, depth, best_.divisors};
    seen_ = true;
  }

  // Least value in the subtree of a point off the cluster, keyed by the
  // coefficients of the curves through it.
  std::pair<Rational, int> plain(std::vector<Rational> cs, int left) {
    std::sort(cs.begin(), cs.end());
    auto key = std::make_pair(cs, left);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rational a = 2;
    for (const auto& c : cs) a -= c;
    std::pair<Rational, int> out{a, 0};
    if (left > 1) {
      const Rational c_new = 1 - a;
      std::vector<std::vector<Rational>> kids{{c_new}};
      for (const auto& c : cs) kids.push_back({c, c_new});
      for (auto& kid : kids) {
        auto [v, d] = plain(kid, left - 1);
        if (v < out.first || (v == out.first && d + 1 < out.second)) out = {v, d + 1};
      }
    }
    memo_[key] = out;
    return out;
  }

  void plain_child(std::vector<Rational> cs, int depth, int max_depth) {
    ++best_.divisors;
    auto [v, d] = plain(std::move(cs), max_depth - depth + 1);
    if (!seen_ || v < best_.value || (v == best_.value && depth + d < best_.depth)) best_ = {v, depth + d, best_.divisors};
    seen_ = true;
  }

  long next_on_branch(size_t i, size_t k) const {
    const auto& t = cl_.branches[i].through;
    for (size_t j = 0; j + 1 < t.size(); ++j)
      if (t[j] == k) return static_cast<long>(t[j + 1]);
    return -1;
  }

  void cluster_point(size_t k, const std::vector<Curve>& exc, const std::vector<size_t>& branches, int depth,
                     int max_depth) {
    Rational a = 2;
    for (const auto& e : exc) a -= e.coeff;
    for (size_t i : branches) {
      if (cl_.mult(i, k) != 1) throw ValidationError("oracle handles smooth branches only");
      a -= b_[i];
    }
    offer(a, depth);
    if (depth >= max_depth) return;
    const Curve mine{1 - a, static_cast<long>(k)};

    std::vector<bool> satellite_used(exc.size(), false);
    std::vector<bool> branch_stays(branches.size(), false);
    for (size_t j = k + 1; j < cl_.points.size(); ++j) {
      if (cl_.points[j].host != k) continue;
      std::vector<Curve> ej{mine};
      if (auto h2 = cl_.points[j].host2) {
        auto it = std::find_if(exc.begin(), exc.end(), [&](const Curve& c) { return c.exceptional == static_cast<long>(*h2); });
        if (it == exc.end()) throw ValidationError("second host does not pass through the host point");
        satellite_used[static_cast<size_t>(it - exc.begin())] = true;
        ej.push_back(*it);
      }
      std::vector<size_t> bj;
      for (size_t t = 0; t < branches.size(); ++t)
        if (next_on_branch(branches[t], k) == static_cast<long>(j)) {
          bj.push_back(branches[t]);
          branch_stays[t] = true;
        }
      cluster_point(j, ej, bj, depth + 1, max_depth);
    }
    for (size_t t = 0; t < branches.size(); ++t) {
      long nx = next_on_branch(branches[t], k);
      if (nx >= 0 && !branch_stays[t]) throw ValidationError("oracle needs branches to follow host paths");
    }
    for (size_t e = 0; e < exc.size(); ++e)
      if (!satellite_used[e]) plain_child({exc[e].coeff, mine.coeff}, depth + 1, max_depth);
    for (size_t t = 0; t < branches.size(); ++t)
      if (!branch_stays[t]) plain_child({b_[branches[t]], mine.coeff}, depth + 1, max_depth);
    plain_child({mine.coeff}, depth + 1, max_depth);
  }

  const Cluster& cl_;
  const std::vector<Rational>& b_;
  BlowupMin best_;
  bool seen_ = false;
  std::map<std::pair<std::vector<Rational>, int>, std::pair<Rational, int>> memo_;
};

// floor((n+1) b) - floor(b): the least numerator over n allowed for b+.
long least_numerator(const Rational& b, long n) {
  return floor_q(Rational(n + 1) * b).get_si() - floor_q(b).get_si();
}

long cap_units(const Rational& eps, long n) {
  if (eps == 0) return n;
  return floor_q(Rational(n) * (1 - eps)).get_si();
}

// Numerators u_i in [lo_i, hi_i] with sum <= total whose leftover can be
// split into parts of size 1..unit.
bool fits(const std::vector<long>& lo, const std::vector<long>& hi, long total, long unit) {
  std::function<bool(size_t, long)> rec = [&](size_t i, long used) {
    if (used > total) return false;
    if (i == lo.size()) return used == total || unit >= 1;
    for (long u = lo[i]; u <= hi[i]; ++u)
      if (rec(i + 1, used + u)) return true;
    return false;
  };
  return rec(0, 0);
}

}  // namespace

BlowupMin blowup_mld(const Cluster& cl, const std::vector<Rational>& b, int max_depth) {
  cl.validate();
  if (b.size() != cl.branches.size()) throw ValidationError("one coefficient per branch is required");
  Search s(cl, b);
  return s.run(max_depth);
}

std::optional<long> dim1_scan(const std::vector<Rational>& b, bool local, const Rational& eps, long p, long n_max) {
  Rational sum = 0;
  for (const auto& x : b) {
    if (x > 1 - eps || x > 1) return std::nullopt;
    sum += x;
  }
  if (!local && sum > 2) return std::nullopt;
  for (long n = p; n <= n_max; n += p) {
    const long cap = cap_units(eps, n);
    std::vector<long> lo, hi;
    bool ok = true;
    for (const auto& x : b) {
      lo.push_back(least_numerator(x, n));
      hi.push_back(cap);
      ok = ok && lo.back() <= cap;
    }
    if (!ok) continue;
    if (local || fits(lo, hi, 2 * n, cap)) return n;
  }
  return std::nullopt;
}

bool elliptic_feasible(const EllipticBase& eb, const Rational& eps, long n) {
  std::vector<long> lo, hi;
  for (const auto& f : eb.fibers) {
    lo.push_back(least_numerator((Rational(f.m - 1) + f.b) / Rational(f.m), n));
    hi.push_back(f.b == 1 ? n : n - 1);
    if (lo.back() > hi.back()) return false;
  }
  const long total = (2 - 2 * eb.genus - eb.degL) * n;
  if (total < 0) return false;
  return fits(lo, hi, total, cap_units(eps, n));
}

std::vector<long> rational_combination(const std::vector<FormalReal>& gamma, long max_lambda) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& x : gamma)
    if (!x.is_rational()) rows.push_back(x.coords());
  if (rows.empty()) return {};
  const size_t c = rows[0].size() - 1;
  std::vector<std::vector<long>> v(rows.size(), std::vector<long>(c));
  for (size_t j = 1; j <= c; ++j) {
    std::vector<Rational> col;
    for (const auto& r : rows) col.push_back(r[j]);
    const Integer L = lcm_denominators(col);
    for (size_t i = 0; i < rows.size(); ++i) {
      Rational t = rows[i][j] * Rational(L);
      t.canonicalize();
      v[i][j - 1] = t.get_num().get_si();
    }
  }
  std::vector<long> lambda(rows.size(), 0);
  std::function<bool(size_t)> rec = [&](size_t i) {
    if (i == rows.size()) {
      if (std::all_of(lambda.begin(), lambda.end(), [](long x) { return x == 0; })) return false;
      for (size_t j = 0; j < c; ++j) {
        long s = 0;
        for (size_t t = 0; t < rows.size(); ++t) s += lambda[t] * v[t][j];
        if (s != 0) return false;
      }
      return true;
    }
    for (long x = 0; x <= max_lambda; ++x) {
      lambda[i] = x;
      if (rec(i + 1)) return true;
    }
    lambda[i] = 0;
    return false;
  };
  if (rec(0)) return lambda;
  return {};
}

}  // namespace surfcomp::oracle
