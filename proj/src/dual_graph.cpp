#include "surfcomp/dual_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace surfcomp {

size_t DualGraph::add_vertex(long weight, long genus) {
  vertices.push_back({weight, genus});
  return vertices.size() - 1;
}

void DualGraph::add_edge(size_t a, size_t b) {
  if (a >= size() || b >= size()) throw ValidationError("edge endpoint out of range");
  if (a == b) throw ValidationError("edges must not be loops");
  if (adjacent(a, b)) throw ValidationError("edges must be simple");
  edges.emplace_back(std::min(a, b), std::max(a, b));
}

size_t DualGraph::add_branch(const std::string& name) {
  if (std::find(branches.begin(), branches.end(), name) != branches.end())
    throw ValidationError("duplicate branch " + name);
  branches.push_back(name);
  return branches.size() - 1;
}

size_t DualGraph::branch_index(const std::string& name) {
  auto it = std::find(branches.begin(), branches.end(), name);
  if (it != branches.end()) return static_cast<size_t>(it - branches.begin());
  branches.push_back(name);
  return branches.size() - 1;
}

void DualGraph::add_mark(size_t vertex, size_t branch, long mult) {
  if (vertex >= size()) throw ValidationError("mark on unknown vertex");
  if (branch >= branches.size()) throw ValidationError("mark on unknown branch");
  if (mult < 1) throw ValidationError("mark multiplicity must be positive");
  marks.push_back({vertex, std::nullopt, {{branch, mult}}});
}

bool DualGraph::adjacent(size_t a, size_t b) const {
  auto e = std::make_pair(std::min(a, b), std::max(a, b));
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

std::vector<std::vector<size_t>> DualGraph::adjacency() const {
  std::vector<std::vector<size_t>> adj(size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());
  return adj;
}

size_t DualGraph::degree(size_t k) const {
  return static_cast<size_t>(
      std::count_if(edges.begin(), edges.end(), [k](const auto& e) { return e.first == k || e.second == k; }));
}

bool DualGraph::is_connected() const {
  if (empty()) return true;
  auto adj = adjacency();
  std::vector<bool> seen(size(), false);
  std::vector<size_t> stack{0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (size_t u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == size();
}

bool DualGraph::is_tree() const { return empty() || (edges.size() + 1 == size() && is_connected()); }

bool DualGraph::is_ordered_chain() const {
  if (edges.size() + 1 != size() && !(empty() && edges.empty())) return false;
  for (size_t i = 0; i + 1 < size(); ++i)
    if (!adjacent(i, i + 1)) return false;
  return true;
}

std::vector<long> DualGraph::weights() const {
  std::vector<long> w;
  for (const auto& v : vertices) w.push_back(v.weight);
  return w;
}

std::vector<std::vector<Integer>> DualGraph::matrix() const {
  std::vector<std::vector<Integer>> m(size(), std::vector<Integer>(size(), Integer(0)));
  for (size_t i = 0; i < size(); ++i) m[i][i] = -vertices[i].weight;
  for (auto [a, b] : edges) m[a][b] = m[b][a] = 1;
  return m;
}

DualGraph DualGraph::induced(const std::vector<bool>& keep) const {
  DualGraph g;
  std::vector<size_t> map(size(), SIZE_MAX);
  for (size_t i = 0; i < size(); ++i)
    if (keep[i]) map[i] = g.add_vertex(vertices[i].weight, vertices[i].genus);
  for (auto [a, b] : edges)
    if (keep[a] && keep[b]) g.edges.emplace_back(map[a], map[b]);
  return g;
}

std::vector<size_t> DualGraph::tree_path(size_t a, size_t b) const {
  auto adj = adjacency();
  std::vector<size_t> parent(size(), SIZE_MAX);
  std::vector<size_t> stack{a};
  parent[a] = a;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (size_t u : adj[v])
      if (parent[u] == SIZE_MAX) {
        parent[u] = v;
        stack.push_back(u);
      }
  }
  if (parent[b] == SIZE_MAX) throw NotATree("vertices are not connected");
  std::vector<size_t> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

AffineForm DualGraph::boundary_dot(size_t k) const {
  AffineForm f(branches.size());
  for (const auto& mk : marks) {
    if (mk.host != k && mk.host2 != k) continue;
    for (const auto& inc : mk.incidences) f.lin[inc.branch] += inc.mult;
  }
  return f;
}

void DualGraph::validate() const {
  for (const auto& v : vertices) {
    if (v.weight < 1) throw ValidationError("vertex weight must be at least 1");
    if (v.genus < 0) throw ValidationError("genus must be non-negative");
  }
  std::vector<std::pair<size_t, size_t>> seen;
  for (auto [a, b] : edges) {
    if (a >= size() || b >= size()) throw ValidationError("edge endpoint out of range");
    if (a == b) throw ValidationError("edges must not be loops");
    auto e = std::make_pair(std::min(a, b), std::max(a, b));
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) throw ValidationError("edges must be simple");
    seen.push_back(e);
  }
  for (const auto& mk : marks) {
    if (mk.host >= size()) throw ValidationError("mark on unknown vertex");
    if (mk.host2 && (*mk.host2 >= size() || !adjacent(mk.host, *mk.host2)))
      throw ValidationError("second host of a mark must be adjacent to the first");
    for (const auto& inc : mk.incidences) {
      if (inc.branch >= branches.size()) throw ValidationError("mark on unknown branch");
      if (inc.mult < 1) throw ValidationError("mark multiplicity must be positive");
    }
  }
}

bool DualGraph::operator==(const DualGraph& o) const {
  if (size() != o.size() || branches != o.branches || marks.size() != o.marks.size()) return false;
  for (size_t i = 0; i < size(); ++i)
    if (vertices[i].weight != o.vertices[i].weight || vertices[i].genus != o.vertices[i].genus) return false;
  auto e1 = edges, e2 = o.edges;
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  if (e1 != e2) return false;
  for (size_t i = 0; i < marks.size(); ++i) {
    const auto &a = marks[i], &b = o.marks[i];
    if (a.host != b.host || a.host2 != b.host2 || a.incidences.size() != b.incidences.size()) return false;
    for (size_t j = 0; j < a.incidences.size(); ++j)
      if (a.incidences[j].branch != b.incidences[j].branch || a.incidences[j].mult != b.incidences[j].mult) return false;
  }
  return true;
}

namespace {

// Elimination without row exchanges on the positive form -M. Succeeds iff
// every pivot is positive, i.e. M is negative definite. rhs is overwritten
// with the solution when given.
bool positive_solve(const DualGraph& g, std::vector<std::vector<Rational>>* rhs, Rational* det) {
  const size_t n = g.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) a[i][i] = g.vertices[i].weight;
  for (auto [x, y] : g.edges) a[x][y] = a[y][x] = -1;
  Rational d = 1;
  for (size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    d *= a[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j)
        if (a[k][j] != 0) a[i][j] -= f * a[k][j];
      if (rhs)
        for (size_t c = 0; c < (*rhs)[i].size(); ++c)
          if ((*rhs)[k][c] != 0) (*rhs)[i][c] -= f * (*rhs)[k][c];
    }
  }
  if (det) *det = d;
  if (rhs) {
    for (size_t k = n; k-- > 0;) {
      for (size_t j = k + 1; j < n; ++j) {
        if (a[k][j] == 0) continue;
        for (size_t c = 0; c < (*rhs)[k].size(); ++c) (*rhs)[k][c] -= a[k][j] * (*rhs)[j][c];
      }
      for (auto& v : (*rhs)[k]) v /= a[k][k];
    }
  }
  return true;
}

Integer bareiss_abs_det(std::vector<std::vector<Integer>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sgn = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sgn = -sgn;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  Integer d = m[n - 1][n - 1] * sgn;
  return abs(d);
}

AffineForm c_form(const DualGraph& g, size_t k) {
  AffineForm c = AffineForm(g.branches.size(), 2 - 2 * g.vertices[k].genus - static_cast<long>(g.degree(k)));
  c -= g.boundary_dot(k);
  return c;
}

}  // namespace

DetInfo det_and_negdef(const DualGraph& g) {
  Rational d;
  if (positive_solve(g, nullptr, &d)) return {d.get_num(), true};
  return {bareiss_abs_det(g.matrix()), false};
}

Integer delta(const DualGraph& g) { return det_and_negdef(g).delta; }

std::vector<AffineForm> log_discrepancy_forms(const DualGraph& g) {
  const size_t n = g.size(), s = g.branches.size();
  // (-M) a = c, one column for the constant and one per branch.
  std::vector<std::vector<Rational>> rhs(n, std::vector<Rational>(s + 1, Rational(0)));
  for (size_t k = 0; k < n; ++k) {
    AffineForm c = c_form(g, k);
    rhs[k][0] = c.c;
    for (size_t i = 0; i < s; ++i) rhs[k][i + 1] = c.lin[i];
  }
  if (!positive_solve(g, &rhs, nullptr)) throw NotNegativeDefinite("intersection matrix is not negative definite");
  std::vector<AffineForm> out(n, AffineForm(s));
  for (size_t k = 0; k < n; ++k) {
    out[k].c = rhs[k][0];
    for (size_t i = 0; i < s; ++i) out[k].lin[i] = rhs[k][i + 1];
  }
  return out;
}

std::vector<AffineForm> cofactor_forms(const DualGraph& g) {
  if (!g.is_tree()) throw NotATree("cofactor formula needs a tree");
  DetInfo info = det_and_negdef(g);
  if (!info.negdef) throw NotNegativeDefinite("intersection matrix is not negative definite");
  const size_t n = g.size();
  std::vector<AffineForm> c;
  for (size_t k = 0; k < n; ++k) c.push_back(c_form(g, k));
  std::vector<AffineForm> out(n, AffineForm(g.branches.size()));
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < n; ++k) {
      std::vector<bool> keep(n, true);
      for (size_t v : g.tree_path(j, k)) keep[v] = false;
      out[j] += c[k] * Rational(delta(g.induced(keep)));
    }
    out[j] = out[j] * (Rational(1) / Rational(info.delta));
  }
  return out;
}

std::vector<FormalReal> log_discrepancies(const DualGraph& g, const Boundary& b) {
  std::vector<FormalReal> out;
  for (const auto& f : log_discrepancy_forms(g)) out.push_back(f.eval(b));
  return out;
}

PldResult pld(const DualGraph& g, const Boundary& b) {
  PldResult r;
  for (const auto& x : b)
    if (x > FormalReal(1)) r.lc = false;
  auto a = log_discrepancies(g, b);
  for (const auto& x : a) {
    if (sign(x) < 0) r.lc = false;
    if (!r.value || x < *r.value) r.value = x;
  }
  return r;
}

ChainMQ chain_to_mq(const std::vector<long>& weights) {
  if (weights.empty()) return {1, 0};
  for (long w : weights)
    if (w < 2) throw WeightBelowTwo("chain weights must be at least 2");
  // Delta of the prefixes: m = Delta(w_1..w_n), q = Delta(w_1..w_{n-1}).
  Integer prev = 1, cur = weights[0];
  for (size_t i = 1; i < weights.size(); ++i) {
    Integer next = cur * weights[i] - prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

std::vector<long> mq_to_chain(const ChainMQ& mq) {
  if (mq.m == 1 && mq.q == 0) return {};
  if (mq.m < 2 || mq.q < 1 || mq.q >= mq.m || gcd_z(mq.m, mq.q) != 1)
    throw ValidationError("invalid (m,q): need 0 < q < m with gcd 1, or (1,0)");
  std::vector<long> rev;
  Integer m = mq.m, q = mq.q;
  while (q != 0) {
    Integer w = ceil_q(Rational(m, q));
    rev.push_back(w.get_si());
    Integer r = w * q - m;
    m = q;
    q = r;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

AffineForm alpha_form(const DualGraph& chain) {
  if (!chain.is_ordered_chain()) throw NotAChain("alpha needs a chain with v_i adjacent to v_{i+1}");
  AffineForm f(chain.branches.size(), 1);
  Integer prev = 0, cur = 1;  // Delta of the empty prefix
  for (size_t k = 0; k < chain.size(); ++k) {
    f -= chain.boundary_dot(k) * Rational(cur);
    Integer next = cur * chain.vertices[k].weight - prev;
    prev = cur;
    cur = next;
  }
  return f;
}

FormalReal alpha_invariant(const DualGraph& chain, const Boundary& b) { return alpha_form(chain).eval(b); }

std::pair<FormalReal, FormalReal> pld_closed_form_branches(const Integer& m1, const Integer& q1, const FormalReal& alpha1,
                                                           const Integer& m2, const Integer& q2, const FormalReal& alpha2,
                                                           const Integer& A) {
  if (m1 == q1 || m2 == q2) throw DegenerateMQ("m = q");
  Rational d1(m1 - q1), d2(m2 - q2);
  FormalReal x1 = alpha1 / d1, x2 = alpha2 / d2;
  Rational Q1 = Rational(q1) / d1, Q2 = Rational(q2) / d2;
  Rational M1 = Rational(m1) / d1, M2 = Rational(m2) / d2;
  Rational a(A);
  FormalReal e1 = (x1 * (a + M2) + x2 * Q1) / (a + Q1 + M2);
  FormalReal e2 = (x2 * (a + M1) + x1 * Q2) / (a + Q2 + M1);
  return {e1, e2};
}

FormalReal pld_closed_form(const Integer& m1, const Integer& q1, const FormalReal& alpha1, const Integer& m2,
                           const Integer& q2, const FormalReal& alpha2, const Integer& A) {
  auto [e1, e2] = pld_closed_form_branches(m1, q1, alpha1, m2, q2, alpha2, A);
  return min_of(e1, e2);
}

DualGraph compose_family(const DualGraph& left, long A, const DualGraph& right) {
  if (!left.is_ordered_chain() || !right.is_ordered_chain()) throw NotAChain("compose_family needs chains");
  if (A < 0) throw ValidationError("A must be non-negative");
  DualGraph g;
  for (const auto& v : left.vertices) g.add_vertex(v.weight, v.genus);
  for (long i = 0; i < A; ++i) g.add_vertex(2);
  for (size_t k = right.size(); k-- > 0;) g.add_vertex(right.vertices[k].weight, right.vertices[k].genus);
  for (size_t i = 0; i + 1 < g.size(); ++i) g.add_edge(i, i + 1);
  const size_t offset = left.size() + static_cast<size_t>(A);
  auto copy_marks = [&g](const DualGraph& part, const std::function<size_t(size_t)>& map) {
    for (const auto& mk : part.marks) {
      MarkedPoint p;
      p.host = map(mk.host);
      if (mk.host2) p.host2 = map(*mk.host2);
      for (const auto& inc : mk.incidences) p.incidences.push_back({g.branch_index(part.branches[inc.branch]), inc.mult});
      g.marks.push_back(p);
    }
  };
  copy_marks(left, [](size_t k) { return k; });
  copy_marks(right, [&](size_t k) { return offset + (right.size() - 1 - k); });
  return g;
}

std::vector<Stratum> graph_strata(const DualGraph& g) {
  auto a = log_discrepancy_forms(g);
  const size_t s = g.branches.size();
  std::vector<Stratum> out;
  for (size_t k = 0; k < g.size(); ++k) out.push_back({Stratum::Kind::Divisor, k, k, 0, a[k]});
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (auto [j, k] : edges) out.push_back({Stratum::Kind::Node, k, j, 0, a[j] + a[k]});
  for (const auto& mk : g.marks)
    for (const auto& inc : mk.incidences) {
      AffineForm f = a[mk.host] + AffineForm(s, 1);
      f.lin[inc.branch] -= 1;
      out.push_back({Stratum::Kind::Mark, mk.host, mk.host, inc.branch, f});
    }
  for (size_t k = 0; k < g.size(); ++k) out.push_back({Stratum::Kind::FreePoint, k, k, 0, a[k] + AffineForm(s, 1)});
  return out;
}

MldResult minimize_strata(const std::vector<Stratum>& strata, const Boundary& b) {
  if (strata.empty()) throw ValidationError("no strata to minimize over");
  size_t best = 0;
  FormalReal bv = strata[0].form.eval(b);
  for (size_t i = 1; i < strata.size(); ++i) {
    FormalReal v = strata[i].form.eval(b);
    Cmp c = compare(v, bv);
    if (c == Cmp::LT || (c == Cmp::EQ && strata[i].depth() < strata[best].depth())) {
      best = i;
      bv = v;
    }
  }
  return {bv, strata[best]};
}

bool is_snc_certified(const DualGraph& g) {
  for (const auto& mk : g.marks)
    if (mk.host2 || mk.incidences.size() != 1 || mk.incidences[0].mult != 1) return false;
  return true;
}

MldResult mld_log_smooth(const DualGraph& g, const Boundary& b) {
  if (!is_snc_certified(g)) throw NotSNC("every mark needs one host, one branch and multiplicity 1");
  if (g.empty()) throw ValidationError("empty graph has no exceptional strata");
  auto strata = graph_strata(g);
  for (const auto& x : b)
    if (x > FormalReal(1)) throw NotLC("boundary coefficient above 1");
  for (size_t k = 0; k < g.size(); ++k)
    if (sign(strata[k].form.eval(b)) < 0) throw NotLC("negative log discrepancy on E" + std::to_string(k + 1));
  return minimize_strata(strata, b);
}

CartierIndex cartier_index(const DualGraph& g, const Boundary& b) {
  std::vector<Rational> qs;
  for (const auto& x : b) {
    if (!x.is_rational()) throw IrrationalCoefficient("Cartier index needs rational coefficients");
    qs.push_back(x.as_rational());
  }
  PldResult p = pld(g, b);
  if (!p.lc) throw NotLC("pair is not lc");
  for (const auto& a : log_discrepancies(g, b)) qs.push_back(1 - a.as_rational());
  CartierIndex ci;
  ci.index = qs.empty() ? Integer(1) : lcm_denominators(qs);
  ci.descent_verified = !p.value || sign(*p.value) > 0;
  return ci;
}

DualGraph chain_graph(const std::vector<long>& weights) {
  DualGraph g;
  for (long w : weights) g.add_vertex(w);
  for (size_t i = 0; i + 1 < g.size(); ++i) g.add_edge(i, i + 1);
  return g;
}

DualGraph ade_A(int n) {
  if (n < 1) throw ValidationError("A_n needs n >= 1");
  return chain_graph(std::vector<long>(static_cast<size_t>(n), 2));
}

DualGraph ade_D(int n) {
  if (n < 4) throw ValidationError("D_n needs n >= 4");
  DualGraph g = ade_A(n - 1);
  size_t leaf = g.add_vertex(2);
  g.add_edge(1, leaf);
  return g;
}

DualGraph ade_E(int n) {
  if (n < 6 || n > 8) throw ValidationError("E_n needs n in {6,7,8}");
  DualGraph g = ade_A(n - 1);
  size_t leaf = g.add_vertex(2);
  g.add_edge(2, leaf);
  return g;
}

}  // namespace surfcomp
