#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "surfcomp/diophantine.hpp"

using namespace surfcomp;

namespace {

BasisPtr root2() { return make_basis({{"r1", "sqrt(2)"}}); }
BasisPtr root3() { return make_basis({{"r1", "sqrt(3)"}}); }
BasisPtr root23() { return make_basis({{"r1", "sqrt(2)"}, {"r2", "sqrt(3)"}}); }

// Conditions (1)-(4) in long double with a safety margin; the instances here
// stay far from the boundary.
bool numeric_direction_ok(const DirectionRequest& req, const DirectionResult& r) {
  if (r.n0 <= 0 || r.n0 % req.p0 != 0) return false;
  const size_t c = req.r0.size();
  std::vector<double> d(c);
  double dmax = 0, emax = 0;
  for (size_t i = 0; i < c; ++i) {
    Rational y = Rational(r.n0) * r.r0p[i] / Rational(req.l);
    y.canonicalize();
    if (y.get_den() != 1) return false;
    d[i] = req.r0[i].approx() - r.r0p[i].get_d();
    dmax = std::max(dmax, std::fabs(d[i]));
    emax = std::max(emax, std::fabs(req.e[i].get_d()));
  }
  if (dmax == 0 || dmax >= req.eps1.get_d() / r.n0.get_d()) return false;
  for (size_t i = 0; i < c; ++i)
    if (std::fabs(d[i] / dmax - req.e[i].get_d() / emax) >= req.eps1.get_d()) return false;
  return true;
}

// Conditions (1)-(5) restated with exact floors of rationals bracketing x.
bool weights_ok(const WeightSystem& ws, const Integer& p, const WeightResult& r) {
  if (r.n % ws.n0 != 0 || r.n % p != 0) return false;
  Rational sum = 0, es = 0;
  for (size_t i = 0; i < r.a.size(); ++i) {
    sum += r.a[i];
    es += r.a[i] * ws.eps[i];
    Rational y = Rational(r.n) * r.a[i] / Rational(ws.n0);
    y.canonicalize();
    if (y.get_den() != 1 || r.a[i] <= 0) return false;
  }
  if (sum != 1 || FormalReal(es) < ws.target) return false;
  for (size_t j = 0; j < ws.s(); ++j) {
    FormalReal x(0);
    Rational xp = 0;
    for (size_t i = 0; i < ws.k(); ++i) {
      x += ws.a[i] * ws.b[i][j];
      xp += r.a[i] * ws.b[i][j];
    }
    const Integer fl = floor_of(x);
    const Integer fr = floor_of((x - FormalReal(Rational(fl))) * Rational(r.n + 1));
    if (Rational(r.n) * xp != Rational(r.n * fl + fr)) return false;
  }
  return true;
}

}  // namespace

TEST(Direction, SqrtTwoExampleOutputIsValid) {
  DirectionRequest req;
  req.eps1 = Q(1, 2);
  req.r0 = {FormalReal(root2(), {Q(0), Q(1)})};
  req.e = {Q(1)};
  EXPECT_EQ(check_direction(req, 5, {Q(7, 5)}), 0);
  EXPECT_EQ(check_direction(req, 5, {Q(8, 5)}), 3);
  DirectionResult r = approximate_direction(req);
  EXPECT_EQ(check_direction(req, r.n0, r.r0p), 0);
  EXPECT_TRUE(numeric_direction_ok(req, r));
}

TEST(Direction, SqrtThreeCoarseTolerance) {
  DirectionRequest req;
  req.p0 = 3;
  req.eps1 = Q(2);
  req.r0 = {FormalReal(root3(), {Q(0), Q(1)})};
  req.e = {Q(1)};
  EXPECT_EQ(check_direction(req, 3, {Q(5, 3)}), 0);
  EXPECT_EQ(check_direction(req, 2, {Q(3, 2)}), 1);
  DirectionResult r = approximate_direction(req);
  EXPECT_EQ(r.n0 % 3, 0);
  EXPECT_LT(r.r0p[0].get_d(), std::sqrt(3.0));
  EXPECT_TRUE(numeric_direction_ok(req, r));
}

TEST(Direction, RationalPointRejected) {
  DirectionRequest req;
  req.eps1 = Q(1, 2);
  req.r0 = {FormalReal(Q(1, 2))};
  req.e = {Q(1)};
  EXPECT_THROW(approximate_direction(req), ValidationError);
}

TEST(Direction, TwoIrrationalsWithSkewDirection) {
  DirectionRequest req;
  req.p0 = 2;
  req.l = 3;
  req.eps1 = Q(1, 5);
  auto B = root23();
  req.r0 = {FormalReal(B, {Q(0), Q(1), Q(0)}), FormalReal(B, {Q(0), Q(0), Q(1)})};
  req.e = {Q(-1), Q(1, 2)};
  DirectionResult r = approximate_direction(req);
  EXPECT_EQ(check_direction(req, r.n0, r.r0p), 0);
  EXPECT_TRUE(numeric_direction_ok(req, r));
}

TEST(Direction, BudgetExceeded) {
  DirectionRequest req;
  req.eps1 = Q(1, 100000);
  auto B = root23();
  req.r0 = {FormalReal(B, {Q(0), Q(1), Q(0)}), FormalReal(B, {Q(0), Q(0), Q(1)})};
  req.e = {Q(1), Q(1)};
  ScanOptions opt;
  opt.budget = 50;
  EXPECT_THROW(approximate_direction(req, opt), SearchBudgetExceeded);
}

TEST(Weights, RationalFixedPoint) {
  WeightSystem ws;
  ws.a = {FormalReal(Q(1, 3)), FormalReal(Q(2, 3))};
  ws.b = {{Q(1, 2)}, {Q(0)}};
  ws.eps = {Q(1, 2), Q(1, 4)};
  ws.target = FormalReal(Q(1, 4));
  ws.n0 = 2;
  WeightResult r = complement_weights(ws, CoeffSet::of({Q(1, 6)}), 5);
  EXPECT_EQ(r.n, 30);
  EXPECT_EQ(r.a, (std::vector<Rational>{Q(1, 3), Q(2, 3)}));
  EXPECT_EQ(check_weights(ws, 5, r), 0);
}

TEST(Weights, SingleWeight) {
  WeightSystem ws;
  ws.a = {FormalReal(1)};
  ws.b = {{Q(1, 2)}};
  ws.eps = {Q(1, 3)};
  ws.target = FormalReal(Q(1, 3));
  ws.n0 = 2;
  WeightResult r = complement_weights(ws, CoeffSet::of({Q(1, 2)}), 3);
  EXPECT_EQ(r.n, 6);
  EXPECT_EQ(r.a, (std::vector<Rational>{Q(1)}));
}

TEST(Weights, HalfRootTwoSplit) {
  auto B = root2();
  WeightSystem ws;
  FormalReal h(B, {Q(0), Q(1, 2)});
  ws.a = {h, FormalReal(1) - h};
  ws.b = {{Q(1)}, {Q(0)}};
  ws.eps = {Q(1, 2), Q(1, 2)};
  ws.target = FormalReal(Q(1, 2));
  ws.n0 = 2;
  WeightResult r = complement_weights(ws, CoeffSet({h}), 1);
  EXPECT_EQ(check_weights(ws, 1, r), 0);
  EXPECT_TRUE(weights_ok(ws, 1, r));
  const Integer n1 = floor_of(h * Rational(r.n + 1));
  EXPECT_EQ(Rational(r.n) * r.a[0], Rational(n1));
}

TEST(Weights, ColumnOutsideSetRejected) {
  WeightSystem ws;
  ws.a = {FormalReal(1)};
  ws.b = {{Q(1, 2)}};
  ws.eps = {Q(0)};
  ws.target = FormalReal(0);
  EXPECT_THROW(complement_weights(ws, CoeffSet::of({Q(1, 3)}), 1), ValidationError);
}

TEST(Simplex, Examples) {
  SimplexEnclosure a = simplex_enclose({{Q(0)}});
  EXPECT_EQ(a.M, 1);
  EXPECT_EQ(a.vertices, (std::vector<std::vector<Rational>>{{Q(3)}, {Q(-3)}}));

  for (const auto& pts : std::vector<std::vector<std::vector<Rational>>>{
           {{Q(1), Q(0)}, {Q(0), Q(1)}}, {{Q(1000000), Q(1000000)}}, {{Q(-7, 3), Q(2)}, {Q(5), Q(-1, 9)}}}) {
    SimplexEnclosure s = simplex_enclose(pts);
    ASSERT_EQ(s.vertices.size(), 3u);
    ASSERT_EQ(s.barycentric.size(), pts.size());
    for (size_t p = 0; p < pts.size(); ++p) {
      Rational total = 0;
      std::vector<Rational> back(2, 0);
      for (size_t j = 0; j < 3; ++j) {
        EXPECT_GT(s.barycentric[p][j], 0);
        total += s.barycentric[p][j];
        for (size_t r = 0; r < 2; ++r) back[r] += s.barycentric[p][j] * s.vertices[j][r];
      }
      EXPECT_EQ(total, 1);
      EXPECT_EQ(back, pts[p]);
    }
  }
}

TEST(Span, Examples) {
  auto B = root2();
  std::vector<FormalReal> bad{FormalReal(B, {Q(-1), Q(1)}), FormalReal(B, {Q(2), Q(-1)})};
  SpanCertificate c = span_certificate(bad);
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.value, 1);
  EXPECT_TRUE(verify_span_certificate(bad, c));

  std::vector<FormalReal> half{FormalReal(B, {Q(0), Q(1, 2)})};
  SpanCertificate h = span_certificate(half);
  EXPECT_TRUE(h.holds);
  EXPECT_TRUE(verify_span_certificate(half, h));

  std::vector<FormalReal> rat{FormalReal(Q(1, 2)), FormalReal(Q(2, 3))};
  SpanCertificate r = span_certificate(rat);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.basis.empty());
}

// Brute force: a rational positive combination of at most three members with
// coefficients k/6, k <= 6.
TEST(SpanProperty, AgreesWithSmallBruteForce) {
  auto B = root2();
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> num(-4, 4);
  for (int t = 0; t < 150; ++t) {
    std::vector<FormalReal> g;
    for (int i = 0; i < 3; ++i) {
      long b = num(rng);
      if (b == 0) b = 1;
      // keep the value positive with a large rational part
      g.push_back(FormalReal(B, {Q(num(rng)) + Q(6 * std::labs(b)), Q(b)}));
    }
    bool rational_sum = false;
    for (long x = 0; x <= 6 && !rational_sum; ++x)
      for (long y = 0; y <= 6 && !rational_sum; ++y)
        for (long z = 0; z <= 6 && !rational_sum; ++z) {
          if (x + y + z == 0) continue;
          FormalReal s = g[0] * Q(x) + g[1] * Q(y) + g[2] * Q(z);
          rational_sum = s.is_rational();
        }
    SpanCertificate c = span_certificate(g);
    EXPECT_EQ(c.holds, !rational_sum);
    EXPECT_TRUE(verify_span_certificate(g, c));
  }
}

TEST(DiophantineProperty, RandomDirectionsVerify) {
  auto B = root23();
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> e(-3, 3), small(1, 3);
  for (int t = 0; t < 20; ++t) {
    DirectionRequest req;
    req.p0 = small(rng);
    req.l = small(rng);
    req.eps1 = Q(1, 2 + static_cast<long>(rng() % 6));
    req.r0 = {FormalReal(B, {Q(e(rng)), Q(1), Q(0)}), FormalReal(B, {Q(0), Q(0), Q(small(rng))})};
    req.e = {Q(e(rng)), Q(e(rng))};
    if (req.e[0] == 0 && req.e[1] == 0) req.e[0] = 1;
    DirectionResult r = approximate_direction(req);
    EXPECT_EQ(check_direction(req, r.n0, r.r0p), 0);
    EXPECT_TRUE(numeric_direction_ok(req, r)) << t;
  }
}
