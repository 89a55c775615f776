#include <gtest/gtest.h>

#include <random>

#include "surfcomp/complements.hpp"
#include "surfcomp/oracles.hpp"
#include "surfcomp/polytope.hpp"

using namespace surfcomp;

namespace {

ComplementCandidate cand(long n, std::vector<Rational> plus) {
  ComplementCandidate c;
  c.n = n;
  for (const auto& x : plus) c.plus.push_back(FormalReal(x));
  return c;
}

std::vector<FormalReal> fr(std::vector<Rational> xs) { return {xs.begin(), xs.end()}; }

Dim1Germ global(std::vector<Rational> xs) { return Dim1Germ{fr(std::move(xs)), false}; }

}  // namespace

TEST(NComplementCoeffs, Examples) {
  EXPECT_TRUE(check_n_complement_coeffs(fr({Q(7, 10)}), cand(3, {Q(2, 3)})).ok);
  for (long n = 1; n <= 6; ++n) EXPECT_TRUE(check_n_complement_coeffs(fr({Q(1)}), cand(n, {Q(1)})).ok);
  EXPECT_TRUE(check_n_complement_coeffs(fr({Q(5, 6)}), cand(6, {Q(5, 6)})).ok);
  CoeffReport bad = check_n_complement_coeffs(fr({Q(5, 6)}), cand(6, {Q(4, 6)}));
  EXPECT_FALSE(bad.ok);
  ASSERT_EQ(bad.rows.size(), 1u);
  EXPECT_FALSE(bad.rows[0].bound_ok);
  EXPECT_EQ(bad.rows[0].required, 5);
}

TEST(NComplementCoeffs, ExtraComponentsMustBeIntegral) {
  CoeffReport r = check_n_complement_coeffs(fr({Q(1, 2)}), cand(2, {Q(1, 2), Q(1, 3)}));
  EXPECT_FALSE(r.ok);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_FALSE(r.rows[1].shared);
  EXPECT_FALSE(r.rows[1].integral);
}

TEST(RoundingBound, Values) {
  EXPECT_EQ(rounding_bound(FormalReal(Q(7, 10)), 3), Q(2, 3));
  EXPECT_EQ(rounding_bound(FormalReal(Q(5, 6)), 6), Q(5, 6));
  EXPECT_EQ(rounding_bound(FormalReal(1), 4), Q(1));
}

TEST(Dim1, Examples) {
  Dim1Result a = dim1_complement_search(global({Q(1, 2), Q(1, 2)}), FormalReal(0), 1, 12);
  EXPECT_EQ(a.n, 1);
  EXPECT_EQ(a.plus, (std::vector<Rational>{Q(1), Q(1)}));

  Dim1Result b = dim1_complement_search(global({Q(2, 3)}), FormalReal(Q(1, 3)), 1, 12);
  EXPECT_EQ(b.n, 3);
  EXPECT_EQ(b.plus, (std::vector<Rational>{Q(2, 3)}));

  for (const Rational e : {Q(0), Q(1, 10)})
    EXPECT_THROW(dim1_complement_search(global({Q(5, 6), Q(5, 6), Q(5, 6)}), FormalReal(e), 1, 12),
                 NotRComplementary);
}

TEST(Dim1, InfeasibleBelowCap) {
  EXPECT_THROW(dim1_complement_search(global({Q(2, 3)}), FormalReal(Q(1, 3)), 1, 2), Infeasible);
}

TEST(Dim1, LocalGerm) {
  Dim1Germ g{fr({Q(3, 5)}), true};
  Dim1Result r = dim1_complement_search(g, FormalReal(Q(1, 4)), 1, 20);
  auto o = oracle::dim1_scan({Q(3, 5)}, true, Q(1, 4), 1, 20);
  ASSERT_TRUE(o);
  EXPECT_EQ(r.n, *o);
}

TEST(Elliptic, XmPresetMinimalIsM) {
  for (long m = 2; m <= 12; ++m) {
    EllipticResult r = elliptic_base_minimal_n(EllipticBase::xm(m), Q(1, 2), 40);
    EXPECT_EQ(r.n, m) << m;
    for (long n = 1; n < m; ++n) EXPECT_FALSE(elliptic_base_at(EllipticBase::xm(m), Q(1, 2), n)) << m << " " << n;
  }
}

TEST(Elliptic, NoMultipleFibers) {
  EllipticBase eb;
  eb.fibers = {SpecialFiber{1, Q(0)}};
  EXPECT_EQ(elliptic_base_minimal_n(eb, Q(0), 10).n, 1);
  // a coefficient-1 point is not allowed once eps > 0
  EXPECT_EQ(elliptic_base_minimal_n(eb, Q(1, 2), 10).n, 2);
}

// Two multiple fibers on a rational base with deg L = 1: the rounded
// coefficients 1/2 and 2/3 already exceed the degree budget of 1, so no n
// works in this model.
TEST(Elliptic, TwoMultipleFibers) {
  EllipticBase eb;
  eb.fibers = {SpecialFiber{2, Q(0)}, SpecialFiber{3, Q(0)}};
  EXPECT_THROW(elliptic_base_minimal_n(eb, Q(1, 2), 5), Infeasible);
  EXPECT_THROW(elliptic_base_minimal_n(eb, Q(1, 2), 6), Infeasible);
}

TEST(P2Lines, Examples) {
  const Rational b(2, 7);
  EXPECT_EQ(p2_lines_mld(fr({b}), {}).value, FormalReal(1 - b));
  EXPECT_EQ(p2_lines_mld(fr({Q(1, 2), Q(1, 2), Q(1, 2)}), {}).value, FormalReal(Q(1, 2)));
  EXPECT_EQ(p2_lines_mld(fr({Q(2, 3), Q(2, 3), Q(2, 3)}), {{0, 1, 2}}).value, FormalReal(0));
}

TEST(P2Lines, Unrealizable) {
  // two points sharing two lines
  EXPECT_THROW(p2_lines_mld(fr({Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2)}), {{0, 1, 2}, {0, 1, 3}}),
               UnrealizablePattern);
  EXPECT_THROW(p2_lines_mld(fr({Q(1, 2), Q(1, 2)}), {{0}}), UnrealizablePattern);
}

TEST(VerifyDecomposition, Trivial) {
  std::vector<FormalReal> B = fr({Q(1, 3), Q(1, 2)});
  DecompReport r = verify_decomposition(B, {DecompPart{FormalReal(1), {Q(1, 3), Q(1, 2)}, Q(1, 5)}}, FormalReal(Q(1, 5)));
  EXPECT_TRUE(r.all());
}

TEST(VerifyDecomposition, RationalEpsNeedsEqualParts) {
  std::vector<FormalReal> B = fr({Q(1, 3)});
  std::vector<DecompPart> parts{{FormalReal(Q(1, 2)), {Q(1, 3)}, Q(0)}, {FormalReal(Q(1, 2)), {Q(1, 3)}, Q(1)}};
  DecompReport r = verify_decomposition(B, parts, FormalReal(Q(1, 2)));
  EXPECT_TRUE(r.ok[0]);
  EXPECT_TRUE(r.ok[1]);
  EXPECT_TRUE(r.ok[2]);
  EXPECT_FALSE(r.ok[4]);
}

TEST(VerifyDecomposition, IrrationalGermSplit) {
  BasisPtr R = make_basis({{"r1", "sqrt(2)"}});
  const FormalReal t(R, {Q(0), Q(1, 2)});
  DualGraph g = chain_graph({3, 2});
  g.add_mark(0, g.branch_index("B1"));
  const FormalReal eps(Q(1, 4));
  const FormalReal eps_pld = (FormalReal(3) - t * Q(2)) / Q(5);
  GermDecomposition d = decompose_germ(g, {t}, eps, eps_pld);
  ASSERT_GE(d.parts.size(), 2u);
  std::vector<DecompPart> parts;
  for (const auto& p : d.parts) parts.push_back({p.a, p.coeffs, p.eps});
  GermContext ctx;
  ctx.graph = g;
  DecompReport r = verify_decomposition({t}, parts, eps, &ctx);
  for (int k = 0; k < 5; ++k) EXPECT_TRUE(r.ok[static_cast<size_t>(k)]) << k << ": " << r.detail[static_cast<size_t>(k)];
}

TEST(ComplementsProperty, Dim1MatchesScanOracle) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 200; ++t) {
    const bool local = rng() % 4 == 0;
    const size_t k = local ? 1 : 1 + rng() % 4;
    std::vector<Rational> b;
    for (size_t i = 0; i < k; ++i) b.push_back(Q(static_cast<long>(rng() % 7), 6));
    const Rational eps = Q(static_cast<long>(rng() % 3), 4);
    const long p = 1 + static_cast<long>(rng() % 3);
    auto o = oracle::dim1_scan(b, local, eps, p, 24);
    Dim1Germ g{fr(b), local};
    try {
      Dim1Result r = dim1_complement_search(g, FormalReal(eps), p, 24);
      ASSERT_TRUE(o) << t;
      EXPECT_EQ(r.n, *o);
      EXPECT_EQ(r.n % p, 0);
      ComplementCandidate c;
      c.n = r.n;
      for (const auto& x : r.plus) c.plus.push_back(FormalReal(x));
      EXPECT_TRUE(check_n_complement_coeffs(fr(b), c).ok);
    } catch (const NotRComplementary&) {
      EXPECT_FALSE(o);
    } catch (const Infeasible&) {
      EXPECT_FALSE(o);
    }
  }
}
