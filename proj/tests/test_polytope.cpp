#include <gtest/gtest.h>

#include <random>

#include "surfcomp/polytope.hpp"

using namespace surfcomp;

namespace {

DualGraph marked(std::vector<long> w) {
  DualGraph g = chain_graph(w);
  g.add_mark(0, g.branch_index("B1"));
  return g;
}

FormalReal half_root2() { return FormalReal(make_basis({{"r1", "sqrt(2)"}}), {Q(0), Q(1, 2)}); }

}  // namespace

TEST(BoxCertify, A1WithBranch) {
  const FormalReal v = half_root2();
  Germ germ = Germ::of(marked({2}));
  LinearityCertificate c = mld_box_certify(germ, {v}, Q(1, 20), FormalReal(1) - v / Q(2));
  EXPECT_EQ(c.witness.kind, Stratum::Kind::Divisor);
  EXPECT_EQ(c.witness.k, 0u);
  ASSERT_EQ(c.box.size(), 1u);
  EXPECT_EQ(c.box[0], std::make_pair(Q(7, 10), Q(3, 4)));
  EXPECT_EQ(c.eps, (std::vector<Rational>{Q(13, 20), Q(5, 8)}));
  FormalReal back = c.weights[0] * c.vertices[0][0] + c.weights[1] * c.vertices[1][0];
  EXPECT_EQ(back, v);
  EXPECT_EQ(verify_certificate(germ, c, FormalReal(1) - v / Q(2)), "");
}

TEST(BoxCertify, RationalPointIsDegenerate) {
  Germ germ = Germ::of(marked({2}));
  LinearityCertificate c = mld_box_certify(germ, {FormalReal(Q(1, 3))}, Q(1, 8), FormalReal(Q(1, 2)));
  ASSERT_EQ(c.vertices.size(), 1u);
  EXPECT_EQ(c.vertices[0], (std::vector<Rational>{Q(1, 3)}));
  EXPECT_EQ(c.weights[0], FormalReal(1));
}

TEST(BoxCertify, ChainWitnessForm) {
  const FormalReal v = half_root2();
  Germ germ = Germ::of(marked({3, 2, 2, 2}));
  LinearityCertificate c = find_delta(germ, {v}, FormalReal(Q(1, 10)), Q(1, 4), 20).cert;
  EXPECT_EQ(c.witness.k, 0u);
  for (const auto& vx : c.vertices) EXPECT_EQ(c.witness.form.eval(vx), Rational(((1 - vx[0]) * 4 + 1) / 9));
}

TEST(BoxCertify, BelowEpsRejected) {
  Germ germ = Germ::of(marked({2}));
  EXPECT_THROW(mld_box_certify(germ, {half_root2()}, Q(1, 20), FormalReal(Q(9, 10))), NotEpsLC);
}

TEST(FindDelta, SmoothBranchSucceedsImmediately) {
  Cluster c;
  c.add_point();
  c.add_branch("C", {0});
  Germ germ = Germ::of(c);
  for (const char* w : {"sqrt(2)", "sqrt(3)", "sqrt(5)"}) {
    FormalReal v(make_basis({{"r1", w}}), {Q(-1), Q(1, 2)});
    if (v < FormalReal(0)) v = v + FormalReal(1);
    DeltaSearch d = find_delta(germ, {v}, FormalReal(Q(1, 10)), Q(1, 4), 10);
    EXPECT_EQ(d.halvings, 0) << w;
    EXPECT_EQ(d.delta, Q(1, 4));
  }
}

TEST(FindDelta, TangentPairNearTwoThirds) {
  Cluster c;
  c.add_point();
  c.add_point(0);
  c.add_branch("C1", {0, 1});
  c.add_branch("C2", {0, 1});
  Germ germ = Germ::of(c);
  BasisPtr B = make_basis({{"r1", "sqrt(2)"}});
  FormalReal v(B, {Q(2, 3) - Q(1, 1000), Q(1, 1000)});
  DeltaSearch d = find_delta(germ, {v, v}, FormalReal(Q(1, 10)), Q(1, 4), 10);
  EXPECT_LE(d.halvings, 3);
  EXPECT_EQ(verify_certificate(germ, d.cert, FormalReal(Q(1, 10))), "");
}

TEST(Decompose, RationalPointSinglePart) {
  DualGraph g = marked({3, 2});
  const FormalReal t(Q(1, 2));
  GermDecomposition d = decompose_germ(g, {t}, FormalReal(Q(1, 4)), *pld(g, {t}).value);
  ASSERT_EQ(d.parts.size(), 1u);
  EXPECT_EQ(d.parts[0].a, FormalReal(1));
  EXPECT_EQ(d.index, cartier_index(g, {t}).index);
}

TEST(Decompose, ChainAtHalfRootTwo) {
  DualGraph g = marked({3, 2});
  const FormalReal t = half_root2();
  const FormalReal p = *pld(g, {t}).value;
  GermDecomposition d = decompose_germ(g, {t}, FormalReal(Q(1, 4)), p);
  ASSERT_EQ(d.parts.size(), 2u);
  Integer idx = 1;
  for (const auto& part : d.parts) {
    EXPECT_EQ(part.pld, Rational((3 - 2 * part.coeffs[0]) / 5));
    idx = lcm_z(idx, cartier_index(g, {FormalReal(part.coeffs[0])}).index);
  }
  EXPECT_EQ(d.index, idx);
  EXPECT_EQ(check_germ_decomposition(g, {t}, FormalReal(Q(1, 4)), p, d), 0);
}

TEST(Decompose, A1AtRootThreeMinusOne) {
  DualGraph g = marked({2});
  const FormalReal t(make_basis({{"r1", "sqrt(3)"}}), {Q(-1), Q(1)});
  const FormalReal p = *pld(g, {t}).value;
  GermDecomposition d = decompose_germ(g, {t}, FormalReal(Q(1, 10)), p);
  ASSERT_EQ(d.parts.size(), 2u);
  FormalReal s(0);
  for (const auto& part : d.parts) s += part.a * part.pld;
  EXPECT_EQ(s, p);
}

// Random probes inside certified boxes: the witness form is the minimum.
TEST(PolytopeProperty, WitnessMinimalInsideBox) {
  std::mt19937_64 rng(61);
  const FormalReal v = half_root2();
  for (const std::vector<long>& w : std::vector<std::vector<long>>{{2}, {3, 2}, {3, 2, 2}, {4, 2}, {2, 2, 2}}) {
    Germ germ = Germ::of(marked(w));
    LinearityCertificate c = find_delta(germ, {v}, FormalReal(Q(1, 20)), Q(1, 4), 20).cert;
    const auto [lo, hi] = c.box[0];
    for (int k = 0; k < 30; ++k) {
      Rational x = lo + (hi - lo) * Q(static_cast<long>(rng() % 1001), 1000);
      Rational best = c.witness.form.eval(std::vector<Rational>{x});
      for (const auto& s : germ.strata()) EXPECT_LE(best, s.form.eval(std::vector<Rational>{x}));
    }
  }
}
