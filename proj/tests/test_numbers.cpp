#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "surfcomp/numbers.hpp"

using namespace surfcomp;

namespace {

BasisPtr sqrt2() { return make_basis({{"r1", "sqrt(2)"}}); }

}  // namespace

TEST(Compare, EqualRationals) { EXPECT_EQ(compare(FormalReal(Q(1, 2)), FormalReal(Q(1, 2))), Cmp::EQ); }

TEST(Compare, SqrtTwoAboveOne) {
  FormalReal r1(sqrt2(), {Q(0), Q(1)});
  EXPECT_EQ(compare(r1, FormalReal(1)), Cmp::GT);
}

TEST(Compare, ThreeHalvesAboveSqrtTwo) {
  FormalReal r1(sqrt2(), {Q(0), Q(1)});
  EXPECT_EQ(compare(FormalReal(Q(3, 2)), r1), Cmp::GT);
}

TEST(Compare, DecimalWitness) {
  auto B = make_basis({{"r1", "1.414213562373095048801688724209698"}});
  FormalReal r1(B, {Q(0), Q(1)});
  EXPECT_TRUE(r1 > FormalReal(Q(14142, 10000)));
  EXPECT_TRUE(r1 < FormalReal(Q(14143, 10000)));
}

TEST(Compare, ShortDecimalWitnessRejected) { EXPECT_THROW(make_basis({{"r1", "1.41421356"}}), ValidationError); }

TEST(Compare, RationalSqrtWitnessRejected) { EXPECT_THROW(make_basis({{"r1", "sqrt(4)"}}), ValidationError); }

TEST(Lcm, Examples) {
  EXPECT_EQ(lcm_denominators({Q(1, 2), Q(2, 3)}), 6);
  EXPECT_EQ(lcm_denominators({Q(1)}), 1);
  EXPECT_EQ(lcm_denominators({Q(5, 12), Q(3, 8)}), 24);
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("3"), Q(3));
  EXPECT_EQ(parse_rational("-2/6"), Q(-1, 3));
  EXPECT_EQ(parse_rational("0.75"), Q(3, 4));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(ParseFormal, LinearLiteral) {
  auto B = sqrt2();
  FormalReal x = parse_formal("1/2 - r1/4", B);
  EXPECT_EQ(x.coord(0), Q(1, 2));
  EXPECT_EQ(x.coord(1), Q(-1, 4));
  EXPECT_EQ(parse_formal("(1 + r1) * 2", B), FormalReal(B, {Q(2), Q(2)}));
  EXPECT_THROW(parse_formal("r2", B), ParseError);
}

TEST(FormalReal, FloorAndFrac) {
  auto B = sqrt2();
  FormalReal x(B, {Q(0), Q(3)});  // 4.24...
  EXPECT_EQ(floor_of(x), 4);
  EXPECT_EQ(frac_of(x), x - FormalReal(4));
  EXPECT_EQ(floor_of(FormalReal(Q(-1, 2))), -1);
}

TEST(FormalReal, MixedBasesRejected) {
  FormalReal a(sqrt2(), {Q(0), Q(1)});
  FormalReal b(make_basis({{"r1", "sqrt(3)"}}), {Q(0), Q(1)});
  EXPECT_THROW(a + b, BasisMismatch);
}

TEST(FormalReal, AsRationalOfIrrationalThrows) {
  FormalReal a(sqrt2(), {Q(0), Q(1)});
  EXPECT_THROW(a.as_rational(), IrrationalCoefficient);
}

TEST(Interval, EnclosesSqrtTwo) {
  FormalReal a(sqrt2(), {Q(0), Q(1)});
  Interval iv = a.enclose(200);
  EXPECT_LE(mpfr_get_d(iv.lo(), MPFR_RNDD), std::sqrt(2.0) + 1e-15);
  EXPECT_GE(mpfr_get_d(iv.hi(), MPFR_RNDU), std::sqrt(2.0) - 1e-15);
  EXPECT_LT(iv.width(), 1e-50);
}

// Exact comparison agrees with long double whenever the values are well apart.
TEST(NumbersProperty, CompareAgreesWithApproximation) {
  auto B = make_basis({{"r1", "sqrt(2)"}, {"r2", "sqrt(3)"}});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int t = 0; t < 500; ++t) {
    FormalReal x(B, {Q(num(rng), den(rng)), Q(num(rng), den(rng)), Q(num(rng), den(rng))});
    FormalReal y(B, {Q(num(rng), den(rng)), Q(num(rng), den(rng)), Q(num(rng), den(rng))});
    const double dx = x.approx(), dy = y.approx();
    if (std::fabs(dx - dy) < 1e-9) continue;
    EXPECT_EQ(compare(x, y), dx < dy ? Cmp::LT : Cmp::GT);
    EXPECT_EQ(x - y + y, x);
    EXPECT_EQ(floor_of(x), Integer(static_cast<long>(std::floor(dx))));
  }
}
