#include <gtest/gtest.h>

#include <random>
#include <set>

#include "surfcomp/coeff_sets.hpp"

using namespace surfcomp;

namespace {

// Exhaustive multiset sums of at most t terms, capped at 1.
std::set<Rational> subset_sums(const std::vector<Rational>& g, int t) {
  std::set<Rational> out{Q(0)}, frontier{Q(0)};
  for (int k = 0; k < t; ++k) {
    std::set<Rational> next;
    for (const auto& s : frontier)
      for (const auto& x : g)
        if (s + x <= 1) next.insert(s + x);
    out.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::set<Rational> d_enum(const std::vector<Rational>& g, int max_m, int t) {
  std::set<Rational> out;
  for (const auto& f : subset_sums(g, t))
    for (int m = 1; m <= max_m; ++m) {
      Rational a = (m - 1 + f) / m;
      if (a <= 1) out.insert(a);
    }
  return out;
}

std::set<Rational> as_set(const CoeffSet& c) {
  auto r = c.rationals();
  return {r.begin(), r.end()};
}

}  // namespace

TEST(GammaPlus, Examples) {
  EXPECT_EQ(as_set(gamma_plus(CoeffSet::of({Q(1, 2)}), 4)), (std::set<Rational>{Q(0), Q(1, 2), Q(1)}));
  EXPECT_EQ(as_set(gamma_plus(CoeffSet::of({Q(1, 3), Q(1, 2)}), 3)),
            (std::set<Rational>{Q(0), Q(1, 3), Q(1, 2), Q(2, 3), Q(5, 6), Q(1)}));
  EXPECT_EQ(as_set(gamma_plus(CoeffSet{}, 5)), (std::set<Rational>{Q(0)}));
}

TEST(DOf, Examples) {
  EXPECT_EQ(as_set(d_of(CoeffSet::of({Q(0)}), 5, 4).set),
            (std::set<Rational>{Q(0), Q(1, 2), Q(2, 3), Q(3, 4), Q(4, 5)}));
  EXPECT_EQ(as_set(d_of(CoeffSet::of({Q(1, 2)}), 2, 4).set),
            (std::set<Rational>{Q(0), Q(1, 2), Q(3, 4), Q(1)}));
  std::set<Rational> expect{Q(1)};
  for (int m = 1; m <= 6; ++m) expect.insert(Q(m - 1, m));
  EXPECT_EQ(as_set(d_of(CoeffSet::of({Q(1)}), 6, 4).set), expect);
}

TEST(DOf, ProvenanceReproducesValues) {
  DSet d = d_of(CoeffSet::of({Q(1, 3), Q(2, 5)}), 8, 4);
  ASSERT_EQ(d.provenance.size(), d.set.size());
  for (const auto& e : d.provenance) EXPECT_EQ(e.value, (FormalReal(e.m - 1) + e.f) / Rational(e.m));
}

TEST(DDIdentity, Examples) {
  EXPECT_TRUE(check_dd_identity({Q(1, 2)}, 20).holds);
  EXPECT_TRUE(check_dd_identity({Q(0)}, 30).holds);
  EXPECT_TRUE(check_dd_identity({Q(2, 5), Q(3, 7)}, 40).holds);
}

TEST(Projection, Examples) {
  Projection g = projection_g(CoeffSet::of({Q(1, 2), Q(2, 3), Q(3, 4)}), CoeffSet::of({Q(1, 2), Q(1)}), Q(1, 4));
  EXPECT_EQ(g.apply(FormalReal(Q(1, 2))), FormalReal(Q(1, 2)));
  EXPECT_EQ(g.apply(FormalReal(Q(2, 3))), FormalReal(Q(3, 4)));
  EXPECT_EQ(g.apply(FormalReal(Q(3, 4))), FormalReal(Q(3, 4)));

  CoeffSet G = CoeffSet::of({Q(1, 5), Q(1, 3), Q(3, 5)});
  Projection id = projection_g(G, CoeffSet::of({Q(1, 5), Q(1, 3), Q(1, 2), Q(3, 5)}), Q(1, 10));
  for (const auto& x : G.values()) EXPECT_EQ(id.apply(x), x);

  EXPECT_EQ(projection_g(CoeffSet::of({Q(2, 7)}), CoeffSet::of({Q(1)}), Q(1, 3)).apply(FormalReal(Q(2, 7))),
            FormalReal(Q(2, 7)));
  EXPECT_THROW(projection_g(CoeffSet{}, CoeffSet::of({Q(1)}), Q(1, 3)), EmptyGamma);
}

TEST(CoeffSetsProperty, MatchEnumeration) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> den(2, 9);
  for (int t = 0; t < 60; ++t) {
    std::vector<Rational> g;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      long d = den(rng);
      g.push_back(Q(1 + static_cast<long>(rng() % static_cast<unsigned long>(d)), d));
    }
    const int terms = 1 + static_cast<int>(rng() % 4);
    EXPECT_EQ(as_set(gamma_plus(CoeffSet::of(g), terms)), subset_sums(g, terms));
    EXPECT_EQ(as_set(d_of(CoeffSet::of(g), 7, terms).set), d_enum(g, 7, terms));
  }
}

TEST(CoeffSetsProperty, GammaPlusMonotoneAndStable) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 40; ++t) {
    std::vector<Rational> g{Q(1 + static_cast<long>(rng() % 3), 4 + static_cast<long>(rng() % 4))};
    std::set<Rational> prev;
    for (int m = 1; m <= 8; ++m) {
      auto cur = as_set(gamma_plus(CoeffSet::of(g), m));
      for (const auto& x : prev) EXPECT_TRUE(cur.count(x));
      prev = cur;
    }
    // ceil(1 / min g) terms already give everything
    const int stable = static_cast<int>(ceil_q(Rational(1 / g[0])).get_si());
    EXPECT_EQ(as_set(gamma_plus(CoeffSet::of(g), stable)), as_set(gamma_plus(CoeffSet::of(g), stable + 3)));
  }
}

TEST(CoeffSetsProperty, ProjectionLaws) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> g, g2;
    for (int i = 0; i < 5; ++i) g.push_back(Q(static_cast<long>(rng() % 12), 12));
    for (int i = 0; i < 3; ++i) g2.push_back(Q(static_cast<long>(rng() % 10), 10));
    g2.push_back(Q(1));
    const Rational alpha(1 + static_cast<long>(rng() % 4), 8);
    CoeffSet G = CoeffSet::of(g), G2 = CoeffSet::of(g2);
    Projection p = projection_g(G, G2, alpha);
    for (const auto& x : G.values()) {
      FormalReal y = p.apply(x);
      EXPECT_GE(y, x);
      EXPECT_LE(y, x + FormalReal(alpha));
      EXPECT_EQ(p.apply(y), y);
      for (const auto& z : G.values())
        if (x <= z) EXPECT_LE(y, p.apply(z));
      for (const auto& b : G2.values())
        if (b >= x) EXPECT_GE(b, y);
    }
  }
}
