#include <gtest/gtest.h>

#include "surfcomp/dual_graph.hpp"
#include "surfcomp/generators.hpp"

using namespace surfcomp;

namespace {

DualGraph marked(std::vector<long> w, size_t vertex) {
  DualGraph g = chain_graph(w);
  g.add_mark(vertex, g.branch_index("B1"));
  return g;
}

// Gauss-Jordan for x_i = 1 - a_i from M x = -(K.E_k + B.E_k), K.E_k = w_k - 2 + 2 g_k.
std::vector<Rational> oracle_logdisc(const DualGraph& g, const std::vector<Rational>& b) {
  const size_t n = g.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, 0));
  for (size_t k = 0; k < n; ++k) {
    m[k][k] = -g.vertices[k].weight;
    m[k][n] = -(Rational(g.vertices[k].weight - 2 + 2 * g.vertices[k].genus));
  }
  for (const auto& [x, y] : g.edges) {
    m[x][y] += 1;
    m[y][x] += 1;
  }
  for (const auto& mk : g.marks)
    for (const auto& inc : mk.incidences) {
      m[mk.host][n] -= b[inc.branch] * inc.mult;
      if (mk.host2) m[*mk.host2][n] -= b[inc.branch] * inc.mult;
    }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (size_t t = c; t <= n; ++t) m[r][t] -= f * m[c][t];
    }
  }
  std::vector<Rational> a(n);
  for (size_t k = 0; k < n; ++k) a[k] = 1 - m[k][n] / m[k][k];
  return a;
}

std::vector<Rational> rat(const std::vector<FormalReal>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(x.as_rational());
  return out;
}

}  // namespace

TEST(Det, Examples) {
  DetInfo e = det_and_negdef(DualGraph{});
  EXPECT_EQ(e.delta, 1);
  EXPECT_TRUE(e.negdef);
  DetInfo a2 = det_and_negdef(chain_graph({2, 2}));
  EXPECT_EQ(a2.delta, 3);
  EXPECT_TRUE(a2.negdef);
  DualGraph one;
  one.add_vertex(1);
  DetInfo m1 = det_and_negdef(one);
  EXPECT_EQ(m1.delta, 1);
  EXPECT_TRUE(m1.negdef);
}

TEST(Det, NotNegativeDefinite) {
  DualGraph g = chain_graph({1, 1});
  EXPECT_FALSE(det_and_negdef(g).negdef);
  EXPECT_THROW(log_discrepancy_forms(g), NotNegativeDefinite);
}

TEST(LogDiscrepancies, Examples) {
  auto a = log_discrepancies(chain_graph({2, 2}), {});
  EXPECT_EQ(a, (std::vector<FormalReal>{1, 1}));

  const Rational t(2, 7);
  auto b = log_discrepancies(marked({3, 2}, 0), {t});
  EXPECT_EQ(b[0], FormalReal((3 - 2 * t) / 5));
  EXPECT_EQ(b[1], FormalReal((4 - t) / 5));

  for (const auto& x : log_discrepancies(ade_D(4), {})) EXPECT_EQ(x, FormalReal(1));
}

TEST(Pld, Examples) {
  PldResult p = pld(marked({3, 2}, 0), {Q(1, 2)});
  ASSERT_TRUE(p.value);
  EXPECT_EQ(*p.value, FormalReal(Q(2, 5)));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(*pld(ade_A(n), {}).value, FormalReal(1));
  DualGraph ell;
  ell.add_vertex(2, 1);
  EXPECT_EQ(*pld(ell, {}).value, FormalReal(0));
}

TEST(Pld, NotLcReported) {
  PldResult p = pld(marked({2}, 0), {Q(1)});
  EXPECT_TRUE(p.lc);
  DualGraph g = chain_graph({2});
  g.add_mark(0, g.branch_index("B1"), 5);
  EXPECT_FALSE(pld(g, {Q(1)}).lc);
}

TEST(ChainMQ, Examples) {
  EXPECT_EQ(chain_to_mq({2, 2}), (ChainMQ{3, 2}));
  EXPECT_EQ(chain_to_mq({}), (ChainMQ{1, 0}));
  EXPECT_EQ(chain_to_mq({2, 3}), (ChainMQ{5, 2}));
  EXPECT_EQ(mq_to_chain({5, 2}), (std::vector<long>{2, 3}));
  EXPECT_THROW(chain_to_mq({2, 1}), WeightBelowTwo);
  EXPECT_THROW(mq_to_chain({4, 2}), ValidationError);
}

TEST(Alpha, Examples) {
  const Rational t(1, 3);
  EXPECT_EQ(alpha_invariant(marked({3, 2}, 0), {t}), FormalReal(1 - t));
  EXPECT_EQ(alpha_invariant(chain_graph({4, 2, 5}), {}), FormalReal(1));
  EXPECT_EQ(alpha_invariant(marked({2, 2}, 1), {t}), FormalReal(1 - 2 * t));
}

TEST(ClosedForm, ThreeThenTwosFamily) {
  // (3, 2, ..., 2) with m twos splits as [3], A = m, and an empty right end.
  for (long m = 1; m <= 12; ++m) {
    const Rational t(1, 3);
    FormalReal got = pld_closed_form(3, 1, FormalReal(1 - t), 1, 0, FormalReal(1), m);
    EXPECT_EQ(got, FormalReal(((1 - t) * (m + 1) + 1) / Rational(2 * m + 3))) << m;
  }
}

TEST(ClosedForm, SymmetricEnds) {
  auto [x, y] = pld_closed_form_branches(5, 2, FormalReal(Q(1, 2)), 5, 2, FormalReal(Q(1, 2)), 3);
  EXPECT_EQ(x, y);
  EXPECT_EQ(pld_closed_form(5, 2, FormalReal(Q(1, 2)), 5, 2, FormalReal(Q(1, 2)), 3), x);
}

TEST(ClosedForm, MatchesSolverOnSmallFamily) {
  DualGraph left = marked({2, 2}, 1);
  DualGraph right = chain_graph({2});
  Boundary b{FormalReal(Q(1, 4))};
  ASSERT_EQ(chain_to_mq(left.weights()), (ChainMQ{3, 2}));
  FormalReal a1 = alpha_invariant(left, b);
  EXPECT_EQ(a1, FormalReal(Q(1, 2)));
  DualGraph g = compose_family(left, 1, right);
  EXPECT_EQ(*pld(g, b).value, pld_closed_form(3, 2, a1, 2, 1, FormalReal(1), 1));
}

TEST(ClosedForm, DegenerateRejected) {
  EXPECT_THROW(pld_closed_form(2, 2, FormalReal(1), 1, 0, FormalReal(1), 1), DegenerateMQ);
}

TEST(Compose, Examples) {
  DualGraph g = compose_family(marked({3}, 0), 2, DualGraph{});
  EXPECT_EQ(g.weights(), (std::vector<long>{3, 2, 2}));
  ASSERT_EQ(g.marks.size(), 1u);
  EXPECT_EQ(g.marks[0].host, 0u);
  EXPECT_TRUE(compose_family({}, 0, {}).empty());
  DualGraph h = compose_family(chain_graph({2, 3}), 5, chain_graph({4}));
  EXPECT_EQ(h.weights(), (std::vector<long>{2, 3, 2, 2, 2, 2, 2, 4}));
  EXPECT_EQ(delta(h), chain_to_mq(h.weights()).m);
}

TEST(MldLogSmooth, Examples) {
  for (const Rational b : {Q(0), Q(1, 3), Q(1)}) {
    MldResult m = mld_log_smooth(marked({2}, 0), {b});
    EXPECT_EQ(m.value, FormalReal(1 - b / 2)) << b;
  }
  EXPECT_EQ(mld_log_smooth(chain_graph({2, 2}), {}).value, FormalReal(1));
  MldResult m = mld_log_smooth(marked({3, 2}, 0), {Q(1, 2)});
  EXPECT_EQ(m.value, FormalReal(Q(2, 5)));
  EXPECT_EQ(m.witness.kind, Stratum::Kind::Divisor);
  EXPECT_EQ(m.witness.k, 0u);
}

TEST(MldLogSmooth, NeedsSnc) {
  DualGraph g = chain_graph({2});
  g.add_mark(0, g.branch_index("B1"), 2);
  EXPECT_THROW(mld_log_smooth(g, {Q(1, 2)}), NotSNC);
}

TEST(CartierIndex, Examples) {
  EXPECT_EQ(cartier_index(ade_E(8), {}).index, 1);
  DualGraph ell;
  ell.add_vertex(2, 1);
  EXPECT_EQ(cartier_index(ell, {}).index, 1);
  EXPECT_EQ(cartier_index(chain_graph({3}), {}).index, 3);
  EXPECT_THROW(cartier_index(marked({2}, 0), {FormalReal(make_basis({{"r1", "sqrt(2)"}}), {Q(0), Q(1, 2)})}),
               IrrationalCoefficient);
}

TEST(DualGraphProperty, SolverMatchesIndependentElimination) {
  gen::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    DualGraph g = gen::negdef_tree(rng, 9, 1, 6, true, true);
    std::vector<Rational> b;
    for (size_t i = 0; i < g.branches.size(); ++i) b.push_back(Q(gen::uniform(rng, 0, 6), 6));
    Boundary fb(b.begin(), b.end());
    EXPECT_EQ(rat(log_discrepancies(g, fb)), oracle_logdisc(g, b));
  }
}

// Raising a boundary coefficient never raises a log discrepancy.
TEST(DualGraphProperty, FormsAreNonIncreasingInBoundary) {
  gen::Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    DualGraph g = gen::negdef_tree(rng, 9, 2, 6, false, true);
    for (const auto& f : log_discrepancy_forms(g))
      for (const auto& c : f.lin) EXPECT_LE(c, 0);
  }
}

TEST(DualGraphProperty, ChainRoundTripAndDelta) {
  gen::Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    std::vector<long> w(static_cast<size_t>(gen::uniform(rng, 1, 8)));
    for (auto& x : w) x = gen::uniform(rng, 2, 7);
    ChainMQ mq = chain_to_mq(w);
    EXPECT_EQ(mq_to_chain(mq), w);
    EXPECT_EQ(delta(chain_graph(w)), mq.m);
    EXPECT_EQ(gcd_z(mq.m, mq.q), 1);
  }
}

TEST(DualGraphProperty, CofactorMatchesSolve) {
  gen::Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    DualGraph g = gen::negdef_tree(rng, 10, 1, 6, true, true);
    EXPECT_EQ(cofactor_forms(g), log_discrepancy_forms(g));
  }
}
