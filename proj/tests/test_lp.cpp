#include <gtest/gtest.h>

#include <random>

#include "surfcomp/lp.hpp"

using namespace surfcomp;

TEST(Lp, SmallOptimum) {
  // max x + y, x + 2y <= 4, 3x + y <= 6
  LpProblem p;
  p.n = 2;
  p.objective = {Q(1), Q(1)};
  p.le = {{Q(1), Q(2)}, {Q(3), Q(1)}};
  p.le_rhs = {Q(4), Q(6)};
  LpResult r = lp_maximize(p);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Q(14, 5));
  EXPECT_EQ(r.x[0], Q(8, 5));
  EXPECT_EQ(r.x[1], Q(6, 5));
}

TEST(Lp, Infeasible) {
  LpProblem p;
  p.n = 1;
  p.objective = {Q(1)};
  p.eq = {{Q(1)}};
  p.eq_rhs = {Q(-1)};
  EXPECT_EQ(lp_maximize(p).status, LpStatus::Infeasible);
}

TEST(Lp, Unbounded) {
  LpProblem p;
  p.n = 2;
  p.objective = {Q(1), Q(0)};
  p.le = {{Q(-1), Q(1)}};
  p.le_rhs = {Q(1)};
  EXPECT_EQ(lp_maximize(p).status, LpStatus::Unbounded);
}

TEST(Lp, FreeVariable) {
  // max -x with x free and x >= -3 written as -x <= 3
  LpProblem p;
  p.n = 1;
  p.objective = {Q(-1)};
  p.le = {{Q(-1)}};
  p.le_rhs = {Q(3)};
  p.free_var = {true};
  LpResult r = lp_maximize(p);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.x[0], Q(-3));
}

TEST(SolveLinear, SingularAndRegular) {
  EXPECT_FALSE(solve_linear({{Q(1), Q(2)}, {Q(2), Q(4)}}, {Q(1), Q(2)}));
  auto x = solve_linear({{Q(2), Q(1)}, {Q(1), Q(3)}}, {Q(3), Q(5)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Q(4, 5));
  EXPECT_EQ((*x)[1], Q(7, 5));
}

// The optimum is at least the objective at every feasible lattice point of a
// small box, and it is attained by a feasible x.
TEST(LpProperty, OptimumDominatesGridPoints) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-4, 4), rhs(1, 8);
  for (int t = 0; t < 60; ++t) {
    LpProblem p;
    p.n = 2;
    p.objective = {Q(c(rng)), Q(c(rng))};
    for (int k = 0; k < 3; ++k) {
      p.le.push_back({Q(c(rng)), Q(c(rng))});
      p.le_rhs.push_back(Q(rhs(rng)));
    }
    p.le.push_back({Q(1), Q(0)});
    p.le_rhs.push_back(Q(5));
    p.le.push_back({Q(0), Q(1)});
    p.le_rhs.push_back(Q(5));
    LpResult r = lp_maximize(p);
    ASSERT_EQ(r.status, LpStatus::Optimal);
    for (size_t k = 0; k < p.le.size(); ++k) EXPECT_LE(p.le[k][0] * r.x[0] + p.le[k][1] * r.x[1], p.le_rhs[k]);
    for (long x = 0; x <= 5; ++x)
      for (long y = 0; y <= 5; ++y) {
        bool ok = true;
        for (size_t k = 0; k < p.le.size(); ++k) ok = ok && p.le[k][0] * x + p.le[k][1] * y <= p.le_rhs[k];
        if (ok) EXPECT_GE(r.value, p.objective[0] * x + p.objective[1] * y);
      }
  }
}
