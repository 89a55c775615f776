#include <gtest/gtest.h>

#include "surfcomp/generators.hpp"
#include "surfcomp/oracles.hpp"
#include "surfcomp/smooth_germ.hpp"

using namespace surfcomp;

namespace {

Cluster lines(int r) {
  Cluster c;
  c.add_point();
  for (int i = 0; i < r; ++i) c.add_branch("L" + std::to_string(i + 1), {0});
  return c;
}

Cluster tangent_pair() {
  Cluster c;
  c.add_point();
  c.add_point(0);
  c.add_branch("C1", {0, 1});
  c.add_branch("C2", {0, 1});
  return c;
}

Boundary same(size_t n, const Rational& b) { return Boundary(n, FormalReal(b)); }

}  // namespace

TEST(ClusterLogDiscrepancies, Examples) {
  const Rational b(1, 3);
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(cluster_log_discrepancies(lines(r), same(r, b))[0], FormalReal(2 - r * b));

  Cluster two;
  two.add_point();
  two.add_point(0);
  two.add_branch("C", {0, 1});
  EXPECT_EQ(cluster_log_discrepancies(two, same(1, b))[1], FormalReal(3 - 2 * b));

  auto a = cluster_log_discrepancies(tangent_pair(), same(2, b));
  EXPECT_EQ(a[0], FormalReal(2 - 2 * b));
  EXPECT_EQ(a[1], FormalReal(3 - 4 * b));
}

TEST(ResolveToSnc, Examples) {
  EXPECT_EQ(resolve_to_snc(lines(3)).points.size(), 1u);
  Cluster t = resolve_to_snc(tangent_pair());
  EXPECT_EQ(t.points.size(), 2u);
  EXPECT_EQ(resolve_to_snc(t), t);
}

TEST(MldSmoothGerm, Examples) {
  const Rational b(2, 5);
  GermMld one = mld_smooth_germ(lines(1), same(1, b));
  EXPECT_EQ(one.value, FormalReal(2 - b));
  EXPECT_EQ(one.witness.k, 0u);
  EXPECT_EQ(one.l0, 2);
  EXPECT_EQ(one.l, (std::vector<Integer>{1}));

  EXPECT_EQ(mld_smooth_germ(lines(3), same(3, Q(1, 2))).value, FormalReal(Q(1, 2)));

  GermMld tp = mld_smooth_germ(tangent_pair(), same(2, Q(2, 3)));
  EXPECT_EQ(tp.value, FormalReal(Q(1, 3)));
  EXPECT_EQ(tp.witness.kind, Stratum::Kind::Divisor);
  EXPECT_EQ(tp.witness.k, 1u);
}

TEST(MldSmoothGerm, NotLc) { EXPECT_THROW(mld_smooth_germ(lines(3), same(3, Q(1))), NotLC); }

TEST(ClusterValidate, HostMustPrecedePoint) {
  Cluster c;
  c.add_point();
  c.add_point(2);
  c.add_point(0);
  try {
    c.validate();
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("host must precede point"), std::string::npos);
  }
}

TEST(ClusterValidate, ProximityViolation) {
  // A smooth branch cannot pass through a satellite point.
  Cluster c;
  c.add_point();
  c.add_point(0);
  c.add_point(1, 0);
  c.add_branch("C", {0, 1, 2}, {1, 1, 1});
  EXPECT_THROW(c.validate(), InvalidProximity);
}

TEST(HostPath, FollowsFirstHosts) {
  Cluster c;
  c.add_point();
  c.add_point(0);
  c.add_point(1);
  c.add_point(0);
  EXPECT_EQ(host_path(c, 2), (std::vector<size_t>{0, 1, 2}));
  EXPECT_EQ(host_path(c, 3), (std::vector<size_t>{0, 3}));
}

TEST(Nakamura, Baselines) {
  EXPECT_EQ(nakamura_scan({Q(1)}, 3, 2).N, 2);
  NakamuraReport r = nakamura_scan({Q(1, 2)}, 4, 3);
  EXPECT_EQ(r.N, 3);
  EXPECT_LE(r.N, 4);
  EXPECT_GT(r.instances, 0u);
}

TEST(Nakamura, EmptyBoundary) {
  NakamuraReport r = nakamura_scan({}, 3, 2);
  EXPECT_EQ(r.worst_mld, 2);
  EXPECT_EQ(r.N, 2);
}

TEST(SmoothGermProperty, MldMatchesBlowupSearch) {
  gen::Rng rng(21);
  const std::vector<Rational> pool{Q(0), Q(1, 3), Q(1, 2), Q(3, 4), Q(1)};
  for (int t = 0; t < 80; ++t) {
    gen::ClusterPair cp = gen::smooth_cluster(rng, 4, 3, pool);
    oracle::BlowupMin o = oracle::blowup_mld(cp.c, cp.b, 7);
    Boundary b(cp.b.begin(), cp.b.end());
    if (o.value < 0) {
      EXPECT_THROW(mld_smooth_germ(cp.c, b), NotLC);
      continue;
    }
    GermMld m = mld_smooth_germ(cp.c, b);
    EXPECT_EQ(m.value, FormalReal(o.value));
    // value = l0 - sum l_i b_i with non-negative integers
    Rational v(m.l0);
    for (size_t i = 0; i < m.l.size(); ++i) {
      EXPECT_GE(m.l[i], 0);
      v -= Rational(m.l[i]) * cp.b[i];
    }
    EXPECT_EQ(FormalReal(v), m.value);
  }
}

TEST(SmoothGermProperty, LogDiscrepancyFormulaOnChainsOfFreePoints) {
  // k free points along one smooth branch: a(E_k) = k + 1 - k b.
  for (int k = 1; k <= 6; ++k) {
    Cluster c;
    c.add_point();
    for (int j = 1; j < k; ++j) c.add_point(static_cast<size_t>(j - 1));
    std::vector<size_t> through;
    for (int j = 0; j < k; ++j) through.push_back(static_cast<size_t>(j));
    c.add_branch("C", through);
    const Rational b(3, 7);
    EXPECT_EQ(cluster_log_discrepancies(c, same(1, b)).back(), FormalReal(Rational(k + 1) - k * b));
  }
}
