#include <gtest/gtest.h>

#include "surfcomp/diophantine.hpp"
#include "surfcomp/smooth_germ.hpp"
#include "surfcomp/suites.hpp"

using namespace surfcomp;

TEST(Parallel, NakamuraMatchesSerial) {
  for (const auto& gamma : std::vector<std::vector<Rational>>{{Q(1)}, {Q(1, 2)}, {Q(1, 3), Q(2, 3)}}) {
    NakamuraReport a = nakamura_scan(gamma, 4, 3);
    NakamuraReport b = nakamura_scan_serial(gamma, 4, 3);
    EXPECT_EQ(a.N, b.N);
    EXPECT_EQ(a.instances, b.instances);
    EXPECT_EQ(a.worst, b.worst);
    EXPECT_EQ(a.worst_coeffs, b.worst_coeffs);
    EXPECT_EQ(a.worst_mld, b.worst_mld);
  }
}

TEST(Parallel, DirectionScanMatchesSerial) {
  auto B = make_basis({{"r1", "sqrt(2)"}, {"r2", "sqrt(3)"}});
  DirectionRequest req;
  req.p0 = 2;
  req.eps1 = Q(1, 8);
  req.r0 = {FormalReal(B, {Q(0), Q(1), Q(0)}), FormalReal(B, {Q(0), Q(0), Q(1)})};
  req.e = {Q(1), Q(-1, 3)};
  ScanOptions par, ser;
  ser.parallel = false;
  DirectionResult a = approximate_direction(req, par);
  DirectionResult b = approximate_direction(req, ser);
  EXPECT_EQ(a.n0, b.n0);
  EXPECT_EQ(a.r0p, b.r0p);
}

TEST(Parallel, SuiteTableIndependentOfJobs) {
  SuiteOptions one, two;
  two.jobs = 2;
  for (const char* s : {"sets", "complements"})
    EXPECT_EQ(tsv(run_verify_suite(s, one)), tsv(run_verify_suite(s, two))) << s;
}

TEST(Parallel, UnknownSuiteRejected) { EXPECT_THROW(run_verify_suite("nope", SuiteOptions{}), ValidationError); }
