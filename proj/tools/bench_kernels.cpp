#include <chrono>
#include <cstdio>
#include <functional>
#include <omp.h>

#include "surfcomp/diophantine.hpp"
#include "surfcomp/smooth_germ.hpp"
#include "surfcomp/suites.hpp"

using namespace surfcomp;

namespace {

double seconds(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3f s  parallel %8.3f s  speedup %.2f\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  const std::vector<Rational> gamma{Q(1, 2)};
  row("nakamura_scan 4 points", seconds([&] { nakamura_scan_serial(gamma, 4, 3); }),
      seconds([&] { nakamura_scan(gamma, 4, 3); }));

  auto B = make_basis({{"r1", "sqrt(2)"}, {"r2", "sqrt(3)"}});
  DirectionRequest req;
  req.eps1 = Q(1, 200);
  req.r0 = {FormalReal(B, {Q(0), Q(1), Q(0)}), FormalReal(B, {Q(0), Q(0), Q(1)})};
  req.e = {Q(1), Q(1, 2)};
  ScanOptions ser, par;
  ser.parallel = false;
  row("approximate_direction c=2", seconds([&] { approximate_direction(req, ser); }),
      seconds([&] { approximate_direction(req, par); }));

  SuiteOptions one, many;
  many.jobs = omp_get_max_threads();
  row("verify graph suite", seconds([&] { run_verify_suite("graph", one); }),
      seconds([&] { run_verify_suite("graph", many); }));
  return 0;
}
