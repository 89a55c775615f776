#pragma once

#include <optional>
#include <vector>

#include "surfcomp/complements.hpp"
#include "surfcomp/numbers.hpp"
#include "surfcomp/smooth_germ.hpp"

// Brute-force references. None of these reuse the closed forms or strata
// lists of the library; they only share the number types.
namespace surfcomp::oracle {

struct BlowupMin {
  Rational value;      // least log discrepancy seen
  int depth = 0;       // blow-ups needed to reach it
  size_t divisors = 0; // exceptional divisors visited
};

// Exhaustive blow-up search over the smooth germ: at every blown-up point the
// children are the points where the curves through it meet the new curve, the
// cluster points hosted there, the exits of branches that leave the cluster,
// and one general point. a(E_p) = 2 - sum over curves D through p of
// coeff(D) * mult_p(D). Smooth branches along host paths only.
BlowupMin blowup_mld(const Cluster& cl, const std::vector<Rational>& b, int max_depth);

// Least n with p | n, n <= n_max, found by enumerating every admissible B+.
// Pairs that are not (eps, R)-complementary (some b > 1 - eps, or degree
// above 2 on the curve) get nullopt.
std::optional<long> dim1_scan(const std::vector<Rational>& b, bool local, const Rational& eps, long p, long n_max);

// Every choice of base coefficients and added points at this n.
bool elliptic_feasible(const EllipticBase& eb, const Rational& eps, long n);

// Non-negative integer weights (each <= max_lambda, not all zero) on the
// irrational members whose combination is rational. Empty when none exists.
std::vector<long> rational_combination(const std::vector<FormalReal>& gamma, long max_lambda);

}  // namespace surfcomp::oracle
