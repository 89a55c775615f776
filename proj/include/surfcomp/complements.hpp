#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "surfcomp/dual_graph.hpp"
#include "surfcomp/numbers.hpp"
#include "surfcomp/smooth_germ.hpp"

namespace surfcomp {

// (n floor(b) + floor((n+1) frac(b))) / n, the least admissible b+.
Rational rounding_bound(const FormalReal& b, const Integer& n);

struct ComplementCandidate {
  Integer n = 1;
  std::vector<FormalReal> plus;  // may be longer than B: extra general components
};

struct CoeffCheck {
  size_t index = 0;
  bool shared = true;
  bool integral = true;
  bool bound_ok = true;
  Integer required;  // n floor(b) + floor((n+1) frac(b))
};

struct CoeffReport {
  bool ok = true;
  std::vector<CoeffCheck> rows;
};

CoeffReport check_n_complement_coeffs(const std::vector<FormalReal>& B, const ComplementCandidate& cand);

struct Dim1Germ {
  std::vector<FormalReal> coeffs;
  bool local = false;  // a germ of a point instead of a rational curve
  bool operator==(const Dim1Germ& o) const { return coeffs == o.coeffs && local == o.local; }
};

struct Dim1Result {
  Integer n;
  std::vector<Rational> plus;
  std::vector<Rational> added;  // coefficients at new general points
};

// The complement at a fixed n, if one exists.
std::optional<Dim1Result> dim1_complement_at(const Dim1Germ& g, const FormalReal& eps, const Integer& n);
Dim1Result dim1_complement_search(const Dim1Germ& g, const FormalReal& eps, const Integer& p, long n_max);

struct SpecialFiber {
  long m = 1;
  Rational b = 0;
  bool operator==(const SpecialFiber& o) const { return m == o.m && b == o.b; }
};

struct EllipticBase {
  long degL = 1;
  long genus = 0;
  std::vector<SpecialFiber> fibers;
  // One multiple fiber of multiplicity m over P^1 with deg L = 1.
  static EllipticBase xm(long m);
  void validate() const;
  bool operator==(const EllipticBase& o) const {
    return degL == o.degL && genus == o.genus && fibers == o.fibers;
  }
};

struct EllipticResult {
  Integer n;
  std::vector<Rational> c;
  std::vector<Rational> added;
};

std::optional<EllipticResult> elliptic_base_at(const EllipticBase& eb, const Rational& eps, const Integer& n);
EllipticResult elliptic_base_minimal_n(const EllipticBase& eb, const Rational& eps, long n_max);

struct P2Mld {
  FormalReal value;
  std::string witness;
};

// pattern lists the points where at least two lines meet; pairs of lines not
// covered by any entry meet at an ordinary double point.
P2Mld p2_lines_mld(const std::vector<FormalReal>& lines, const std::vector<std::vector<size_t>>& pattern);

struct DecompPart {
  FormalReal a;
  std::vector<Rational> coeffs;
  Rational eps;
};

struct GermContext {
  std::optional<DualGraph> graph;
  std::optional<Cluster> cluster;
};

struct DecompReport {
  std::array<bool, 5> ok{true, true, true, true, true};
  std::array<std::string, 5> detail;
  bool all() const { return ok[0] && ok[1] && ok[2] && ok[3] && ok[4]; }
};

DecompReport verify_decomposition(const std::vector<FormalReal>& B, const std::vector<DecompPart>& parts,
                                  const FormalReal& eps, const GermContext* ctx = nullptr);

}  // namespace surfcomp
