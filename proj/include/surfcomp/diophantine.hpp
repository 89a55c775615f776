#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfcomp/coeff_sets.hpp"
#include "surfcomp/numbers.hpp"

namespace surfcomp {

struct DirectionRequest {
  Integer p0 = 1;
  Integer l = 1;
  Rational eps1;
  std::vector<FormalReal> r0;
  std::vector<Rational> e;
};

struct DirectionResult {
  Integer n0;
  std::vector<Rational> r0p;
  Integer n1;  // scan index that produced it
};

struct ScanOptions {
  long budget = 10'000'000;
  bool parallel = true;
};

// Checks conditions (1)-(4) exactly; returns the first failing condition
// number, or 0 when all hold.
int check_direction(const DirectionRequest& req, const Integer& n0, const std::vector<Rational>& r0p);

DirectionResult approximate_direction(const DirectionRequest& req, const ScanOptions& opt = {});

struct WeightSystem {
  std::vector<FormalReal> a;
  std::vector<std::vector<Rational>> b;  // k rows, s columns
  std::vector<Rational> eps;
  FormalReal target;
  Integer n0 = 1;

  size_t k() const { return a.size(); }
  size_t s() const { return b.empty() ? 0 : b[0].size(); }
  FormalReal column(size_t j) const;
  void validate() const;
};

struct WeightResult {
  Integer n;
  std::vector<Rational> a;
  bool moreover = false;  // the monotone clause was requested and holds
};

// Returns 0 when (1)-(5) hold, else the first failing condition; 6 means the
// monotone clause failed while requested.
int check_weights(const WeightSystem& ws, const Integer& p, const WeightResult& r);

WeightResult complement_weights(const WeightSystem& ws, const CoeffSet& gamma, const Integer& p,
                                const ScanOptions& opt = {});

struct SimplexEnclosure {
  Integer M;
  std::vector<std::vector<Rational>> vertices;      // n+1 points
  std::vector<std::vector<Rational>> barycentric;  // per input point, all > 0
};

SimplexEnclosure simplex_enclose(const std::vector<std::vector<Rational>>& points);

struct SpanCertificate {
  bool holds = true;
  // holds == false: sum lambda_i * gamma[members_i] = value, a nonzero rational
  std::vector<size_t> members;
  std::vector<Integer> lambda;
  Rational value;
  // holds == true: new basis r_1..r_c over the declared one, and for each
  // input (q0, q1, ..., qc) >= 0 with gamma = q0 + sum qj r_j
  std::vector<FormalReal> basis;
  std::vector<std::vector<Rational>> coords;
  Rational shift;
};

SpanCertificate span_certificate(const std::vector<FormalReal>& gamma);
// Same, but the new basis spans the given declared-basis coordinates (1-based).
SpanCertificate span_certificate_on(const std::vector<FormalReal>& gamma, const std::vector<size_t>& support);
bool verify_span_certificate(const std::vector<FormalReal>& gamma, const SpanCertificate& cert);

// Irrational coordinates (1-based) that are nonzero in some value.
std::vector<size_t> support_of(const std::vector<FormalReal>& xs);

}  // namespace surfcomp
