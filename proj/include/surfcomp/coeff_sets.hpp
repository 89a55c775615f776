#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfcomp/numbers.hpp"

namespace surfcomp {

// Finite, sorted, deduplicated set of reals in [0,1]. Infinite sets appear
// only through a generator tag plus the truncation level used.
class CoeffSet {
 public:
  CoeffSet() = default;
  explicit CoeffSet(std::vector<FormalReal> xs, bool allow_above_one = false);
  static CoeffSet of(const std::vector<Rational>& xs);
  // {1 - 1/n : 1 <= n <= max_n} together with 1.
  static CoeffSet standard(int max_n);

  const std::vector<FormalReal>& values() const { return values_; }
  size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  bool contains(const FormalReal& x) const;
  std::vector<Rational> rationals() const;
  std::string str() const;

  std::string tag;
  int truncation = 0;

 private:
  std::vector<FormalReal> values_;
};

CoeffSet gamma_plus(const CoeffSet& gamma, int max_terms);

struct DEntry {
  FormalReal value;
  long m;
  FormalReal f;
};

struct DSet {
  CoeffSet set;
  std::vector<DEntry> provenance;  // one recorded (m, f) per value
};

DSet d_of(const CoeffSet& gamma, int max_m, int max_terms);

struct DDReport {
  bool holds = true;
  std::optional<Rational> counterexample;
  std::string side;  // which side has the extra value
  size_t lhs_size = 0;
  size_t rhs_size = 0;
  long inner_max_m = 0;
};

DDReport check_dd_identity(const std::vector<Rational>& gamma, int bound);

struct Projection {
  std::vector<std::pair<FormalReal, FormalReal>> map;
  long buckets = 0;
  FormalReal apply(const FormalReal& x) const;
  CoeffSet image() const;
};

// Verifies the three defining properties and g o g = g before returning.
Projection projection_g(const CoeffSet& gamma, const CoeffSet& gamma2, const Rational& alpha);

}  // namespace surfcomp
