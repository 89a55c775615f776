#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surfcomp/errors.hpp"

namespace surfcomp {

using Rational = mpq_class;
using Integer = mpz_class;

Rational Q(long num, long den = 1);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
// Accepts "p", "p/q", "-p/q" and finite decimals such as "0.75".
Rational parse_rational(std::string_view text);
Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);
Rational abs_q(const Rational& q);
Integer lcm_denominators(const std::vector<Rational>& xs);
Integer lcm_z(const Integer& a, const Integer& b);
Integer gcd_z(const Integer& a, const Integer& b);

// Closed interval with MPFR endpoints rounded outward.
class Interval {
 public:
  explicit Interval(mpfr_prec_t bits);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval point(const Rational& q, mpfr_prec_t bits);
  static Interval hull(const Rational& lo, const Rational& hi, mpfr_prec_t bits);

  mpfr_prec_t bits() const { return bits_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator-() const;
  Interval operator*(const Rational& q) const;
  Interval operator*(const Interval& o) const;

  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }
  double mid() const;
  double width() const;

 private:
  void init();
  mpfr_prec_t bits_;
  mpfr_t lo_;
  mpfr_t hi_;
  bool live_ = false;
};

struct Witness {
  enum class Kind { Decimal, Sqrt };
  Kind kind = Kind::Decimal;
  std::string text;
  Rational value;     // decimal value, or the radicand for Sqrt
  Rational radius;    // one unit in the last decimal digit
};

Witness parse_witness(std::string_view text);

class Basis {
 public:
  struct Symbol {
    std::string name;
    Witness witness;
  };

  Basis() = default;
  explicit Basis(std::vector<Symbol> symbols);

  size_t size() const { return symbols_.size(); }
  const Symbol& symbol(size_t i) const { return symbols_.at(i - 1); }
  // 1-based index of a symbol, 0 if unknown.
  size_t index_of(std::string_view name) const;
  Interval enclose(size_t i, mpfr_prec_t bits) const;
  bool same_as(const Basis& o) const;
  std::string declaration(size_t i) const;

 private:
  std::vector<Symbol> symbols_;
};

using BasisPtr = std::shared_ptr<const Basis>;

// Each entry is (name, witness text) such as ("r1", "sqrt(2)").
BasisPtr make_basis(const std::vector<std::pair<std::string, std::string>>& decl);

struct Precision {
  int start_digits = 50;
  int cap_digits = 400;
};

// q0 + sum qi*ri over a declared basis. A null basis means a plain rational.
class FormalReal {
 public:
  FormalReal();
  FormalReal(const Rational& q);  // NOLINT(implicit)
  FormalReal(long v);             // NOLINT(implicit)
  FormalReal(int v) : FormalReal(static_cast<long>(v)) {}
  FormalReal(BasisPtr basis, std::vector<Rational> coords);

  const BasisPtr& basis() const { return basis_; }
  size_t dim() const { return coords_.size() - 1; }
  const std::vector<Rational>& coords() const { return coords_; }
  Rational coord(size_t i) const;
  const Rational& rational_part() const { return coords_[0]; }
  bool is_rational() const;
  bool is_zero() const;
  Rational as_rational() const;

  Interval enclose(mpfr_prec_t bits) const;
  double approx() const;
  std::string str() const;

  FormalReal operator+(const FormalReal& o) const;
  FormalReal operator-(const FormalReal& o) const;
  FormalReal operator-() const;
  FormalReal operator*(const Rational& q) const;
  FormalReal operator/(const Rational& q) const;
  FormalReal& operator+=(const FormalReal& o);
  FormalReal& operator-=(const FormalReal& o);
  bool operator==(const FormalReal& o) const;
  bool operator!=(const FormalReal& o) const { return !(*this == o); }

  // Re-express over a (possibly larger) basis; used to align operands.
  FormalReal over(const BasisPtr& b) const;

 private:
  BasisPtr basis_;
  std::vector<Rational> coords_;
};

inline FormalReal operator*(const Rational& q, const FormalReal& x) { return x * q; }

BasisPtr common_basis(const FormalReal& a, const FormalReal& b);
BasisPtr common_basis(const std::vector<FormalReal>& xs);

enum class Cmp { LT, EQ, GT };

Cmp compare(const FormalReal& x, const FormalReal& y, const Precision& p = {});
int sign(const FormalReal& x, const Precision& p = {});
inline bool operator<(const FormalReal& a, const FormalReal& b) { return compare(a, b) == Cmp::LT; }
inline bool operator>(const FormalReal& a, const FormalReal& b) { return compare(a, b) == Cmp::GT; }
inline bool operator<=(const FormalReal& a, const FormalReal& b) { return compare(a, b) != Cmp::GT; }
inline bool operator>=(const FormalReal& a, const FormalReal& b) { return compare(a, b) != Cmp::LT; }
const FormalReal& min_of(const FormalReal& a, const FormalReal& b);
const FormalReal& max_of(const FormalReal& a, const FormalReal& b);
FormalReal abs_of(const FormalReal& x);

Integer floor_of(const FormalReal& x, const Precision& p = {});
FormalReal frac_of(const FormalReal& x, const Precision& p = {});

// Linear literal: integers, decimals, basis symbols, + - * / and parentheses.
FormalReal parse_formal(std::string_view text, const BasisPtr& basis);
std::vector<FormalReal> parse_formal_list(std::string_view text, const BasisPtr& basis);
std::string join(const std::vector<FormalReal>& xs, const std::string& sep = ",");
std::string join(const std::vector<Rational>& xs, const std::string& sep = ",");
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace surfcomp
