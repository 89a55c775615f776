#pragma once

#include <string>
#include <vector>

#include "surfcomp/numbers.hpp"

namespace surfcomp {

// c + sum lin[i] * b_i, where b_i are the boundary coefficients.
struct AffineForm {
  Rational c;
  std::vector<Rational> lin;

  AffineForm() = default;
  explicit AffineForm(size_t nvars, const Rational& constant = 0) : c(constant), lin(nvars, Rational(0)) {}

  size_t nvars() const { return lin.size(); }
  FormalReal eval(const std::vector<FormalReal>& b) const;
  Rational eval(const std::vector<Rational>& b) const;
  bool is_constant() const;

  AffineForm operator+(const AffineForm& o) const;
  AffineForm operator-(const AffineForm& o) const;
  AffineForm operator*(const Rational& q) const;
  AffineForm& operator+=(const AffineForm& o);
  AffineForm& operator-=(const AffineForm& o);
  bool operator==(const AffineForm& o) const;
  bool operator!=(const AffineForm& o) const { return !(*this == o); }

  // "2 - b1 - 1/2*b2" style; names default to b1, b2, ...
  std::string str(const std::vector<std::string>& names = {}) const;
};

// A stratum of an snc model: a curve, a node, a boundary mark, or a general
// closed point on a curve. The form is the log discrepancy of the divisor it
// names (the curve itself, or the first blow-up of the point).
struct Stratum {
  enum class Kind { Divisor, Node, Mark, FreePoint };
  Kind kind = Kind::Divisor;
  size_t k = 0;
  size_t j = 0;       // second curve for nodes
  size_t branch = 0;  // for marks
  AffineForm form;

  // a(E, X, 0): the form at zero boundary.
  const Rational& depth() const { return form.c; }
  std::string label(const std::vector<std::string>& branch_names = {}) const;
};

}  // namespace surfcomp
