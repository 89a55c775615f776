#include "surfcomp/affine.hpp"

#include <algorithm>

namespace surfcomp {

FormalReal AffineForm::eval(const std::vector<FormalReal>& b) const {
  if (b.size() < lin.size()) throw ValidationError("boundary has fewer coefficients than the form");
  FormalReal out(c);
  for (size_t i = 0; i < lin.size(); ++i)
    if (lin[i] != 0) out += b[i] * lin[i];
  return out;
}

Rational AffineForm::eval(const std::vector<Rational>& b) const {
  if (b.size() < lin.size()) throw ValidationError("boundary has fewer coefficients than the form");
  Rational out = c;
  for (size_t i = 0; i < lin.size(); ++i) out += lin[i] * b[i];
  return out;
}

bool AffineForm::is_constant() const {
  return std::all_of(lin.begin(), lin.end(), [](const Rational& q) { return q == 0; });
}

AffineForm AffineForm::operator+(const AffineForm& o) const {
  AffineForm r = *this;
  r += o;
  return r;
}

AffineForm AffineForm::operator-(const AffineForm& o) const {
  AffineForm r = *this;
  r -= o;
  return r;
}

AffineForm AffineForm::operator*(const Rational& q) const {
  AffineForm r = *this;
  r.c *= q;
  for (auto& v : r.lin) v *= q;
  return r;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  c += o.c;
  if (lin.size() < o.lin.size()) lin.resize(o.lin.size(), Rational(0));
  for (size_t i = 0; i < o.lin.size(); ++i) lin[i] += o.lin[i];
  return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) {
  c -= o.c;
  if (lin.size() < o.lin.size()) lin.resize(o.lin.size(), Rational(0));
  for (size_t i = 0; i < o.lin.size(); ++i) lin[i] -= o.lin[i];
  return *this;
}

bool AffineForm::operator==(const AffineForm& o) const {
  if (c != o.c) return false;
  size_t n = std::max(lin.size(), o.lin.size());
  for (size_t i = 0; i < n; ++i) {
    Rational a = i < lin.size() ? lin[i] : Rational(0);
    Rational b = i < o.lin.size() ? o.lin[i] : Rational(0);
    if (a != b) return false;
  }
  return true;
}

std::string AffineForm::str(const std::vector<std::string>& names) const {
  std::string out;
  bool first = true;
  if (c != 0 || is_constant()) {
    out = to_string(c);
    first = false;
  }
  for (size_t i = 0; i < lin.size(); ++i) {
    if (lin[i] == 0) continue;
    std::string name = i < names.size() ? names[i] : "b" + std::to_string(i + 1);
    Rational mag = abs_q(lin[i]);
    std::string term = mag == 1 ? name : to_string(mag) + "*" + name;
    if (first)
      out = (lin[i] < 0 ? "-" : "") + term;
    else
      out += (lin[i] < 0 ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

std::string Stratum::label(const std::vector<std::string>& branch_names) const {
  auto e = [](size_t i) { return "E" + std::to_string(i + 1); };
  switch (kind) {
    case Kind::Divisor:
      return e(k);
    case Kind::Node:
      return e(std::min(j, k)) + "^" + e(std::max(j, k));
    case Kind::Mark: {
      std::string b = branch < branch_names.size() ? branch_names[branch] : "B" + std::to_string(branch + 1);
      return e(k) + "^" + b;
    }
    case Kind::FreePoint:
      return "pt(" + e(k) + ")";
  }
  return "?";
}

}  // namespace surfcomp
