#include "surfcomp/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace surfcomp {

Rational Q(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw ParseError(1, 1, "empty rational");
  auto bad = [&](size_t col) { return ParseError(1, static_cast<int>(col + 1), "malformed rational '" + s + "'"); };
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  if (i >= s.size()) throw bad(i);
  auto slash = s.find('/', i);
  auto dot = s.find('.', i);
  Rational out;
  auto digits_only = [](const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (slash != std::string::npos) {
    std::string a = s.substr(i, slash - i), b = s.substr(slash + 1);
    if (!digits_only(a)) throw bad(i);
    if (!digits_only(b)) throw bad(slash + 1);
    Integer den(b, 10);
    if (den == 0) throw ParseError(1, static_cast<int>(slash + 2), "zero denominator");
    out = Rational(Integer(a, 10), den);
  } else if (dot != std::string::npos) {
    std::string a = s.substr(i, dot - i), b = s.substr(dot + 1);
    if (a.empty()) a = "0";
    if (!digits_only(a)) throw bad(i);
    if (!b.empty() && !digits_only(b)) throw bad(dot + 1);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, b.size());
    out = Rational(Integer(a + b, 10), scale);
  } else {
    std::string a = s.substr(i);
    if (!digits_only(a)) throw bad(i);
    out = Rational(Integer(a, 10), 1);
  }
  out.canonicalize();
  return neg ? Rational(-out) : out;
}

Integer floor_q(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

Integer ceil_q(const Rational& q) {
  Integer z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer gcd_z(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm_z(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer lcm_denominators(const std::vector<Rational>& xs) {
  Integer l = 1;
  for (const auto& x : xs) l = lcm_z(l, x.get_den());
  return l;
}

// ---------------------------------------------------------------- Interval

void Interval::init() {
  mpfr_init2(lo_, bits_);
  mpfr_init2(hi_, bits_);
  live_ = true;
}

Interval::Interval(mpfr_prec_t bits) : bits_(bits) {
  init();
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : bits_(o.bits_) {
  init();
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : bits_(o.bits_) {
  init();
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    if (bits_ != o.bits_) {
      mpfr_set_prec(lo_, o.bits_);
      mpfr_set_prec(hi_, o.bits_);
      bits_ = o.bits_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(bits_, o.bits_);
  }
  return *this;
}

Interval::~Interval() {
  if (live_) {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }
}

Interval Interval::point(const Rational& q, mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Rational& lo, const Rational& hi, mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::max(bits_, o.bits_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::max(bits_, o.bits_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(bits_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Rational& q) const {
  Interval r(bits_);
  if (q >= 0) {
    mpfr_mul_q(r.lo_, lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r.hi_, hi_, q.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(r.lo_, hi_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r.hi_, lo_, q.get_mpq_t(), MPFR_RNDU);
  }
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  mpfr_prec_t b = std::max(bits_, o.bits_);
  Interval r(b);
  mpfr_t t;
  mpfr_init2(t, b);
  mpfr_srcptr a[2] = {lo_, hi_};
  mpfr_srcptr c[2] = {o.lo_, o.hi_};
  bool first = true;
  for (auto x : a) {
    for (auto y : c) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

double Interval::mid() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, bits_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

// ---------------------------------------------------------------- Basis

Witness parse_witness(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  Witness w;
  w.text = s;
  if (s.rfind("sqrt(", 0) == 0 && s.back() == ')') {
    w.kind = Witness::Kind::Sqrt;
    w.value = parse_rational(s.substr(5, s.size() - 6));
    if (w.value <= 0) throw ValidationError("sqrt witness needs a positive radicand: " + s);
    Integer n = w.value.get_num(), d = w.value.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t()))
      throw ValidationError("witness " + s + " is rational, so it cannot extend the basis");
    w.radius = 0;
    return w;
  }
  auto dot = s.find('.');
  size_t sig = 0;
  bool leading = true;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) continue;
    if (leading && c == '0') continue;
    leading = false;
    ++sig;
  }
  if (sig < 30) throw ValidationError("decimal witness needs at least 30 significant digits: " + s);
  w.kind = Witness::Kind::Decimal;
  w.value = parse_rational(s);
  size_t frac = dot == std::string::npos ? 0 : s.size() - dot - 1;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac);
  w.radius = Rational(1, scale);
  w.radius.canonicalize();
  return w;
}

Basis::Basis(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  for (size_t i = 0; i < symbols_.size(); ++i)
    for (size_t j = i + 1; j < symbols_.size(); ++j)
      if (symbols_[i].name == symbols_[j].name) throw ValidationError("duplicate basis symbol " + symbols_[i].name);
}

size_t Basis::index_of(std::string_view name) const {
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i + 1;
  return 0;
}

Interval Basis::enclose(size_t i, mpfr_prec_t bits) const {
  const Witness& w = symbol(i).witness;
  if (w.kind == Witness::Kind::Decimal) return Interval::hull(w.value - w.radius, w.value + w.radius, bits);
  Interval q = Interval::point(w.value, bits);
  Interval r(bits);
  mpfr_sqrt(r.lo(), q.lo(), MPFR_RNDD);
  mpfr_sqrt(r.hi(), q.hi(), MPFR_RNDU);
  return r;
}

bool Basis::same_as(const Basis& o) const {
  if (size() != o.size()) return false;
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name != o.symbols_[i].name || symbols_[i].witness.text != o.symbols_[i].witness.text) return false;
  return true;
}

std::string Basis::declaration(size_t i) const { return symbol(i).name + " ~ " + symbol(i).witness.text; }

BasisPtr make_basis(const std::vector<std::pair<std::string, std::string>>& decl) {
  std::vector<Basis::Symbol> syms;
  for (const auto& [name, wit] : decl) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
      throw ValidationError("bad basis symbol '" + name + "'");
    syms.push_back({name, parse_witness(wit)});
  }
  return std::make_shared<const Basis>(std::move(syms));
}

// ---------------------------------------------------------------- FormalReal

FormalReal::FormalReal() : coords_(1, Rational(0)) {}
FormalReal::FormalReal(const Rational& q) : coords_(1, q) {}
FormalReal::FormalReal(long v) : coords_(1, Rational(v)) {}

FormalReal::FormalReal(BasisPtr basis, std::vector<Rational> coords) : basis_(std::move(basis)), coords_(std::move(coords)) {
  size_t want = 1 + (basis_ ? basis_->size() : 0);
  if (coords_.empty()) coords_.push_back(0);
  if (coords_.size() > want) throw BasisMismatch("too many coordinates for the basis");
  coords_.resize(want, Rational(0));
}

Rational FormalReal::coord(size_t i) const { return i < coords_.size() ? coords_[i] : Rational(0); }

bool FormalReal::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool FormalReal::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

Rational FormalReal::as_rational() const {
  if (!is_rational()) throw IrrationalCoefficient(str() + " is not rational");
  return coords_[0];
}

Interval FormalReal::enclose(mpfr_prec_t bits) const {
  Interval acc = Interval::point(coords_[0], bits);
  for (size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    acc = acc + basis_->enclose(i, bits) * coords_[i];
  }
  return acc;
}

double FormalReal::approx() const { return enclose(128).mid(); }

namespace {

std::string coeff_term(const Rational& c, const std::string& sym) {
  Rational a = abs_q(c);
  if (a == 1) return sym;
  return to_string(a) + "*" + sym;
}

}  // namespace

std::string FormalReal::str() const {
  std::string out;
  bool any = false;
  if (coords_[0] != 0 || is_rational()) {
    out = to_string(coords_[0]);
    any = true;
  }
  for (size_t i = 1; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c == 0) continue;
    const std::string& sym = basis_->symbol(i).name;
    if (!any) {
      out = (c < 0 ? "-" : "") + coeff_term(c, sym);
      any = true;
    } else {
      out += (c < 0 ? " - " : " + ") + coeff_term(c, sym);
    }
  }
  return out;
}

BasisPtr common_basis(const FormalReal& a, const FormalReal& b) {
  const BasisPtr& x = a.basis();
  const BasisPtr& y = b.basis();
  if (x == y) return x;
  if (!x) return y;
  if (!y) return x;
  if (x->same_as(*y)) return x;
  if (a.is_rational()) return y;
  if (b.is_rational()) return x;
  throw BasisMismatch("operands live over different bases");
}

BasisPtr common_basis(const std::vector<FormalReal>& xs) {
  BasisPtr out;
  for (const auto& x : xs) {
    if (!x.basis() || x.is_rational()) continue;
    if (!out) {
      out = x.basis();
    } else if (out != x.basis() && !out->same_as(*x.basis())) {
      throw BasisMismatch("values live over different bases");
    }
  }
  if (!out)
    for (const auto& x : xs)
      if (x.basis()) return x.basis();
  return out;
}

FormalReal FormalReal::over(const BasisPtr& b) const {
  if (b == basis_) return *this;
  if (!b) {
    if (!is_rational()) throw BasisMismatch("irrational value cannot drop its basis");
    return FormalReal(coords_[0]);
  }
  if (basis_ && !basis_->same_as(*b) && !is_rational()) throw BasisMismatch("operands live over different bases");
  std::vector<Rational> c(1 + b->size(), Rational(0));
  c[0] = coords_[0];
  if (basis_ && basis_->same_as(*b))
    for (size_t i = 1; i < coords_.size(); ++i) c[i] = coords_[i];
  return FormalReal(b, std::move(c));
}

FormalReal FormalReal::operator+(const FormalReal& o) const {
  BasisPtr b = common_basis(*this, o);
  FormalReal x = over(b), y = o.over(b);
  for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
  return x;
}

FormalReal FormalReal::operator-(const FormalReal& o) const {
  BasisPtr b = common_basis(*this, o);
  FormalReal x = over(b), y = o.over(b);
  for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] -= y.coords_[i];
  return x;
}

FormalReal FormalReal::operator-() const {
  FormalReal x = *this;
  for (auto& c : x.coords_) c = -c;
  return x;
}

FormalReal FormalReal::operator*(const Rational& q) const {
  FormalReal x = *this;
  for (auto& c : x.coords_) c *= q;
  return x;
}

FormalReal FormalReal::operator/(const Rational& q) const {
  FormalReal x = *this;
  for (auto& c : x.coords_) c /= q;
  return x;
}

FormalReal& FormalReal::operator+=(const FormalReal& o) { return *this = *this + o; }
FormalReal& FormalReal::operator-=(const FormalReal& o) { return *this = *this - o; }

bool FormalReal::operator==(const FormalReal& o) const {
  size_t n = std::max(coords_.size(), o.coords_.size());
  if (!is_rational() && !o.is_rational()) common_basis(*this, o);
  for (size_t i = 0; i < n; ++i)
    if (coord(i) != o.coord(i)) return false;
  return true;
}

// ---------------------------------------------------------------- ordering

namespace {

mpfr_prec_t digits_to_bits(int digits) { return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 32; }

}  // namespace

int sign(const FormalReal& x, const Precision& p) {
  if (x.is_rational()) return sgn(x.rational_part());
  for (int d = p.start_digits;; d *= 2) {
    int digits = std::min(d, p.cap_digits);
    Interval iv = x.enclose(digits_to_bits(digits));
    if (iv.positive()) return 1;
    if (iv.negative()) return -1;
    if (digits >= p.cap_digits)
      throw WitnessTooCoarse("could not separate " + x.str() + " from 0 at " + std::to_string(p.cap_digits) + " digits");
  }
}

Cmp compare(const FormalReal& x, const FormalReal& y, const Precision& p) {
  FormalReal d = x - y;
  if (d.is_zero()) return Cmp::EQ;
  int s = sign(d, p);
  return s > 0 ? Cmp::GT : Cmp::LT;
}

const FormalReal& min_of(const FormalReal& a, const FormalReal& b) { return compare(b, a) == Cmp::LT ? b : a; }
const FormalReal& max_of(const FormalReal& a, const FormalReal& b) { return compare(b, a) == Cmp::GT ? b : a; }
FormalReal abs_of(const FormalReal& x) { return sign(x) < 0 ? -x : x; }

Integer floor_of(const FormalReal& x, const Precision& p) {
  if (x.is_rational()) return floor_q(x.rational_part());
  Interval iv = x.enclose(digits_to_bits(p.start_digits));
  Integer lo, hi;
  mpfr_get_z(lo.get_mpz_t(), iv.lo(), MPFR_RNDD);
  mpfr_get_z(hi.get_mpz_t(), iv.hi(), MPFR_RNDD);
  // An irrational value never equals an integer, so one comparison per
  // candidate settles it.
  for (Integer k = hi; k > lo; --k)
    if (compare(x, FormalReal(Rational(k)), p) == Cmp::GT) return k;
  return lo;
}

FormalReal frac_of(const FormalReal& x, const Precision& p) { return x - FormalReal(Rational(floor_of(x, p))); }

// ---------------------------------------------------------------- parsing

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view s, const BasisPtr& b) : s_(s), b_(b), width_(1 + (b ? b->size() : 0)) {}

  std::vector<Rational> run() {
    auto v = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(1, static_cast<int>(pos_ + 1), msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool constant(const std::vector<Rational>& v) const {
    for (size_t i = 1; i < v.size(); ++i)
      if (v[i] != 0) return false;
    return true;
  }

  std::vector<Rational> expr() {
    auto acc = term();
    for (;;) {
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) return acc;
      char op = s_[pos_++];
      auto t = term();
      for (size_t i = 0; i < width_; ++i) acc[i] += op == '+' ? t[i] : Rational(-t[i]);
    }
  }

  std::vector<Rational> term() {
    skip();
    bool neg = false;
    while (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      if (s_[pos_] == '-') neg = !neg;
      ++pos_;
      skip();
    }
    auto acc = factor();
    for (;;) {
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '*' && s_[pos_] != '/')) break;
      char op = s_[pos_++];
      size_t at = pos_;
      auto f = factor();
      if (op == '*') {
        if (constant(f)) {
          for (auto& c : acc) c *= f[0];
        } else if (constant(acc)) {
          Rational k = acc[0];
          acc = f;
          for (auto& c : acc) c *= k;
        } else {
          pos_ = at;
          fail("product of two basis terms is not linear");
        }
      } else {
        if (!constant(f)) {
          pos_ = at;
          fail("division by a basis term is not linear");
        }
        if (f[0] == 0) {
          pos_ = at;
          fail("division by zero");
        }
        for (auto& c : acc) c /= f[0];
      }
    }
    if (neg)
      for (auto& c : acc) c = -c;
    return acc;
  }

  std::vector<Rational> factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of literal");
    std::vector<Rational> v(width_, Rational(0));
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      v = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      try {
        v[0] = parse_rational(s_.substr(start, pos_ - start));
      } catch (const ParseError&) {
        pos_ = start;
        fail("malformed number");
      }
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      size_t idx = b_ ? b_->index_of(name) : 0;
      if (idx == 0) {
        pos_ = start;
        fail("unknown symbol '" + std::string(name) + "'");
      }
      v[idx] = 1;
      return v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const BasisPtr& b_;
  size_t width_;
  size_t pos_ = 0;
};

}  // namespace

FormalReal parse_formal(std::string_view text, const BasisPtr& basis) {
  LiteralParser p(text, basis);
  auto v = p.run();
  if (!basis) return FormalReal(v[0]);
  return FormalReal(basis, std::move(v));
}

std::vector<FormalReal> parse_formal_list(std::string_view text, const BasisPtr& basis) {
  std::vector<FormalReal> out;
  size_t start = 0;
  std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos) return out;
  for (;;) {
    size_t comma = s.find(',', start);
    std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_formal(piece, basis));
    } catch (const ParseError& e) {
      throw ParseError(1, static_cast<int>(start) + e.column(), e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos) return out;
  size_t start = 0;
  for (;;) {
    size_t comma = s.find(',', start);
    out.push_back(parse_rational(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<FormalReal>& xs, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i].str();
  return out;
}

std::string join(const std::vector<Rational>& xs, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + to_string(xs[i]);
  return out;
}

}  // namespace surfcomp
