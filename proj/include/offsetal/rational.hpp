#pragma once

// Exact scalar domain: arbitrary-precision integers and rationals on top of GMP.
// Rational keeps mpq_class canonical (reduced, positive denominator) at all times.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace offsetal {

using Int = mpz_class;

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int int_divexact(const Int& a, const Int& b) {
  if (sgn(b) == 0) throw std::domain_error("int_divexact: division by zero");
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int int_pow(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

inline bool int_is_square(const Int& a) {
  return sgn(a) >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int int_sqrt_exact(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}        // NOLINT: implicit by design
  Rational(const Int& n) : v_(n) {}  // NOLINT
  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "a" or "a/b" with optional leading minus; anything else throws.
  static Rational from_string(const std::string& s);

  const mpq_class& raw() const { return v_; }
  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational pow(long e) const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // True iff *this = r^2 for rational r; on success r is the nonnegative root.
  bool sqrt_exact(Rational* r) const;

  double to_double() const { return v_.get_d(); }
  std::string str() const;

 private:
  mpq_class v_;
};

inline Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: 0^negative");
    return Rational(0);
  }
  Rational base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Int n = int_pow(base.num(), k);
  Int d = int_pow(base.den(), k);
  return Rational(n, d);
}

inline bool Rational::sqrt_exact(Rational* r) const {
  if (sign() < 0) return false;
  if (!int_is_square(num()) || !int_is_square(den())) return false;
  if (r) *r = Rational(int_sqrt_exact(num()), int_sqrt_exact(den()));
  return true;
}

inline std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

inline Rational Rational::from_string(const std::string& s) {
  auto bad = [&]() -> Rational {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  };
  if (s.empty()) return bad();
  size_t slash = s.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](const std::string& part) {
    return (!part.empty() && part[0] == '+') ? part.substr(1) : part;
  };
  if (slash == std::string::npos) {
    if (!check_int(s, true)) return bad();
    return Rational(Int(strip_plus(s)));
  }
  std::string np = strip_plus(s.substr(0, slash)), dp = s.substr(slash + 1);
  if (!check_int(np, true) || !check_int(dp, false)) return bad();
  Int d(dp);
  if (sgn(d) == 0) return bad();
  return Rational(Int(np), d);
}

// gcd of rationals: largest r > 0 such that a/r and b/r are integers.
// gcd(q, 0) = |q|. Used for canonical content extraction.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  Int l = int_lcm(a.den(), b.den());
  Int ia = a.num() * int_divexact(l, a.den());
  Int ib = b.num() * int_divexact(l, b.den());
  return Rational(int_gcd(ia, ib), l);
}

}  // namespace offsetal
