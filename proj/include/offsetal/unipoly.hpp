#pragma once

// Dense univariate polynomials over an exact coefficient ring, plus the generic
// kernels (pseudo-division, subresultant resultant) shared by every instantiation:
// Int (specialized resultants), Rational, GaussQ, and nested UniPoly coefficients
// for recursive-dense multivariate work.

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "offsetal/rational.hpp"

namespace offsetal {

// Ring<C> supplies the coefficient operations the generic kernels need.
// divexact must be exact (quotient in the ring) or throw.
template <class C>
struct Ring;

template <>
struct Ring<Int> {
  static Int zero() { return Int(0); }
  static Int one() { return Int(1); }
  static bool is_zero(const Int& a) { return sgn(a) == 0; }
  static Int add(const Int& a, const Int& b) { return a + b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int neg(const Int& a) { return -a; }
  static Int divexact(const Int& a, const Int& b) { return int_divexact(a, b); }
  static bool eq(const Int& a, const Int& b) { return a == b; }
};

template <>
struct Ring<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static Rational add(const Rational& a, const Rational& b) { return a + b; }
  static Rational sub(const Rational& a, const Rational& b) { return a - b; }
  static Rational mul(const Rational& a, const Rational& b) { return a * b; }
  static Rational neg(const Rational& a) { return -a; }
  static Rational divexact(const Rational& a, const Rational& b) { return a / b; }
  static bool eq(const Rational& a, const Rational& b) { return a == b; }
};

template <class C>
C ring_pow(const C& a, int e) {
  assert(e >= 0);
  C r = Ring<C>::one();
  for (int i = 0; i < e; ++i) r = Ring<C>::mul(r, a);
  return r;
}

template <class C>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const C& c) {
    if (!Ring<C>::is_zero(c)) c_.push_back(c);
  }
  explicit UniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(const C& c, int k) {
    UniPoly p;
    if (Ring<C>::is_zero(c)) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, Ring<C>::zero());
    p.c_.back() = c;
    return p;
  }
  static UniPoly variable() { return monomial(Ring<C>::one(), 1); }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const C& lc() const {
    if (is_zero()) throw std::domain_error("UniPoly: lc of zero");
    return c_.back();
  }
  const C& coeff(int k) const {
    static const C kZero = Ring<C>::zero();
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
  }
  const std::vector<C>& coeffs() const { return c_; }

  void set_coeff(int k, C v) {  // by value: v may alias into this->c_
    assert(k >= 0);
    if (k >= static_cast<int>(c_.size())) {
      if (Ring<C>::is_zero(v)) return;
      c_.resize(static_cast<size_t>(k) + 1, Ring<C>::zero());
    }
    c_[static_cast<size_t>(k)] = std::move(v);
    trim();
  }

  bool is_constant() const { return degree() <= 0; }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = Ring<C>::neg(x);
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Ring<C>::zero());
    for (size_t i = 0; i < r.c_.size(); ++i) {
      if (i < a.c_.size()) r.c_[i] = Ring<C>::add(r.c_[i], a.c_[i]);
      if (i < b.c_.size()) r.c_[i] = Ring<C>::add(r.c_[i], b.c_[i]);
    }
    r.trim();
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Ring<C>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (Ring<C>::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (Ring<C>::is_zero(b.c_[j])) continue;
        r.c_[i + j] = Ring<C>::add(r.c_[i + j], Ring<C>::mul(a.c_[i], b.c_[j]));
      }
    }
    r.trim();
    return r;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!Ring<C>::eq(a.c_[i], b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly scaled(const C& s) const {
    if (Ring<C>::is_zero(s)) return UniPoly();
    UniPoly r = *this;
    for (auto& x : r.c_) x = Ring<C>::mul(x, s);
    r.trim();  // zero divisors don't occur in our integral domains, but stay safe
    return r;
  }

  UniPoly shifted(int k) const {  // multiply by var^k
    if (is_zero() || k == 0) return *this;
    UniPoly r;
    r.c_.assign(c_.size() + static_cast<size_t>(k), Ring<C>::zero());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
    return r;
  }

  UniPoly derivative() const {
    UniPoly r;
    if (degree() < 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
      C k = Ring<C>::zero();
      for (size_t j = 0; j < i; ++j) k = Ring<C>::add(k, c_[i]);  // i * c_[i]
      r.c_[i - 1] = k;
    }
    r.trim();
    return r;
  }

  // Horner evaluation at a coefficient-ring element.
  C eval(const C& x) const {
    C acc = Ring<C>::zero();
    for (size_t i = c_.size(); i-- > 0;) acc = Ring<C>::add(Ring<C>::mul(acc, x), c_[i]);
    return acc;
  }

  UniPoly pow(int e) const {
    assert(e >= 0);
    UniPoly r(Ring<C>::one());
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  void drop_leading() {
    if (!c_.empty()) {
      c_.pop_back();
      trim();
    }
  }

 private:
  void trim() {
    while (!c_.empty() && Ring<C>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

// A UniPoly over a ring is itself a ring (recursive dense representation).
template <class C>
struct Ring<UniPoly<C>> {
  using P = UniPoly<C>;
  static P zero() { return P(); }
  static P one() { return P(Ring<C>::one()); }
  static bool is_zero(const P& a) { return a.is_zero(); }
  static P add(const P& a, const P& b) { return a + b; }
  static P sub(const P& a, const P& b) { return a - b; }
  static P mul(const P& a, const P& b) { return a * b; }
  static P neg(const P& a) { return -a; }
  static P divexact(const P& a, const P& b);
  static bool eq(const P& a, const P& b) { return a == b; }
};

// Long division assuming exactness; throws if any step fails to divide.
template <class C>
bool try_divide(const UniPoly<C>& a, const UniPoly<C>& b, UniPoly<C>* q_out) {
  if (b.is_zero()) return false;
  UniPoly<C> q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    C t;
    try {
      t = Ring<C>::divexact(r.lc(), b.lc());
    } catch (const std::exception&) {
      return false;
    }
    if (!Ring<C>::eq(Ring<C>::mul(t, b.lc()), r.lc())) return false;
    int k = r.degree() - b.degree();
    UniPoly<C> tb = b.scaled(t).shifted(k);
    q = q + UniPoly<C>::monomial(t, k);
    r = r - tb;
    if (!r.is_zero() && r.degree() >= k + b.degree()) return false;  // no progress
  }
  if (!r.is_zero()) return false;
  if (q_out) *q_out = q;
  return true;
}

template <class C>
UniPoly<C> divexact_poly(const UniPoly<C>& a, const UniPoly<C>& b) {
  UniPoly<C> q;
  if (!try_divide(a, b, &q)) throw std::domain_error("divexact_poly: not divisible");
  return q;
}

template <class C>
UniPoly<C> Ring<UniPoly<C>>::divexact(const P& a, const P& b) {
  return divexact_poly(a, b);
}

template <class C>
UniPoly<C> divexact_scalar(const UniPoly<C>& a, const C& s) {
  UniPoly<C> r = a;
  std::vector<C> cs(r.coeffs());
  for (auto& x : cs) x = Ring<C>::divexact(x, s);
  return UniPoly<C>(std::move(cs));
}

// Pseudo-remainder: returns R with lc(B)^(deg A - deg B + 1) * A = Q*B + R,
// deg R < deg B. Remaining multiplier powers are applied even when the degree
// drops by more than one per step.
template <class C>
UniPoly<C> pseudo_rem(const UniPoly<C>& a, const UniPoly<C>& b) {
  assert(!b.is_zero());
  assert(a.degree() >= b.degree());
  const C& lb = b.lc();
  UniPoly<C> btail = b;
  btail.drop_leading();
  UniPoly<C> r = a;
  int n = a.degree() - b.degree() + 1;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    C lr = r.lc();
    int k = r.degree() - b.degree();
    r.drop_leading();
    r = r.scaled(lb) - btail.scaled(lr).shifted(k);
    --n;
  }
  if (n > 0 && !r.is_zero()) r = r.scaled(ring_pow(lb, n));
  return r;
}

// Resultant by the subresultant PRS (Ducos/Cohen bookkeeping, no content
// extraction so it works over any ring with exact division). Returns the exact
// Sylvester determinant, sign included. Res of two nonzero constants is 1;
// Res(A, const c) = c^deg A.
template <class C>
C resultant_subresultant(UniPoly<C> a, UniPoly<C> b) {
  using R = Ring<C>;
  if (a.is_zero() || b.is_zero()) return R::zero();
  int sign = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) return ring_pow(b.lc(), a.degree());
  C g = R::one(), h = R::one();
  while (true) {
    int da = a.degree(), db = b.degree();
    int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    UniPoly<C> rem = pseudo_rem(a, b);
    a = std::move(b);
    C denom = R::mul(g, ring_pow(h, delta));
    b = divexact_scalar(rem, denom);
    g = a.lc();
    if (delta > 0) h = R::divexact(ring_pow(g, delta), ring_pow(h, delta - 1));
    if (b.is_zero()) return R::zero();
    if (b.degree() == 0) {
      int dA = a.degree();
      C num = ring_pow(b.lc(), dA);
      C res = dA <= 1 ? num : R::divexact(num, ring_pow(h, dA - 1));
      return sign < 0 ? R::neg(res) : res;
    }
  }
}

}  // namespace offsetal
