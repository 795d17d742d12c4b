#pragma once

// Gaussian rationals Q(i), used for the isotropic-direction computations:
// circular-point tangents and isotropic-line content both live naturally in the
// coordinates u = x + iy, v = x - iy.

#include <stdexcept>
#include <string>

#include "offsetal/rational.hpp"
#include "offsetal/unipoly.hpp"

namespace offsetal {

struct GaussQ {
  Rational re, im;

  GaussQ() = default;
  GaussQ(Rational r) : re(std::move(r)) {}  // NOLINT
  GaussQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  static GaussQ i() { return GaussQ(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussQ conj() const { return GaussQ(re, -im); }
  Rational norm() const { return re * re + im * im; }

  GaussQ operator-() const { return GaussQ(-re, -im); }
  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) {
    return GaussQ(a.re + b.re, a.im + b.im);
  }
  friend GaussQ operator-(const GaussQ& a, const GaussQ& b) {
    return GaussQ(a.re - b.re, a.im - b.im);
  }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return GaussQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  GaussQ inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("GaussQ: inverse of zero");
    return GaussQ(re / n, -im / n);
  }
  friend GaussQ operator/(const GaussQ& a, const GaussQ& b) { return a * b.inverse(); }
  friend bool operator==(const GaussQ& a, const GaussQ& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }
};

template <>
struct Ring<GaussQ> {
  static GaussQ zero() { return GaussQ(); }
  static GaussQ one() { return GaussQ(Rational(1)); }
  static bool is_zero(const GaussQ& a) { return a.is_zero(); }
  static GaussQ add(const GaussQ& a, const GaussQ& b) { return a + b; }
  static GaussQ sub(const GaussQ& a, const GaussQ& b) { return a - b; }
  static GaussQ mul(const GaussQ& a, const GaussQ& b) { return a * b; }
  static GaussQ neg(const GaussQ& a) { return -a; }
  static GaussQ divexact(const GaussQ& a, const GaussQ& b) { return a / b; }
  static bool eq(const GaussQ& a, const GaussQ& b) { return a == b; }
};

using GPoly = UniPoly<GaussQ>;

inline GPoly gpoly_conj(const GPoly& p) {
  std::vector<GaussQ> cs(p.coeffs());
  for (auto& c : cs) c = c.conj();
  return GPoly(std::move(cs));
}

inline GPoly gpoly_monic(const GPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.lc().inverse());
}

// Euclidean gcd over the field Q(i); result is monic (or zero).
inline GPoly gpoly_gcd(GPoly a, GPoly b) {
  while (!b.is_zero()) {
    // remainder of a by b
    GPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      GaussQ t = r.lc() / b.lc();
      r = r - b.scaled(t).shifted(r.degree() - b.degree());
    }
    a = std::move(b);
    b = std::move(r);
  }
  return gpoly_monic(a);
}

inline GPoly gpoly_divexact(const GPoly& a, const GPoly& b) { return divexact_poly(a, b); }

// Squarefree part over Q(i) (char 0): p / gcd(p, p').
inline GPoly gpoly_squarefree_part(const GPoly& p) {
  if (p.degree() <= 1) return gpoly_monic(p);
  GPoly g = gpoly_gcd(p, p.derivative());
  if (g.degree() == 0) return gpoly_monic(p);
  return gpoly_monic(gpoly_divexact(p, g));
}

}  // namespace offsetal
