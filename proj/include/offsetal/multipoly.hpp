#pragma once

// Sparse exact polynomials in Q[x,y], ordered by graded lexicographic order with
// x > y, highest term first. The leading term in that order drives canonical
// normalization (primitive integer coefficients, positive leading coefficient)
// and the printed form.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "offsetal/rational.hpp"
#include "offsetal/unipoly.hpp"

namespace offsetal {

struct Exp2 {
  int dx = 0, dy = 0;
  int total() const { return dx + dy; }
  friend bool operator==(const Exp2& a, const Exp2& b) {
    return a.dx == b.dx && a.dy == b.dy;
  }
};

// Graded lex with x > y, descending: map.begin() is the leading term.
struct GradedLexDesc {
  bool operator()(const Exp2& a, const Exp2& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    if (a.dx != b.dx) return a.dx > b.dx;
    return a.dy > b.dy;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Exp2, Rational, GradedLexDesc>;

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c) {
    if (!c.is_zero()) t_[{0, 0}] = c;
  }
  static MultiPoly term(const Rational& c, int dx, int dy) {
    MultiPoly p;
    if (!c.is_zero()) {
      if (dx < 0 || dy < 0) throw std::invalid_argument("MultiPoly: negative exponent");
      p.t_[{dx, dy}] = c;
    }
    return p;
  }
  static MultiPoly x() { return term(Rational(1), 1, 0); }
  static MultiPoly y() { return term(Rational(1), 0, 1); }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp2{0, 0});
  }
  Rational constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw std::domain_error("MultiPoly: not a constant");
    return t_.begin()->second;
  }

  int total_degree() const {  // -1 for zero
    return t_.empty() ? -1 : t_.begin()->first.total();
  }
  int degree_x() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.dx);
    return d;
  }
  int degree_y() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.dy);
    return d;
  }

  const TermMap& terms() const { return t_; }
  size_t term_count() const { return t_.size(); }

  Exp2 leading_exponent() const {
    if (is_zero()) throw std::domain_error("MultiPoly: leading term of zero");
    return t_.begin()->first;
  }
  Rational leading_coeff() const {
    if (is_zero()) throw std::domain_error("MultiPoly: leading coeff of zero");
    return t_.begin()->second;
  }
  Rational coeff(int dx, int dy) const {
    auto it = t_.find({dx, dy});
    return it == t_.end() ? Rational(0) : it->second;
  }

  void add_term(const Rational& c, int dx, int dy) {
    if (c.is_zero()) return;
    Exp2 e{dx, dy};
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(c, e.dx, e.dy);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(-c, e.dx, e.dy);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) r.add_term(ca * cb, ea.dx + eb.dx, ea.dy + eb.dy);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a.t_ == b.t_); }

  MultiPoly scaled(const Rational& s) const {
    if (s.is_zero()) return MultiPoly();
    MultiPoly r = *this;
    for (auto& [e, c] : r.t_) c = c * s;
    return r;
  }

  MultiPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly: negative power");
    MultiPoly r(Rational(1));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  MultiPoly derivative_x() const {
    MultiPoly r;
    for (const auto& [e, c] : t_)
      if (e.dx > 0) r.add_term(c * Rational(e.dx), e.dx - 1, e.dy);
    return r;
  }
  MultiPoly derivative_y() const {
    MultiPoly r;
    for (const auto& [e, c] : t_)
      if (e.dy > 0) r.add_term(c * Rational(e.dy), e.dx, e.dy - 1);
    return r;
  }

  Rational eval(const Rational& xv, const Rational& yv) const {
    // powers cached; term count stays small enough that this is not a hot path
    int dx = std::max(degree_x(), 0), dy = std::max(degree_y(), 0);
    std::vector<Rational> px(static_cast<size_t>(dx) + 1, Rational(1));
    std::vector<Rational> py(static_cast<size_t>(dy) + 1, Rational(1));
    for (int i = 1; i <= dx; ++i) px[static_cast<size_t>(i)] = px[static_cast<size_t>(i - 1)] * xv;
    for (int i = 1; i <= dy; ++i) py[static_cast<size_t>(i)] = py[static_cast<size_t>(i - 1)] * yv;
    Rational acc(0);
    for (const auto& [e, c] : t_)
      acc += c * px[static_cast<size_t>(e.dx)] * py[static_cast<size_t>(e.dy)];
    return acc;
  }

  // substitute y := value, leaving a univariate polynomial in x
  UniPoly<Rational> eval_y(const Rational& yv) const {
    int dy = std::max(degree_y(), 0);
    std::vector<Rational> py(static_cast<size_t>(dy) + 1, Rational(1));
    for (int i = 1; i <= dy; ++i) py[static_cast<size_t>(i)] = py[static_cast<size_t>(i - 1)] * yv;
    UniPoly<Rational> r;
    for (const auto& [e, c] : t_) {
      Rational v = c * py[static_cast<size_t>(e.dy)];
      r.set_coeff(e.dx, r.coeff(e.dx) + v);
    }
    return r;
  }
  UniPoly<Rational> eval_x(const Rational& xv) const {
    int dx = std::max(degree_x(), 0);
    std::vector<Rational> px(static_cast<size_t>(dx) + 1, Rational(1));
    for (int i = 1; i <= dx; ++i) px[static_cast<size_t>(i)] = px[static_cast<size_t>(i - 1)] * xv;
    UniPoly<Rational> r;
    for (const auto& [e, c] : t_) {
      Rational v = c * px[static_cast<size_t>(e.dx)];
      r.set_coeff(e.dy, r.coeff(e.dy) + v);
    }
    return r;
  }

  // View as a polynomial in x with coefficients in Q[y].
  std::vector<UniPoly<Rational>> coeffs_in_x() const {
    std::vector<UniPoly<Rational>> cs(static_cast<size_t>(std::max(degree_x(), 0)) + 1);
    for (const auto& [e, c] : t_) {
      auto& p = cs[static_cast<size_t>(e.dx)];
      p.set_coeff(e.dy, p.coeff(e.dy) + c);
    }
    return cs;
  }

  static MultiPoly from_coeffs_in_x(const std::vector<UniPoly<Rational>>& cs) {
    MultiPoly r;
    for (size_t i = 0; i < cs.size(); ++i)
      for (int j = 0; j <= cs[i].degree(); ++j)
        r.add_term(cs[i].coeff(j), static_cast<int>(i), j);
    return r;
  }

 private:
  TermMap t_;
};

template <>
struct Ring<MultiPoly> {
  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly one() { return MultiPoly(Rational(1)); }
  static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
  static MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
  static MultiPoly sub(const MultiPoly& a, const MultiPoly& b) { return a - b; }
  static MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
  static MultiPoly neg(const MultiPoly& a) { return -a; }
  static MultiPoly divexact(const MultiPoly& a, const MultiPoly& b);
  static bool eq(const MultiPoly& a, const MultiPoly& b) { return a == b; }
};

// Sparse long division by leading terms (graded lex). Exact or reports failure.
inline bool try_divide_mp(const MultiPoly& a, const MultiPoly& b, MultiPoly* q_out) {
  if (b.is_zero()) return false;
  MultiPoly q, r = a;
  Exp2 eb = b.leading_exponent();
  Rational cb = b.leading_coeff();
  while (!r.is_zero()) {
    Exp2 er = r.leading_exponent();
    if (er.dx < eb.dx || er.dy < eb.dy) return false;
    Rational ct = r.leading_coeff() / cb;
    MultiPoly t = MultiPoly::term(ct, er.dx - eb.dx, er.dy - eb.dy);
    q = q + t;
    r = r - t * b;
  }
  if (q_out) *q_out = q;
  return true;
}

inline MultiPoly divexact_mp(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly q;
  if (!try_divide_mp(a, b, &q)) throw std::domain_error("divexact_mp: not divisible");
  return q;
}

inline MultiPoly Ring<MultiPoly>::divexact(const MultiPoly& a, const MultiPoly& b) {
  return divexact_mp(a, b);
}

// t-direction polynomials: dense in t over Q[x,y].
using TPoly = UniPoly<MultiPoly>;

inline TPoly tpoly_from_qp(const UniPoly<Rational>& p) {
  TPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.set_coeff(i, MultiPoly(p.coeff(i)));
  return r;
}

// multiply a TPoly by a scalar t-polynomial (rational coefficients)
inline TPoly tpoly_mul_qp(const TPoly& p, const UniPoly<Rational>& s) {
  return p * tpoly_from_qp(s);
}

}  // namespace offsetal
