#include "offsetal/curve.hpp"

#include <string>
#include <utility>

namespace offsetal {

namespace {

// Reduce p/q, then scale both by 1/lc(q) so the denominator is monic.
void reduce_component(QPoly* p, QPoly* q, const char* which) {
  if (q->is_zero()) {
    throw std::invalid_argument(std::string("zero denominator in the ") +
                                which + " component");
  }
  QPoly g = gcd_qp(*p, *q);
  if (g.degree() > 0) {
    *p = divexact_poly(*p, g);
    *q = divexact_poly(*q, g);
  }
  Rational inv_lc = q->lc().inverse();
  *p = p->scaled(inv_lc);
  *q = q->scaled(inv_lc);
}

// Deterministic rational sample points 0, 1, -1, 2, -2, ...
Rational sample_value(int k) {
  long half = (k + 1) / 2;
  return Rational(k % 2 == 1 ? half : -half);
}

// a(t) * b(s) laid out as a polynomial in (t, s) -> (x, y).
MultiPoly cross_product_poly(const QPoly& a, const QPoly& b) {
  MultiPoly r;
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      if (b.coeff(j).is_zero()) continue;
      r.add_term(a.coeff(i) * b.coeff(j), i, j);
    }
  }
  return r;
}

}  // namespace

RationalParametrization::RationalParametrization(QPoly p1, QPoly q1, QPoly p2,
                                                QPoly q2)
    : p1_(std::move(p1)),
      q1_(std::move(q1)),
      p2_(std::move(p2)),
      q2_(std::move(q2)) {
  reduce_component(&p1_, &q1_, "first");
  reduce_component(&p2_, &q2_, "second");
}

NormalizedParametrization normalize(const RationalParametrization& rp) {
  // W = lcm(q1, q2); the components scale up by the complementary factors.
  QPoly d = gcd_qp(rp.q1(), rp.q2());
  QPoly m1 = divexact_poly(rp.q2(), d);  // W / q1
  QPoly m2 = divexact_poly(rp.q1(), d);  // W / q2
  QPoly W = rp.q1() * m1;
  QPoly X = rp.p1() * m1;
  QPoly Y = rp.p2() * m2;

  // Reduced component fractions leave gcd(X, Y, W) = 1 already; keep the
  // guard so the invariant holds for any caller-constructed data.
  QPoly g = gcd_qp(gcd_qp(X, Y), W);
  if (g.degree() > 0) {
    X = divexact_poly(X, g);
    Y = divexact_poly(Y, g);
    W = divexact_poly(W, g);
  }

  // Joint scaling: integer coefficients, overall content 1, lc(W) > 0.
  Int denom_lcm(1);
  auto fold_denominators = [&denom_lcm](const QPoly& p) {
    for (int i = 0; i <= p.degree(); ++i) {
      denom_lcm = int_lcm(denom_lcm, p.coeff(i).den());
    }
  };
  fold_denominators(X);
  fold_denominators(Y);
  fold_denominators(W);
  Int numer_gcd(0);
  auto fold_numerators = [&denom_lcm, &numer_gcd](const QPoly& p) {
    for (int i = 0; i <= p.degree(); ++i) {
      numer_gcd = int_gcd(numer_gcd, (p.coeff(i) * Rational(denom_lcm)).num());
    }
  };
  fold_numerators(X);
  fold_numerators(Y);
  fold_numerators(W);
  Rational rho(denom_lcm, numer_gcd);  // numer_gcd > 0: W is nonzero
  if (W.lc().sign() < 0) rho = -rho;
  return NormalizedParametrization{X.scaled(rho), Y.scaled(rho),
                                   W.scaled(rho)};
}

Hodograph hodograph(const NormalizedParametrization& np) {
  QPoly U = np.X.derivative() * np.W - np.X * np.W.derivative();
  QPoly V = np.Y.derivative() * np.W - np.Y * np.W.derivative();
  if (U.is_zero() && V.is_zero()) {
    throw DegenerateCurveError(
        "parametrization is constant: both component derivatives vanish");
  }
  return Hodograph{U, V, U * U + V * V};
}

ImplicitCurve implicitize(const NormalizedParametrization& np) {
  int deg_a = std::max(np.W.degree(), np.X.degree());
  int deg_b = std::max(np.W.degree(), np.Y.degree());
  if (deg_a <= 0 && deg_b <= 0) {
    throw DegenerateCurveError(
        "parametrization is constant: nothing to eliminate");
  }

  // W(t)x - X(t) and W(t)y - Y(t) as polynomials in t over Q[x,y].
  TPoly a, b;
  for (int k = 0; k <= deg_a; ++k) {
    MultiPoly c;
    c.add_term(np.W.coeff(k), 1, 0);
    c.add_term(-np.X.coeff(k), 0, 0);
    a.set_coeff(k, c);
  }
  for (int k = 0; k <= deg_b; ++k) {
    MultiPoly c;
    c.add_term(np.W.coeff(k), 0, 1);
    c.add_term(-np.Y.coeff(k), 0, 0);
    b.set_coeff(k, c);
  }

  MultiPoly res = resultant_t(a, b);
  if (res.is_zero()) {
    throw InternalInconsistencyError(
        "elimination resultant vanished for a reduced parametrization");
  }
  MPSquarefree sf = yun_squarefree_mp(res);
  if (sf.parts.size() != 1) {
    throw InternalInconsistencyError(
        "elimination resultant is not a power of a single squarefree "
        "equation");
  }

  ImplicitCurve ic;
  ic.f = sf.parts[0].factor;
  ic.tracing_index = sf.parts[0].multiplicity;
  ic.constant = sf.constant;

  // The implicit equation must vanish wherever the parametrization lands.
  int verified = 0;
  for (int k = 0; verified < 3 && k < 100; ++k) {
    Rational t = sample_value(k);
    Rational wt = np.W.eval(t);
    if (wt.is_zero()) continue;
    Rational xt = np.X.eval(t) / wt;
    Rational yt = np.Y.eval(t) / wt;
    if (!ic.f.eval(xt, yt).is_zero()) {
      throw InternalInconsistencyError(
          "implicit equation does not vanish on the curve");
    }
    ++verified;
  }
  return ic;
}

ImplicitCurve implicitize(const RationalParametrization& rp) {
  return implicitize(normalize(rp));
}

int tracing_index_by_parameter_pairing(const NormalizedParametrization& np) {
  // X(t)W(s) - X(s)W(t) and its Y sibling, in (t, s) -> (x, y) layout.
  MultiPoly a =
      cross_product_poly(np.X, np.W) - cross_product_poly(np.W, np.X);
  MultiPoly b =
      cross_product_poly(np.Y, np.W) - cross_product_poly(np.W, np.Y);
  if (a.is_zero() && b.is_zero()) {
    throw DegenerateCurveError(
        "parametrization is constant: parameter pairing undefined");
  }
  return gcd_mp(a, b).degree_y();
}

int tracing_index(const RationalParametrization& rp) {
  NormalizedParametrization np = normalize(rp);
  ImplicitCurve ic = implicitize(np);
  int pairing = tracing_index_by_parameter_pairing(np);
  if (pairing != ic.tracing_index) {
    throw InternalInconsistencyError(
        "tracing index mismatch: resultant exponent " +
        std::to_string(ic.tracing_index) + " vs parameter pairing " +
        std::to_string(pairing));
  }
  return ic.tracing_index;
}

const char* curve_rejection_label(CurveRejectionKind k) {
  switch (k) {
    case CurveRejectionKind::Line:
      return "LineRejected";
    case CurveRejectionKind::Circle:
      return "CircleRejected";
    case CurveRejectionKind::Degenerate:
      return "DegenerateRejected";
  }
  return "UnknownRejection";
}

ValidationResult validate_curve(const RationalParametrization& rp) {
  NormalizedParametrization np = normalize(rp);
  Hodograph hg;
  try {
    hg = hodograph(np);
  } catch (const DegenerateCurveError&) {
    return CurveRejection{CurveRejectionKind::Degenerate, MultiPoly()};
  }

  ImplicitCurve ic = implicitize(np);
  int pairing = tracing_index_by_parameter_pairing(np);
  if (pairing != ic.tracing_index) {
    throw InternalInconsistencyError(
        "tracing index mismatch: resultant exponent " +
        std::to_string(ic.tracing_index) + " vs parameter pairing " +
        std::to_string(pairing));
  }

  if (ic.f.total_degree() == 1) {
    return CurveRejection{CurveRejectionKind::Line, ic.f};
  }
  if (ic.f.total_degree() == 2) {
    // Circles: a(x^2 + y^2) + bx + cy + e with a != 0.
    Rational cxx = ic.f.coeff(2, 0);
    Rational cyy = ic.f.coeff(0, 2);
    Rational cxy = ic.f.coeff(1, 1);
    if (!cxx.is_zero() && cxx == cyy && cxy.is_zero()) {
      return CurveRejection{CurveRejectionKind::Circle, ic.f};
    }
  }
  return ValidatedCurve{rp, np, hg, ic};
}

RationalParametrization reparametrize(const RationalParametrization& rp,
                                      const QPoly& subst_num,
                                      const QPoly& subst_den) {
  if (subst_den.is_zero()) {
    throw std::invalid_argument("substitution denominator is zero");
  }
  // num/den is constant iff the numerator of its derivative vanishes.
  QPoly wronskian =
      subst_num.derivative() * subst_den - subst_num * subst_den.derivative();
  if (wronskian.is_zero()) {
    throw std::invalid_argument("substitution must be nonconstant");
  }

  auto compose_fraction = [&](const QPoly& p, const QPoly& q) {
    QPoly np = compose_qp_rational(p, subst_num, subst_den);
    QPoly nq = compose_qp_rational(q, subst_num, subst_den);
    // Match the den^deg clearing factors of the two compositions.
    int dp = std::max(p.degree(), 0);
    int dq = std::max(q.degree(), 0);
    if (dq > dp) np = np * subst_den.pow(dq - dp);
    if (dp > dq) nq = nq * subst_den.pow(dp - dq);
    return std::make_pair(np, nq);
  };
  auto [np1, nq1] = compose_fraction(rp.p1(), rp.q1());
  auto [np2, nq2] = compose_fraction(rp.p2(), rp.q2());
  return RationalParametrization(np1, nq1, np2, nq2);
}

}  // namespace offsetal
