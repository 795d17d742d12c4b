#pragma once

// Exact polynomial kernels over Z, Q, Q[y] and Q[x,y]:
// gcds, squarefree decomposition, t-contents, resultants, composition,
// and canonical normalization of bivariate polynomials.

#include <string>
#include <vector>

#include "offsetal/multipoly.hpp"
#include "offsetal/rational.hpp"
#include "offsetal/unipoly.hpp"

namespace offsetal {

using ZPoly = UniPoly<Int>;
using QPoly = UniPoly<Rational>;
using ZZ2Poly = UniPoly<ZPoly>;  // Z[y][x]: dense in x, coefficients in Z[y]

// ---------- univariate helpers ----------

// gcd of coefficients, signed so the primitive part has a positive leading
// coefficient; p == content * primitive exactly
Int zpoly_content(const ZPoly& p);
ZPoly zpoly_primitive_part(const ZPoly& p);
ZPoly zpoly_from_qp(const QPoly& p, Int* denom);    // clear denominators (lcm)
QPoly qpoly_from_zp(const ZPoly& p);

// gcd in Z[x] (primitive, lc > 0); gcd(0,0) = 0
ZPoly gcd_zp(const ZPoly& a, const ZPoly& b);
// gcd in Q[x], normalized monic; gcd(0,0) = 0
QPoly gcd_qp(const QPoly& a, const QPoly& b);

// squarefree part p / gcd(p, p') for nonzero p, monic-normalized
QPoly squarefree_part_qp(const QPoly& p);

struct QPolyFactorPower {
  QPoly factor;  // monic
  int multiplicity = 0;
};
struct QPolySquarefree {
  Rational constant;  // p == constant * prod factor^multiplicity
  std::vector<QPolyFactorPower> parts;
};
QPolySquarefree yun_squarefree_qp(const QPoly& p);

// resultant over Q via integer subresultants (denominators cleared)
Rational resultant_q(const QPoly& a, const QPoly& b);

// p(q(x)) for rational polynomials
QPoly compose_qp(const QPoly& p, const QPoly& q);
// p(num/den) * den^deg(p), the numerator of p at a rational function
QPoly compose_qp_rational(const QPoly& p, const QPoly& num, const QPoly& den);

// Newton interpolation: value v_i at node x_i (distinct nodes), exact
QPoly interpolate_q(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

// ---------- bivariate Z[y][x] helpers ----------

ZPoly zz2_content(const ZZ2Poly& p);                // gcd over Z[y] of x-coefficients
ZZ2Poly zz2_primitive_part(const ZZ2Poly& p);
ZZ2Poly zz2_from_mp(const MultiPoly& p, Rational* scale);  // p == scale * result
MultiPoly mp_from_zz2(const ZZ2Poly& p);

// gcd in Z[y][x] for x-primitive inputs (interpolation with PRS fallback),
// result primitive with positive integer leading coefficient
ZZ2Poly gcd_zz2_primitive(const ZZ2Poly& a, const ZZ2Poly& b);

// ---------- Q[x,y] operations ----------

// gcd in Q[x,y]; result canonical (primitive integer coefficients, lc > 0)
MultiPoly gcd_mp(const MultiPoly& a, const MultiPoly& b);

// Canonical form: primitive integer coefficients with positive leading
// coefficient in graded lex (x > y). p == constant * canonical.
struct CanonicalMP {
  MultiPoly poly;
  Rational constant;
};
CanonicalMP canonicalize_mp(const MultiPoly& p);

struct MPFactorPower {
  MultiPoly factor;  // canonical
  int multiplicity = 0;
};
struct MPSquarefree {
  Rational constant;  // p == constant * prod factor^multiplicity
  std::vector<MPFactorPower> parts;  // ascending multiplicity
};
MPSquarefree yun_squarefree_mp(const MultiPoly& p);

// squarefree part of p in Q[x,y], canonical
MultiPoly squarefree_part_mp(const MultiPoly& p);

// ---------- t-direction operations ----------

// Content of p in the t-direction: the gcd over Q[t] of the coefficients of
// each (x,y)-monomial, with p == content * primitive (exactly).
struct TContentSplit {
  QPoly content;   // in Q[t]; positive-lc primitive integer poly times rational
  TPoly primitive;
};
TContentSplit content_wrt_t(const TPoly& p);

// Res_t(p, q) for p, q in Q[x,y][t], computed by evaluation at an integer grid
// and bidirectional Newton interpolation. Exact.
MultiPoly resultant_t(const TPoly& p, const TPoly& q);

// substitute numeric t into a TPoly
MultiPoly tpoly_eval(const TPoly& p, const Rational& t);

}  // namespace offsetal
