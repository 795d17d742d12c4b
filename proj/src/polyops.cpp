#include "offsetal/polyops.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <utility>

namespace offsetal {

namespace {

// deterministic evaluation points 0, 1, -1, 2, -2, ...
Int eval_point(int k) {
  if (k == 0) return Int(0);
  long half = (k + 1) / 2;
  return (k % 2 == 1) ? Int(half) : Int(-half);
}

QPoly qpoly_monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.lc().inverse());
}

MultiPoly mp_from_qpoly_y(const QPoly& p) {
  MultiPoly r;
  for (int j = 0; j <= p.degree(); ++j) r.add_term(p.coeff(j), 0, j);
  return r;
}

// content of p viewed in x over Q[y]: monic gcd of the x-coefficients
QPoly mp_content_x(const MultiPoly& p) {
  QPoly g;
  for (const auto& c : p.coeffs_in_x()) g = gcd_qp(g, c);
  return g;
}

MultiPoly mp_divide_content_x(const MultiPoly& p, const QPoly& ct) {
  auto cs = p.coeffs_in_x();
  for (auto& c : cs)
    if (!c.is_zero()) c = divexact_poly(c, ct);
  return MultiPoly::from_coeffs_in_x(cs);
}

}  // namespace

// ---------- univariate helpers ----------

Int zpoly_content(const ZPoly& p) {
  if (p.is_zero()) return Int(0);
  Int g(0);
  for (const auto& c : p.coeffs()) g = int_gcd(g, c);
  if (sgn(p.lc()) < 0) g = -g;
  return g;
}

ZPoly zpoly_primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  return divexact_scalar(p, zpoly_content(p));
}

ZPoly zpoly_from_qp(const QPoly& p, Int* denom) {
  Int l(1);
  for (const auto& c : p.coeffs()) l = int_lcm(l, c.den());
  std::vector<Int> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.push_back(c.num() * int_divexact(l, c.den()));
  if (denom) *denom = l;
  return ZPoly(std::move(cs));
}

QPoly qpoly_from_zp(const ZPoly& p) {
  std::vector<Rational> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.emplace_back(c);
  return QPoly(std::move(cs));
}

ZPoly gcd_zp(const ZPoly& a, const ZPoly& b) {
  auto sign_norm = [](const ZPoly& p) {
    return (!p.is_zero() && sgn(p.lc()) < 0) ? -p : p;
  };
  if (a.is_zero()) return sign_norm(b);
  if (b.is_zero()) return sign_norm(a);
  Int cg = int_gcd(zpoly_content(a), zpoly_content(b));
  ZPoly pa = zpoly_primitive_part(a), pb = zpoly_primitive_part(b);
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    ZPoly r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    pb = zpoly_primitive_part(r);
  }
  return pa.scaled(cg);
}

QPoly gcd_qp(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return qpoly_monic(b);
  if (b.is_zero()) return qpoly_monic(a);
  ZPoly za = zpoly_from_qp(a, nullptr), zb = zpoly_from_qp(b, nullptr);
  return qpoly_monic(qpoly_from_zp(gcd_zp(za, zb)));
}

QPoly squarefree_part_qp(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part_qp: zero polynomial");
  if (p.degree() == 0) return QPoly(Rational(1));
  QPoly g = gcd_qp(p, p.derivative());
  if (g.degree() == 0) return qpoly_monic(p);
  return qpoly_monic(divexact_poly(p, g));
}

QPolySquarefree yun_squarefree_qp(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("yun_squarefree_qp: zero polynomial");
  QPolySquarefree out;
  out.constant = p.lc();
  if (p.degree() == 0) return out;
  QPoly pm = qpoly_monic(p);
  QPoly g = gcd_qp(pm, pm.derivative());
  QPoly b = divexact_poly(pm, g);
  QPoly c = divexact_poly(pm.derivative(), g);
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly f = gcd_qp(b, d);
    if (f.degree() > 0) out.parts.push_back({f, i});
    b = divexact_poly(b, f);
    c = divexact_poly(d, f);
    d = c - b.derivative();
    ++i;
  }
  QPoly prod(Rational(1));
  for (const auto& fp : out.parts) prod = prod * fp.factor.pow(fp.multiplicity);
  if (!(prod.scaled(out.constant) == p))
    throw std::logic_error("yun_squarefree_qp: reconstruction failed");
  return out;
}

Rational resultant_q(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  Int la, lb;
  ZPoly za = zpoly_from_qp(a, &la);
  ZPoly zb = zpoly_from_qp(b, &lb);
  Rational r(resultant_subresultant(za, zb));
  Rational sa(int_pow(la, static_cast<unsigned long>(b.degree())));
  Rational sb(int_pow(lb, static_cast<unsigned long>(a.degree())));
  return r / (sa * sb);
}

QPoly compose_qp(const QPoly& p, const QPoly& q) {
  QPoly r;
  for (int i = p.degree(); i >= 0; --i) r = r * q + QPoly(p.coeff(i));
  return r;
}

QPoly compose_qp_rational(const QPoly& p, const QPoly& num, const QPoly& den) {
  if (p.is_zero()) return QPoly();
  int n = p.degree();
  QPoly r(p.coeff(n));
  QPoly dpow(Rational(1));
  for (int i = n - 1; i >= 0; --i) {
    dpow = dpow * den;
    r = r * num + QPoly(p.coeff(i)) * dpow;
  }
  return r;
}

QPoly interpolate_q(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
  if (nodes.size() != values.size() || nodes.empty())
    throw std::invalid_argument("interpolate_q: bad node/value sizes");
  const size_t n = nodes.size();
  std::vector<Rational> c = values;  // divided differences, in place
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i)
      c[i] = (c[i] - c[i - 1]) / (nodes[i] - nodes[i - j]);
  QPoly r(c[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    QPoly lin;
    lin.set_coeff(1, Rational(1));
    lin.set_coeff(0, -nodes[i]);
    r = r * lin + QPoly(c[i]);
  }
  return r;
}

// ---------- bivariate Z[y][x] helpers ----------

ZPoly zz2_content(const ZZ2Poly& p) {
  ZPoly g;
  for (const auto& c : p.coeffs()) g = gcd_zp(g, c);
  return g;
}

ZZ2Poly zz2_primitive_part(const ZZ2Poly& p) {
  if (p.is_zero()) return p;
  ZPoly ct = zz2_content(p);
  std::vector<ZPoly> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) cs.push_back(c.is_zero() ? c : divexact_poly(c, ct));
  return ZZ2Poly(std::move(cs));
}

ZZ2Poly zz2_from_mp(const MultiPoly& p, Rational* scale) {
  if (p.is_zero()) {
    if (scale) *scale = Rational(0);
    return ZZ2Poly();
  }
  CanonicalMP c = canonicalize_mp(p);
  std::vector<ZPoly> cs(static_cast<size_t>(std::max(c.poly.degree_x(), 0)) + 1);
  for (const auto& [e, v] : c.poly.terms())
    cs[static_cast<size_t>(e.dx)].set_coeff(e.dy, v.num());
  if (scale) *scale = c.constant;
  return ZZ2Poly(std::move(cs));
}

MultiPoly mp_from_zz2(const ZZ2Poly& p) {
  MultiPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    const ZPoly c = p.coeff(i);
    for (int j = 0; j <= c.degree(); ++j) r.add_term(Rational(c.coeff(j)), i, j);
  }
  return r;
}

ZZ2Poly gcd_zz2_primitive(const ZZ2Poly& a, const ZZ2Poly& b) {
  auto sign_norm = [](ZZ2Poly p) {
    if (!p.is_zero() && sgn(p.lc().lc()) < 0) return -p;
    return p;
  };
  if (a.is_zero()) return sign_norm(b);
  if (b.is_zero()) return sign_norm(a);
  const ZZ2Poly one(ZPoly(Int(1)));
  if (a.degree() == 0 || b.degree() == 0) return one;

  const ZPoly la = a.lc(), lb = b.lc();
  ZPoly gamma = gcd_zp(la, lb);
  auto degy = [](const ZZ2Poly& p) {
    int d = 0;
    for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
    return d;
  };
  const int need = gamma.degree() + std::min(degy(a), degy(b)) + 1;
  const MultiPoly amp = mp_from_zz2(a), bmp = mp_from_zz2(b);

  // interpolate gamma-scaled monic gcd images over y, certify by division
  std::vector<Rational> nodes;
  std::vector<QPoly> images;
  int dmin = INT_MAX;
  const int budget = 20 * need + 400;
  for (int k = 0; k < budget; ++k) {
    Int y0 = eval_point(k);
    if (la.eval(y0) == 0 || lb.eval(y0) == 0) continue;
    auto at_y0 = [&](const ZZ2Poly& p) {
      std::vector<Int> cs;
      cs.reserve(p.coeffs().size());
      for (const auto& c : p.coeffs()) cs.push_back(c.eval(y0));
      return ZPoly(std::move(cs));
    };
    ZPoly ig = gcd_zp(at_y0(a), at_y0(b));
    int d = ig.degree();
    if (d == 0) return one;
    if (d > dmin) continue;  // image from an unlucky point
    if (d < dmin) {
      nodes.clear();
      images.clear();
      dmin = d;
    }
    QPoly qi = qpoly_from_zp(ig);
    qi = qi.scaled(Rational(gamma.eval(y0)) / qi.lc());
    nodes.push_back(Rational(y0));
    images.push_back(qi);
    if (static_cast<int>(nodes.size()) < need) continue;

    MultiPoly cand;
    for (int kx = 0; kx <= dmin; ++kx) {
      std::vector<Rational> vals;
      vals.reserve(images.size());
      for (const auto& im : images) vals.push_back(im.coeff(kx));
      QPoly cy = interpolate_q(nodes, vals);
      for (int j = 0; j <= cy.degree(); ++j) cand.add_term(cy.coeff(j), kx, j);
    }
    ZZ2Poly gz = zz2_primitive_part(zz2_from_mp(cand, nullptr));
    if (!gz.is_zero() && gz.degree() == dmin) {
      MultiPoly gmp = mp_from_zz2(gz);
      if (try_divide_mp(amp, gmp, nullptr) && try_divide_mp(bmp, gmp, nullptr))
        return sign_norm(gz);
    }
    // some collected point was unlucky: discard the window and keep scanning
    nodes.clear();
    images.clear();
    dmin = INT_MAX;
  }

  // fallback: pseudo-remainder sequence with primitive-part reduction
  ZZ2Poly pa = a, pb = b;
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    ZZ2Poly r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    pb = zz2_primitive_part(r);
  }
  pa = sign_norm(zz2_primitive_part(pa));
  MultiPoly gmp = mp_from_zz2(pa);
  if (try_divide_mp(amp, gmp, nullptr) && try_divide_mp(bmp, gmp, nullptr)) return pa;
  throw std::logic_error("gcd_zz2_primitive: certification failed");
}

// ---------- Q[x,y] operations ----------

MultiPoly gcd_mp(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && b.is_zero()) return MultiPoly();
  if (a.is_zero()) return canonicalize_mp(b).poly;
  if (b.is_zero()) return canonicalize_mp(a).poly;
  QPoly ca = mp_content_x(a), cb = mp_content_x(b);
  QPoly cg = gcd_qp(ca, cb);
  MultiPoly pa = mp_divide_content_x(a, ca), pb = mp_divide_content_x(b, cb);
  ZZ2Poly za = zz2_primitive_part(zz2_from_mp(pa, nullptr));
  ZZ2Poly zb = zz2_primitive_part(zz2_from_mp(pb, nullptr));
  MultiPoly g = mp_from_zz2(gcd_zz2_primitive(za, zb));
  return canonicalize_mp(g * mp_from_qpoly_y(cg)).poly;
}

CanonicalMP canonicalize_mp(const MultiPoly& p) {
  if (p.is_zero()) return {MultiPoly(), Rational(0)};
  Int l(1);
  for (const auto& [e, c] : p.terms()) l = int_lcm(l, c.den());
  Int g(0);
  for (const auto& [e, c] : p.terms()) g = int_gcd(g, c.num() * int_divexact(l, c.den()));
  Rational k(g, l);
  if (p.leading_coeff().sign() < 0) k = -k;
  return {p.scaled(k.inverse()), k};
}

MPSquarefree yun_squarefree_mp(const MultiPoly& p) {
  if (p.is_zero()) throw std::domain_error("yun_squarefree_mp: zero polynomial");
  std::map<int, MultiPoly> merged;  // multiplicity -> product of factors
  auto record = [&](const MultiPoly& f, int m) {
    CanonicalMP cf = canonicalize_mp(f);
    if (cf.poly.total_degree() <= 0) return;
    auto it = merged.find(m);
    if (it == merged.end())
      merged.emplace(m, cf.poly);
    else
      it->second = it->second * cf.poly;
  };

  // the factors free of x live in the x-direction content
  QPoly cx = mp_content_x(p);
  MultiPoly pp = mp_divide_content_x(p, cx);
  if (cx.degree() > 0) {
    QPolySquarefree sc = yun_squarefree_qp(cx);
    for (const auto& part : sc.parts) record(mp_from_qpoly_y(part.factor), part.multiplicity);
  }
  if (!pp.is_constant()) {
    // every remaining factor involves x, so the x-derivative drives Yun
    MultiPoly d1 = pp.derivative_x();
    MultiPoly g = gcd_mp(pp, d1);
    MultiPoly b = divexact_mp(pp, g);
    MultiPoly c = divexact_mp(d1, g);
    MultiPoly d = c - b.derivative_x();
    int i = 1;
    while (b.degree_x() > 0) {
      MultiPoly f = gcd_mp(b, d);
      record(f, i);
      b = divexact_mp(b, f);
      c = divexact_mp(d, f);
      d = c - b.derivative_x();
      ++i;
    }
  }

  MPSquarefree out;
  for (const auto& [m, f] : merged) out.parts.push_back({f, m});
  MultiPoly prod(Rational(1));
  for (const auto& fp : out.parts) prod = prod * fp.factor.pow(fp.multiplicity);
  out.constant = p.leading_coeff() / prod.leading_coeff();
  if (!(prod.scaled(out.constant) == p))
    throw std::logic_error("yun_squarefree_mp: reconstruction failed");
  return out;
}

MultiPoly squarefree_part_mp(const MultiPoly& p) {
  MPSquarefree d = yun_squarefree_mp(p);
  MultiPoly r(Rational(1));
  for (const auto& fp : d.parts) r = r * fp.factor;
  return canonicalize_mp(r).poly;
}

// ---------- t-direction operations ----------

TContentSplit content_wrt_t(const TPoly& p) {
  if (p.is_zero()) return {QPoly(Rational(1)), TPoly()};
  // collect the t-profile of every (x,y)-monomial
  std::map<Exp2, QPoly, GradedLexDesc> profiles;
  for (int k = 0; k <= p.degree(); ++k) {
    const MultiPoly& ck = p.coeff(k);
    for (const auto& [e, c] : ck.terms()) profiles[e].set_coeff(k, c);
  }
  QPoly g;
  for (const auto& [e, q] : profiles) g = gcd_qp(g, q);
  // primitive integer form of the monic gcd, then the shared rational scale
  QPoly gz = qpoly_from_zp(zpoly_primitive_part(zpoly_from_qp(g, nullptr)));
  Rational rho(0);
  std::map<Exp2, QPoly, GradedLexDesc> quots;
  for (const auto& [e, q] : profiles) {
    QPoly w = divexact_poly(q, gz);
    for (const auto& cc : w.coeffs()) rho = rational_gcd(rho, cc);
    quots.emplace(e, w);
  }
  TContentSplit out;
  out.content = gz.scaled(rho);
  std::vector<MultiPoly> pc(static_cast<size_t>(p.degree()) + 1);
  for (const auto& [e, w] : quots)
    for (int k = 0; k <= w.degree(); ++k) {
      Rational v = w.coeff(k) / rho;
      if (!v.is_zero()) pc[static_cast<size_t>(k)].add_term(v, e.dx, e.dy);
    }
  out.primitive = TPoly(std::move(pc));
  if (!(tpoly_mul_qp(out.primitive, out.content) == p))
    throw std::logic_error("content_wrt_t: split mismatch");
  return out;
}

MultiPoly resultant_t(const TPoly& p, const TPoly& q) {
  if (p.is_zero() || q.is_zero()) return MultiPoly();
  const int dp = p.degree(), dq = q.degree();
  if (dp == 0 && dq == 0) return MultiPoly(Rational(1));
  if (dp == 0) return p.coeff(0).pow(dq);
  if (dq == 0) return q.coeff(0).pow(dp);

  auto maxdeg = [](const TPoly& f, bool in_x) {
    int d = 0;
    for (int k = 0; k <= f.degree(); ++k) {
      MultiPoly c = f.coeff(k);
      if (!c.is_zero()) d = std::max(d, in_x ? c.degree_x() : c.degree_y());
    }
    return d;
  };
  // term-by-term bound on the Sylvester determinant's degrees
  const int Dx = dq * maxdeg(p, true) + dp * maxdeg(q, true);
  const int Dy = dq * maxdeg(p, false) + dp * maxdeg(q, false);
  const MultiPoly lcp = p.coeff(dp), lcq = q.coeff(dq);

  std::vector<Rational> ynodes;
  std::vector<QPoly> rowres;  // specialized resultant per y-node, a poly in x
  int yk = 0;
  const int yguard = 8 * (Dy + 1) + 64 + lcp.degree_y() + lcq.degree_y();
  while (static_cast<int>(ynodes.size()) < Dy + 1) {
    if (yk > yguard) throw std::logic_error("resultant_t: y-node budget exhausted");
    Rational y0(eval_point(yk++));
    // the t-degrees must survive the substitution for specialization to commute
    QPoly lpy = lcp.eval_y(y0);
    QPoly lqy = lcq.eval_y(y0);
    if (lpy.is_zero() || lqy.is_zero()) continue;
    std::vector<QPoly> prow(static_cast<size_t>(dp) + 1), qrow(static_cast<size_t>(dq) + 1);
    for (int k = 0; k <= dp; ++k) prow[static_cast<size_t>(k)] = p.coeff(k).eval_y(y0);
    for (int k = 0; k <= dq; ++k) qrow[static_cast<size_t>(k)] = q.coeff(k).eval_y(y0);

    std::vector<Rational> xnodes, xvals;
    int xk = 0;
    const int xguard = 8 * (Dx + 1) + 64 + lpy.degree() + lqy.degree();
    while (static_cast<int>(xnodes.size()) < Dx + 1) {
      if (xk > xguard) throw std::logic_error("resultant_t: x-node budget exhausted");
      Rational x0(eval_point(xk++));
      if (lpy.eval(x0).is_zero() || lqy.eval(x0).is_zero()) continue;
      QPoly pt, qt;  // univariate in t at the grid point
      for (int k = 0; k <= dp; ++k) pt.set_coeff(k, prow[static_cast<size_t>(k)].eval(x0));
      for (int k = 0; k <= dq; ++k) qt.set_coeff(k, qrow[static_cast<size_t>(k)].eval(x0));
      xnodes.push_back(x0);
      xvals.push_back(resultant_q(pt, qt));
    }
    ynodes.push_back(y0);
    rowres.push_back(interpolate_q(xnodes, xvals));
  }

  MultiPoly res;
  for (int k = 0; k <= Dx; ++k) {
    std::vector<Rational> vals;
    vals.reserve(rowres.size());
    for (const auto& r : rowres) vals.push_back(r.coeff(k));
    QPoly ck = interpolate_q(ynodes, vals);
    for (int j = 0; j <= ck.degree(); ++j) res.add_term(ck.coeff(j), k, j);
  }
  return res;
}

MultiPoly tpoly_eval(const TPoly& p, const Rational& t) {
  MultiPoly acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc.scaled(t) + p.coeff(k);
  return acc;
}

}  // namespace offsetal
