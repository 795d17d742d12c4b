#include "offsetal/offset.hpp"

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "offsetal/polyops.hpp"

namespace offsetal {

namespace {

MultiPoly mp_one() { return MultiPoly(Rational(1)); }

// W(t)*x - X(t) (or with y) as a polynomial in t over Q[x,y].
TPoly coordinate_numerator(const QPoly& den, const QPoly& num, bool along_x) {
  TPoly r;
  int d = std::max(den.degree(), num.degree());
  for (int k = 0; k <= d; ++k) {
    MultiPoly c = MultiPoly::term(den.coeff(k), along_x ? 1 : 0, along_x ? 0 : 1);
    c.add_term(-num.coeff(k), 0, 0);
    r.set_coeff(k, c);
  }
  return r;
}

std::vector<QPoly> qp_powers(const QPoly& base, int top) {
  std::vector<QPoly> p(static_cast<size_t>(top) + 1);
  p[0] = QPoly(Rational(1));
  for (int i = 1; i <= top; ++i) p[static_cast<size_t>(i)] = p[static_cast<size_t>(i - 1)] * base;
  return p;
}

// Elements a + b*s of Q[t][s] modulo s^2 = w(t).  As long as w is not a
// perfect square this ring is an integral domain, so a + b*s == 0 iff both
// components vanish.
struct Ext {
  QPoly a, b;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

Ext ext_mul(const Ext& p, const Ext& q, const QPoly& w) {
  return {p.a * q.a + (p.b * q.b) * w, p.a * q.b + p.b * q.a};
}

std::vector<Ext> ext_powers(const Ext& base, int top, const QPoly& w) {
  std::vector<Ext> p(static_cast<size_t>(top) + 1);
  p[0] = Ext{QPoly(Rational(1)), QPoly()};
  for (int i = 1; i <= top; ++i) p[static_cast<size_t>(i)] = ext_mul(p[static_cast<size_t>(i - 1)], base, w);
  return p;
}

// If w == sigma^2 for some sigma in Q[t], report it; the offset branches are
// then rational and substitutions stay inside Q[t].
bool exact_square_root(const QPoly& w, QPoly* sigma) {
  QPolySquarefree parts = yun_squarefree_qp(w);
  for (const auto& pp : parts.parts)
    if (pp.multiplicity % 2 != 0) return false;
  Rational root;
  if (!parts.constant.sqrt_exact(&root)) return false;
  QPoly acc{Rational(1)};
  for (const auto& pp : parts.parts) acc = acc * pp.factor.pow(pp.multiplicity / 2);
  *sigma = acc.scaled(root);
  return true;
}

// Complex polynomials in Q[x,y] + i*Q[x,y], used to fold conjugate line pairs
// back into real form.
struct CPoly {
  MultiPoly re, im;
};

CPoly cp_mul(const CPoly& p, const CPoly& q) {
  return {p.re * q.re - p.im * q.im, p.re * q.im + p.im * q.re};
}

// Horner evaluation of a Q(i)-coefficient polynomial at a complex point whose
// components are real bivariate polynomials.
CPoly gpoly_at(const GPoly& p, const CPoly& base) {
  CPoly acc{MultiPoly(), MultiPoly()};
  for (int k = p.degree(); k >= 0; --k) {
    acc = cp_mul(acc, base);
    const GaussQ& c = p.coeff(k);
    acc.re.add_term(c.re, 0, 0);
    acc.im.add_term(c.im, 0, 0);
  }
  return acc;
}

GPoly gpoly_complex(const QPoly& re, const QPoly& im) {
  int d = std::max(re.degree(), im.degree());
  std::vector<GaussQ> cs(static_cast<size_t>(std::max(d, -1)) + 1);
  for (int k = 0; k <= d; ++k) cs[static_cast<size_t>(k)] = GaussQ(re.coeff(k), im.coeff(k));
  return GPoly(std::move(cs));
}

// Isotropic-tangent candidates at finite parameters: express them through the
// curve points over the odd-multiplicity kernel of w.
MultiPoly finite_isotropic_candidates(const OffsetProblem& op) {
  QPolySquarefree parts = yun_squarefree_qp(op.h.w);
  QPoly w_odd{Rational(1)};
  for (const auto& pp : parts.parts)
    if (pp.multiplicity % 2 != 0) w_odd = w_odd * pp.factor;
  if (w_odd.degree() < 1) return mp_one();
  QPoly shared = gcd_qp(w_odd, op.np.W);
  QPoly w_bar = shared.degree() > 0 ? divexact_poly(w_odd, shared) : w_odd;
  if (w_bar.degree() < 1) return mp_one();

  TPoly ax = coordinate_numerator(op.np.W, op.np.X, true);
  TPoly ay = coordinate_numerator(op.np.W, op.np.Y, false);
  TPoly circle_through = ax * ax + ay * ay;  // isotropic pair through each point
  MultiPoly e = resultant_t(tpoly_from_qp(w_bar), circle_through);
  if (e.is_zero())
    throw InternalInconsistencyError(
        "finite isotropic candidates: resultant vanished although the "
        "tangent-direction kernel shares no root with the denominator");
  return e;
}

// Isotropic-asymptote candidates: parameters where the curve runs to infinity
// toward a circular point.  Over Q(i) these are the common roots of Y + iX
// and W; each finite limit value z of (Y + iX)/W there contributes the line
// y + ix = z together with its conjugate.
MultiPoly asymptote_isotropic_candidates(const OffsetProblem& op) {
  GPoly z_num = gpoly_complex(op.np.Y, op.np.X);  // Y + iX
  GPoly den = gpoly_complex(op.np.W, QPoly());
  GPoly g_plus = gpoly_gcd(z_num, den);
  if (g_plus.degree() < 1) return mp_one();
  GPoly n_bar = gpoly_divexact(z_num, g_plus);
  GPoly d_bar = gpoly_divexact(den, g_plus);
  GPoly g_bar = gpoly_squarefree_part(g_plus);

  // Res_t(g_bar, d_bar*z - n_bar) as a polynomial in z: its roots are the
  // asymptote values; parameters with d_bar = 0 drop out by degree.
  using TZ = UniPoly<GPoly>;  // outer t, inner z
  TZ a;
  for (int k = 0; k <= g_bar.degree(); ++k) a.set_coeff(k, GPoly(g_bar.coeff(k)));
  TZ b;
  int db = std::max(n_bar.degree(), d_bar.degree());
  for (int k = 0; k <= db; ++k)
    b.set_coeff(k, GPoly(std::vector<GaussQ>{-n_bar.coeff(k), d_bar.coeff(k)}));
  if (b.is_zero())
    throw InternalInconsistencyError("asymptote candidates: zero value map");
  GPoly rz = resultant_subresultant<GPoly>(a, b);
  if (rz.is_zero())
    throw InternalInconsistencyError(
        "asymptote candidates: resultant vanished although numerator and "
        "denominator were reduced");
  if (rz.degree() < 1) return mp_one();

  // S(x,y) = rz(y + ix); the conjugate family is its mirror, so the real
  // candidate equation is |S|^2.
  CPoly s = gpoly_at(rz, CPoly{MultiPoly::y(), MultiPoly::x()});
  MultiPoly e = s.re * s.re + s.im * s.im;
  if (e.is_zero())
    throw InternalInconsistencyError("asymptote candidates: zero line product");
  return e;
}

FactorKind offset_kind(int multiplicity, int n) {
  return multiplicity == 2 * n ? FactorKind::OffsetSpecial : FactorKind::OffsetSimple;
}

}  // namespace

OffsetProblem make_offset_problem(const ValidatedCurve& vc, const Rational& d) {
  if (d.sign() <= 0)
    throw std::invalid_argument("offset distance must be a positive rational");
  OffsetProblem op;
  op.np = vc.param;
  op.h = vc.hodo;
  op.d = d;
  op.d_squared = d * d;
  op.tracing_index = vc.implicit_curve.tracing_index;
  return op;
}

PQSystem build_pq(const OffsetProblem& op) {
  TPoly ax = coordinate_numerator(op.np.W, op.np.X, true);
  TPoly ay = coordinate_numerator(op.np.W, op.np.Y, false);
  TPoly u = tpoly_from_qp(op.h.U);
  TPoly v = tpoly_from_qp(op.h.V);

  TPoly p_full = u * ax + v * ay;
  TPoly q_full = ax * ax + ay * ay - tpoly_from_qp((op.np.W * op.np.W).scaled(op.d_squared));
  if (p_full.is_zero() || q_full.is_zero())
    throw InternalInconsistencyError("offset system collapsed to zero");

  TContentSplit ps = content_wrt_t(p_full);
  TContentSplit qs = content_wrt_t(q_full);
  return {std::move(ps.primitive), std::move(qs.primitive), std::move(ps.content),
          std::move(qs.content)};
}

OffsetResultant offset_resultant(const PQSystem& pq) {
  if (pq.P.degree() < 1 || pq.Q.degree() < 1)
    throw InternalInconsistencyError(
        "offset eliminant needs positive degree in the parameter");
  MultiPoly raw = resultant_t(pq.P, pq.Q);
  if (raw.is_zero())
    throw InternalInconsistencyError(
        "offset eliminant vanished: the system shares a parameter factor");
  CanonicalMP can = canonicalize_mp(raw);
  return {std::move(can.poly), can.constant};
}

MultiPoly extraneous_candidates(const OffsetProblem& op) {
  if (op.corrupt_extraneous_for_testing) return mp_one();
  MultiPoly raw = finite_isotropic_candidates(op) * asymptote_isotropic_candidates(op);
  return canonicalize_mp(raw).poly;
}

bool membership_test(const OffsetProblem& op, const MultiPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("membership_test: zero polynomial");
  if (g.is_constant()) return false;

  const QPoly &X = op.np.X, &Y = op.np.Y, &W = op.np.W;
  const QPoly &U = op.h.U, &V = op.h.V, &w = op.h.w;
  const int total = g.total_degree();
  const int dx = std::max(g.degree_x(), 0);
  const int dy = std::max(g.degree_y(), 0);

  QPoly sigma;
  const bool rational_branches = exact_square_root(w, &sigma);

  for (int eps : {+1, -1}) {
    const Rational ed = eps > 0 ? op.d : -op.d;
    if (rational_branches) {
      // branch point: ((X*sigma + ed*V*W) / (W*sigma), (Y*sigma - ed*U*W) / (W*sigma))
      QPoly xs = X * sigma + (V * W).scaled(ed);
      QPoly ys = Y * sigma - (U * W).scaled(ed);
      QPoly den = W * sigma;
      std::vector<QPoly> px = qp_powers(xs, dx), py = qp_powers(ys, dy),
                         pd = qp_powers(den, total);
      QPoly acc;
      for (const auto& [e, c] : g.terms()) {
        QPoly term = px[static_cast<size_t>(e.dx)] * py[static_cast<size_t>(e.dy)] *
                     pd[static_cast<size_t>(total - e.dx - e.dy)];
        acc = acc + term.scaled(c);
      }
      if (acc.is_zero()) return true;
    } else {
      // branch point: ((X*s + ed*V*W) / (W*s), (Y*s - ed*U*W) / (W*s)), s^2 = w
      Ext xs{(V * W).scaled(ed), X};
      Ext ys{(U * W).scaled(-ed), Y};
      Ext den{QPoly(), W};
      std::vector<Ext> px = ext_powers(xs, dx, w), py = ext_powers(ys, dy, w),
                       pd = ext_powers(den, total, w);
      Ext acc{QPoly(), QPoly()};
      for (const auto& [e, c] : g.terms()) {
        Ext term = ext_mul(ext_mul(px[static_cast<size_t>(e.dx)], py[static_cast<size_t>(e.dy)], w),
                           pd[static_cast<size_t>(total - e.dx - e.dy)], w);
        acc.a = acc.a + term.a.scaled(c);
        acc.b = acc.b + term.b.scaled(c);
      }
      if (acc.is_zero()) return true;
    }
  }
  return false;
}

LineSplit split_isotropic_lines(const MultiPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("split_isotropic_lines: zero polynomial");
  if (p.is_constant()) return {mp_one(), mp_one()};

  // Rewrite p in the coordinates u = x + iy, v = x - iy as a polynomial in v
  // whose coefficients live in Q(i)[u].
  using UV = UniPoly<GPoly>;  // outer v, inner u
  const GaussQ half(Rational(1, 2));
  const GaussQ mihalf(Rational(0), Rational(-1, 2));
  const GaussQ ihalf(Rational(0), Rational(1, 2));
  UV xe, ye;  // x = (u + v)/2, y = -i/2*u + i/2*v
  xe.set_coeff(0, GPoly(std::vector<GaussQ>{GaussQ(), half}));
  xe.set_coeff(1, GPoly(half));
  ye.set_coeff(0, GPoly(std::vector<GaussQ>{GaussQ(), mihalf}));
  ye.set_coeff(1, GPoly(ihalf));

  std::vector<UV> px(static_cast<size_t>(std::max(p.degree_x(), 0)) + 1);
  std::vector<UV> py(static_cast<size_t>(std::max(p.degree_y(), 0)) + 1);
  px[0] = UV(GPoly(GaussQ(Rational(1))));
  py[0] = px[0];
  for (size_t i = 1; i < px.size(); ++i) px[i] = px[i - 1] * xe;
  for (size_t i = 1; i < py.size(); ++i) py[i] = py[i - 1] * ye;

  UV tilde;
  for (const auto& [e, c] : p.terms())
    tilde = tilde + (px[static_cast<size_t>(e.dx)] * py[static_cast<size_t>(e.dy)])
                        .scaled(GPoly(GaussQ(c)));

  // Content in u: the largest divisor involving only u.
  GPoly a_content;
  for (int k = 0; k <= tilde.degree() && a_content.degree() != 0; ++k)
    a_content = gpoly_gcd(a_content, tilde.coeff(k));
  if (a_content.degree() > 0)
    for (int k = 0; k <= tilde.degree(); ++k)
      tilde.set_coeff(k, gpoly_divexact(tilde.coeff(k), a_content));

  // Transpose and take the content in v from the cofactor.
  int du = 0;
  for (int k = 0; k <= tilde.degree(); ++k) du = std::max(du, tilde.coeff(k).degree());
  std::vector<std::vector<GaussQ>> cols(static_cast<size_t>(du) + 1,
                                        std::vector<GaussQ>(static_cast<size_t>(tilde.degree()) + 1));
  for (int k = 0; k <= tilde.degree(); ++k) {
    const GPoly& row = tilde.coeff(k);
    for (int j = 0; j <= row.degree(); ++j)
      cols[static_cast<size_t>(j)][static_cast<size_t>(k)] = row.coeff(j);
  }
  GPoly b_content;
  for (size_t j = 0; j < cols.size() && b_content.degree() != 0; ++j)
    b_content = gpoly_gcd(b_content, GPoly(cols[j]));

  if (a_content.degree() < 1 && b_content.degree() < 1) return {mp_one(), p};

  CPoly la = gpoly_at(a_content, CPoly{MultiPoly::x(), MultiPoly::y()});
  CPoly lb = gpoly_at(b_content, CPoly{MultiPoly::x(), -MultiPoly::y()});
  CPoly prod = cp_mul(la, lb);
  if (!prod.im.is_zero())
    throw InternalInconsistencyError(
        "isotropic line content of a real polynomial must be conjugate-symmetric");
  MultiPoly lines = canonicalize_mp(prod.re).poly;
  MultiPoly rest;
  if (!try_divide_mp(p, lines, &rest))
    throw InternalInconsistencyError("extracted line content does not divide the input");
  return {std::move(lines), std::move(rest)};
}

const char* factor_kind_label(FactorKind k) {
  switch (k) {
    case FactorKind::OffsetSimple: return "offset_simple";
    case FactorKind::OffsetSpecial: return "offset_special";
    case FactorKind::Extraneous: return "extraneous";
    case FactorKind::Unclassified: return "unclassified";
  }
  return "unclassified";
}

SplitResult classify_and_split(const MultiPoly& H, const OffsetProblem& op) {
  if (H.is_zero())
    throw InternalInconsistencyError("classify_and_split: zero input");
  SplitResult out;
  out.F = mp_one();
  out.G = mp_one();

  MPSquarefree yun = yun_squarefree_mp(H);

  if (op.corrupt_extraneous_for_testing) {
    for (const auto& part : yun.parts)
      out.factors.push_back({part.factor, part.multiplicity, FactorKind::Unclassified});
    out.complete = false;
    out.diagnostics.push_back(
        "extraneous-candidate machinery disabled by the test hook; no factor "
        "can be certified, refusing to guess");
    return out;
  }

  MultiPoly cands = extraneous_candidates(op);
  bool all_certified = true;

  for (const auto& part : yun.parts) {
    const MultiPoly& p = part.factor;
    const int m = part.multiplicity;

    MultiPoly candidate_part = mp_one();
    MultiPoly cofactor = p;
    if (!cands.is_constant()) {
      MultiPoly shared = gcd_mp(p, cands);
      if (!shared.is_constant()) {
        candidate_part = shared;
        cofactor = divexact_mp(p, shared);
      }
    }
    LineSplit ls = cofactor.is_constant() ? LineSplit{mp_one(), cofactor}
                                          : split_isotropic_lines(cofactor);
    MultiPoly extraneous_piece = candidate_part * ls.lines;
    MultiPoly offset_piece = ls.rest;

    std::string why;
    if (!offset_piece.is_constant() && !membership_test(op, offset_piece))
      why = "candidate offset factor fails the branch membership test";
    if (why.empty() && !extraneous_piece.is_constant() &&
        membership_test(op, extraneous_piece))
      why = "candidate extraneous factor passes the branch membership test";

    if (!why.empty()) {
      out.factors.push_back({p, m, FactorKind::Unclassified});
      std::ostringstream os;
      os << "factor of multiplicity " << m << " left unclassified: " << why;
      out.diagnostics.push_back(os.str());
      all_certified = false;
      continue;
    }
    if (!offset_piece.is_constant()) {
      out.factors.push_back({offset_piece, m, offset_kind(m, op.tracing_index)});
      out.F = out.F * offset_piece.pow(m);
    }
    if (!extraneous_piece.is_constant()) {
      out.factors.push_back({extraneous_piece, m, FactorKind::Extraneous});
      out.G = out.G * extraneous_piece.pow(m);
    }
  }

  out.complete = all_certified;
  if (out.complete && out.F * out.G != H)
    throw InternalInconsistencyError(
        "classified parts do not multiply back to the eliminant");
  return out;
}

StructureReport structure_report(const OffsetProblem& op) {
  StructureReport r;
  PQSystem pq = build_pq(op);
  r.removed_content_p = pq.removed_content_p;
  r.removed_content_q = pq.removed_content_q;

  OffsetResultant hres = offset_resultant(pq);
  r.H = hres.H;
  r.resultant_constant = hres.constant;

  SplitResult split = classify_and_split(r.H, op);
  r.F = split.F;
  r.G = split.G;
  r.factors = split.factors;
  r.complete = split.complete;
  r.diagnostics = split.diagnostics;
  r.tracing_index = op.tracing_index;

  const int n = op.tracing_index;
  std::set<int> pattern;
  for (const auto& f : r.factors)
    if (f.kind == FactorKind::OffsetSimple || f.kind == FactorKind::OffsetSpecial)
      pattern.insert(f.multiplicity_in_H);
  r.exponent_pattern.assign(pattern.begin(), pattern.end());

  r.f1_part = mp_one();
  r.f2_part = mp_one();
  for (const auto& f : r.factors) {
    if (f.kind == FactorKind::OffsetSimple && f.multiplicity_in_H == n)
      r.f1_part = r.f1_part * f.poly;
    if (f.kind == FactorKind::OffsetSpecial) r.f2_part = r.f2_part * f.poly;
  }

  if (!r.complete) {
    r.has_special = false;
    r.theorem_pattern_ok = false;
    r.verdict_squarefree = false;
    return r;
  }

  r.has_special = pattern.count(2 * n) > 0;
  r.theorem_pattern_ok = !pattern.empty();
  for (int m : pattern)
    if (m != n && m != 2 * n) r.theorem_pattern_ok = false;
  if (!r.theorem_pattern_ok) {
    std::ostringstream os;
    os << "offset-factor multiplicities {";
    bool first = true;
    for (int m : pattern) {
      if (!first) os << ", ";
      os << m;
      first = false;
    }
    os << "} are not the expected {n} or {n, 2n} for tracing index n = " << n;
    r.diagnostics.push_back(os.str());
  }

  bool actually_squarefree = true;
  for (int m : pattern)
    if (m != 1) actually_squarefree = false;
  r.verdict_squarefree = actually_squarefree;
  const bool predicted = (n == 1 && !r.has_special);
  if (predicted != actually_squarefree)
    r.diagnostics.push_back(
        "squarefree status of the offset part disagrees with the "
        "tracing-index criterion");
  return r;
}

IsOffsetResult is_offset_from_report(const StructureReport& report) {
  IsOffsetResult res;
  res.determined = report.complete;
  res.is_offset = report.complete && report.has_special;
  res.special_equation = res.is_offset ? report.f2_part : mp_one();
  return res;
}

IsOffsetResult is_offset_test(const OffsetProblem& op) {
  return is_offset_from_report(structure_report(op));
}

SpecializationCheck verify_specialization(const OffsetProblem& op,
                                          const Rational& y0,
                                          const StructureReport& report) {
  SpecializationCheck check;
  PQSystem pq = build_pq(op);

  QPoly lp = pq.P.lc().eval_y(y0);
  QPoly lq = pq.Q.lc().eval_y(y0);
  if (lp.is_zero() || lq.is_zero()) {
    check.notes.push_back(
        "a leading parameter coefficient vanishes on this line; choose a "
        "different height");
    return check;
  }
  check.usable_y0 = true;

  auto specialize = [&](const TPoly& f) {
    TPoly r;
    for (int k = 0; k <= f.degree(); ++k) {
      QPoly c = f.coeff(k).eval_y(y0);
      MultiPoly m;
      for (int j = 0; j <= c.degree(); ++j) m.add_term(c.coeff(j), j, 0);
      r.set_coeff(k, m);
    }
    return r;
  };
  MultiPoly res_mp = resultant_t(specialize(pq.P), specialize(pq.Q));
  QPoly line_res = res_mp.eval_y(Rational(0));  // x-only by construction
  QPoly expected = report.H.eval_y(y0).scaled(report.resultant_constant);
  check.resultant_matches = (line_res == expected);
  if (!check.resultant_matches)
    check.notes.push_back(
        "specialized eliminant does not match the stored eliminant on this line");

  if (line_res.is_zero()) {
    check.notes.push_back("eliminant vanishes identically on this line");
    return check;
  }
  if (!report.complete) {
    check.notes.push_back(
        "factor table incomplete; multiplicity comparison skipped");
    return check;
  }

  QPoly prod{Rational(1)};
  bool degenerate = false;
  for (const auto& f : report.factors) {
    QPoly spec = f.poly.eval_y(y0);
    if (spec.degree() != f.poly.degree_x()) {
      check.notes.push_back(
          "a factor drops x-degree on this line; choose a different height");
      degenerate = true;
      break;
    }
    prod = prod * spec.pow(f.multiplicity_in_H);
  }
  if (!degenerate) {
    if (prod.degree() == line_res.degree()) {
      QPoly scaled = prod.scaled(line_res.lc() / prod.lc());
      check.multiplicities_match = (scaled == line_res);
    }
    if (!check.multiplicities_match)
      check.notes.push_back(
          "x-root multiplicities on this line do not reproduce the factor "
          "table");
  }
  return check;
}

}  // namespace offsetal
