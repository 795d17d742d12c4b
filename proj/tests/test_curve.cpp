#include <doctest.h>

#include <initializer_list>
#include <tuple>
#include <variant>
#include <vector>

#include "offsetal/curve.hpp"
#include "oracles.hpp"

using namespace offsetal;
using offsetal::testing::Rng;

namespace {

QPoly qp(const std::vector<long>& cs) {
  QPoly r;
  for (size_t i = 0; i < cs.size(); ++i) r.set_coeff((int)i, Rational(cs[i]));
  return r;
}

MultiPoly mpoly(std::initializer_list<std::tuple<long, int, int>> terms) {
  MultiPoly r;
  for (const auto& [c, dx, dy] : terms) r.add_term(Rational(c), dx, dy);
  return r;
}

RationalParametrization parabola() {
  return RationalParametrization(qp({0, 1}), qp({1}), qp({0, 0, 1}), qp({1}));
}

RationalParametrization doubled_parabola() {
  return RationalParametrization(qp({0, 0, 1}), qp({1}),
                                 qp({0, 0, 0, 0, 1}), qp({1}));
}

RationalParametrization unit_circle() {
  return RationalParametrization(qp({1, 0, -1}), qp({1, 0, 1}), qp({0, 2}),
                                 qp({1, 0, 1}));
}

// (-1024 t^3 / (16t^2+1)^2, -128 t^2 (16t^2-1) / (16t^2+1)^2)
RationalParametrization cardioid() {
  QPoly den = qp({1, 0, 16}) * qp({1, 0, 16});
  return RationalParametrization(qp({0, 0, 0, -1024}), den,
                                 qp({0, 0, 128, 0, -2048}), den);
}

// Degree-8 parametrization of the d=1 offset of the cardioid.
RationalParametrization cardioid_offset() {
  QPoly num1 = qp({-9, 0, 1}) * qp({729, 0, -1053, 3456, -117, 0, 1});
  QPoly num2 = qp({0, -18}) * qp({729, -1296, -189, 864, -21, -16, 1});
  QPoly den = qp({9, 0, 1}).pow(4);
  return RationalParametrization(num1, den, num2, den);
}

MultiPoly cardioid_quartic() {
  return mpoly({{1, 4, 0},
                {2, 2, 2},
                {1, 0, 4},
                {8, 2, 1},
                {8, 0, 3},
                {-16, 2, 0}});
}

// Raw elimination resultant, recomputed directly from the building blocks so
// bookkeeping inside implicitize is cross-checked against it.
MultiPoly direct_elimination_resultant(const NormalizedParametrization& np) {
  int deg_a = std::max(np.W.degree(), np.X.degree());
  int deg_b = std::max(np.W.degree(), np.Y.degree());
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
  return resultant_t(a, b);
}

void check_point_map_preserved(const RationalParametrization& rp, int samples) {
  NormalizedParametrization np = normalize(rp);
  int used = 0;
  for (long k = 0; used < samples && k < 40 * samples; ++k) {
    Rational t = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k + 1) / 2);
    if (rp.q1().eval(t).is_zero() || rp.q2().eval(t).is_zero() ||
        np.W.eval(t).is_zero()) {
      continue;
    }
    CHECK(rp.p1().eval(t) / rp.q1().eval(t) == np.X.eval(t) / np.W.eval(t));
    CHECK(rp.p2().eval(t) / rp.q2().eval(t) == np.Y.eval(t) / np.W.eval(t));
    ++used;
  }
  CHECK(used == samples);
}

void check_implicit_vanishes_on_curve(const RationalParametrization& rp,
                                      int samples) {
  NormalizedParametrization np = normalize(rp);
  ImplicitCurve ic = implicitize(np);
  int used = 0;
  for (long k = 0; used < samples && k < 40 * samples; ++k) {
    Rational t = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k + 1) / 2);
    Rational wt = np.W.eval(t);
    if (wt.is_zero()) continue;
    CHECK(ic.f.eval(np.X.eval(t) / wt, np.Y.eval(t) / wt).is_zero());
    ++used;
  }
  CHECK(used == samples);
}

}  // namespace

TEST_CASE("parametrization components are reduced with monic denominators") {
  // (t^2-1)/(t-1) collapses to (t+1)/1.
  RationalParametrization a(qp({-1, 0, 1}), qp({-1, 1}), qp({0, 1}), qp({1}));
  CHECK(a.p1() == qp({1, 1}));
  CHECK(a.q1() == qp({1}));

  // Scalar denominators are folded into the numerator.
  RationalParametrization b(qp({2, 2}), qp({2}), qp({0, 1}), qp({1}));
  CHECK(b.p1() == qp({1, 1}));
  CHECK(b.q1() == qp({1}));

  // Zero numerators normalize to 0/1.
  RationalParametrization c(qp({}), qp({5, 5}), qp({0, 1}), qp({1}));
  CHECK(c.p1().is_zero());
  CHECK(c.q1() == qp({1}));

  CHECK_THROWS_AS(
      RationalParametrization(qp({1}), qp({}), qp({0, 1}), qp({1})),
      std::invalid_argument);
}

TEST_CASE("normalize merges denominators into the least common one") {
  {
    NormalizedParametrization np = normalize(parabola());
    CHECK(np.X == qp({0, 1}));
    CHECK(np.Y == qp({0, 0, 1}));
    CHECK(np.W == qp({1}));
  }
  {
    // (t/(t+1), 1/(t+1))
    RationalParametrization rp(qp({0, 1}), qp({1, 1}), qp({1}), qp({1, 1}));
    NormalizedParametrization np = normalize(rp);
    CHECK(np.X == qp({0, 1}));
    CHECK(np.Y == qp({1}));
    CHECK(np.W == qp({1, 1}));
  }
  {
    // Distinct denominators: (t/(t+1), t/(t-1)).
    RationalParametrization rp(qp({0, 1}), qp({1, 1}), qp({0, 1}),
                               qp({-1, 1}));
    NormalizedParametrization np = normalize(rp);
    CHECK(np.X == qp({0, -1, 1}));
    CHECK(np.Y == qp({0, 1, 1}));
    CHECK(np.W == qp({-1, 0, 1}));
  }
  {
    NormalizedParametrization np = normalize(cardioid());
    CHECK(np.X == qp({0, 0, 0, -1024}));
    CHECK(np.Y == qp({0, 0, 128, 0, -2048}));
    CHECK(np.W == qp({1, 0, 32, 0, 256}));
  }
}

TEST_CASE("normalize preserves the point map exactly") {
  check_point_map_preserved(cardioid(), 10);
  check_point_map_preserved(unit_circle(), 10);
  Rng rng(101);
  for (int trial = 0; trial < 5; ++trial) {
    QPoly q1 = rng.qpoly(1 + (trial % 2));
    QPoly q2 = rng.qpoly(1 + ((trial + 1) % 2));
    RationalParametrization rp(rng.qpoly(2), q1, rng.qpoly(3), q2);
    check_point_map_preserved(rp, 8);
  }
}

TEST_CASE("hodograph derivative data") {
  {
    Hodograph h = hodograph(normalize(parabola()));
    CHECK(h.U == qp({1}));
    CHECK(h.V == qp({0, 2}));
    CHECK(h.w == qp({1, 0, 4}));
  }
  {
    // Horizontal line (t, 1).
    RationalParametrization rp(qp({0, 1}), qp({1}), qp({1}), qp({1}));
    Hodograph h = hodograph(normalize(rp));
    CHECK(h.U == qp({1}));
    CHECK(h.V.is_zero());
    CHECK(h.w == qp({1}));
  }
  {
    Hodograph h = hodograph(normalize(cardioid()));
    // 1024 t^2 (16t^2+1)(16t^2-3) and -256 t (16t^2+1)(48t^2-1), expanded.
    CHECK(h.U == qp({0, 0, -3072, 0, -32768, 0, 262144}));
    CHECK(h.V == qp({0, 256, 0, -8192, 0, -196608}));
    CHECK(h.w == h.U * h.U + h.V * h.V);
    CHECK(h.w == qp({0, 0, 65536}) * qp({1, 0, 16}).pow(5));
  }
  {
    // Constant image -> degenerate.
    RationalParametrization rp(qp({3}), qp({1}), qp({5}), qp({1}));
    CHECK_THROWS_AS(hodograph(normalize(rp)), DegenerateCurveError);
  }
}

TEST_CASE("implicitize recovers pinned implicit equations") {
  {
    ImplicitCurve ic = implicitize(parabola());
    CHECK(ic.f == mpoly({{1, 2, 0}, {-1, 0, 1}}));
    CHECK(ic.tracing_index == 1);
    MultiPoly raw = direct_elimination_resultant(normalize(parabola()));
    CHECK(ic.f.pow(ic.tracing_index).scaled(ic.constant) == raw);
  }
  {
    ImplicitCurve ic = implicitize(doubled_parabola());
    CHECK(ic.f == mpoly({{1, 2, 0}, {-1, 0, 1}}));
    CHECK(ic.tracing_index == 2);
    MultiPoly raw = direct_elimination_resultant(normalize(doubled_parabola()));
    CHECK(ic.f.pow(ic.tracing_index).scaled(ic.constant) == raw);
  }
  {
    ImplicitCurve ic = implicitize(unit_circle());
    CHECK(ic.f == mpoly({{1, 2, 0}, {1, 0, 2}, {-1, 0, 0}}));
    CHECK(ic.tracing_index == 1);
  }
  {
    ImplicitCurve ic = implicitize(cardioid());
    CHECK(ic.f == cardioid_quartic());
    CHECK(ic.tracing_index == 1);
    MultiPoly raw = direct_elimination_resultant(normalize(cardioid()));
    CHECK(ic.f.pow(ic.tracing_index).scaled(ic.constant) == raw);
  }
  {
    // Vertical line x = 3 traced once and twice.
    RationalParametrization once(qp({3}), qp({1}), qp({0, 1}), qp({1}));
    ImplicitCurve ic = implicitize(once);
    CHECK(ic.f == mpoly({{1, 1, 0}, {-3, 0, 0}}));
    CHECK(ic.tracing_index == 1);

    RationalParametrization twice(qp({3}), qp({1}), qp({0, 0, 1}), qp({1}));
    ImplicitCurve ic2 = implicitize(twice);
    CHECK(ic2.f == mpoly({{1, 1, 0}, {-3, 0, 0}}));
    CHECK(ic2.tracing_index == 2);
  }
  {
    // Horizontal line y = 3.
    RationalParametrization rp(qp({0, 1}), qp({1}), qp({3}), qp({1}));
    ImplicitCurve ic = implicitize(rp);
    CHECK(ic.f == mpoly({{1, 0, 1}, {-3, 0, 0}}));
    CHECK(ic.tracing_index == 1);
  }
  {
    RationalParametrization point(qp({3}), qp({1}), qp({5}), qp({1}));
    CHECK_THROWS_AS(implicitize(point), DegenerateCurveError);
  }
}

TEST_CASE("implicit equation vanishes along the parametrization") {
  check_implicit_vanishes_on_curve(cardioid(), 8);
  check_implicit_vanishes_on_curve(unit_circle(), 8);
  check_implicit_vanishes_on_curve(doubled_parabola(), 8);
  Rng rng(202);
  for (int trial = 0; trial < 4; ++trial) {
    RationalParametrization rp(rng.qpoly(2), rng.qpoly(1), rng.qpoly(2),
                               rng.qpoly(1));
    check_implicit_vanishes_on_curve(rp, 6);
  }
}

TEST_CASE("tracing index by both methods on pinned fixtures") {
  CHECK(tracing_index(parabola()) == 1);
  CHECK(tracing_index(doubled_parabola()) == 2);
  CHECK(tracing_index(unit_circle()) == 1);
  CHECK(tracing_index(cardioid()) == 1);
  CHECK(tracing_index(cardioid_offset()) == 1);
  CHECK(tracing_index_by_parameter_pairing(normalize(doubled_parabola())) ==
        2);
}

TEST_CASE("tracing index multiplies under power substitutions") {
  const QPoly one = qp({1});
  // t <- s^2 and t <- s^3.
  CHECK(tracing_index(reparametrize(parabola(), qp({0, 0, 1}), one)) == 2);
  CHECK(tracing_index(reparametrize(parabola(), qp({0, 0, 0, 1}), one)) == 3);
  CHECK(tracing_index(reparametrize(unit_circle(), qp({0, 0, 1}), one)) == 2);
  CHECK(tracing_index(reparametrize(unit_circle(), qp({0, 0, 0, 1}), one)) ==
        3);
  CHECK(tracing_index(reparametrize(cardioid(), qp({0, 0, 1}), one)) == 2);
  // A generic cubic substitution, not a pure power.
  CHECK(tracing_index(reparametrize(parabola(), qp({5, 3, -2, 1}), one)) ==
        3);
}

TEST_CASE("tracing index is invariant under fractional linear substitutions") {
  // t <- (s+1)/(s-1) and t <- (2s+3)/(s+5).
  CHECK(tracing_index(reparametrize(parabola(), qp({1, 1}), qp({-1, 1}))) ==
        1);
  CHECK(tracing_index(reparametrize(cardioid(), qp({1, 1}), qp({-1, 1}))) ==
        1);
  CHECK(tracing_index(reparametrize(unit_circle(), qp({3, 2}), qp({5, 1}))) ==
        1);
  CHECK(tracing_index(reparametrize(doubled_parabola(), qp({1, 1}),
                                    qp({-1, 1}))) == 2);
}

TEST_CASE("tracing index methods agree on random curves") {
  Rng rng(303);
  int done = 0;
  for (int trial = 0; done < 12 && trial < 60; ++trial) {
    RationalParametrization rp(rng.qpoly(1 + trial % 3), rng.qpoly(1),
                               rng.qpoly(2), rng.qpoly(1 + trial % 2));
    try {
      int n = tracing_index(rp);  // throws if the two methods disagree
      CHECK(n >= 1);
      ++done;
    } catch (const DegenerateCurveError&) {
      continue;  // the random fractions collapsed to a constant
    }
  }
  CHECK(done == 12);
}

TEST_CASE("validate_curve rejects lines") {
  ValidationResult r = validate_curve(
      RationalParametrization(qp({0, 1}), qp({1}), qp({1, 2}), qp({1})));
  REQUIRE(std::holds_alternative<CurveRejection>(r));
  const CurveRejection& rej = std::get<CurveRejection>(r);
  CHECK(rej.kind == CurveRejectionKind::Line);
  CHECK(rej.witness == mpoly({{2, 1, 0}, {-1, 0, 1}, {1, 0, 0}}));

  ValidationResult v = validate_curve(
      RationalParametrization(qp({3}), qp({1}), qp({0, 1}), qp({1})));
  REQUIRE(std::holds_alternative<CurveRejection>(v));
  CHECK(std::get<CurveRejection>(v).kind == CurveRejectionKind::Line);
}

TEST_CASE("validate_curve rejects circles wherever centered") {
  ValidationResult r = validate_curve(unit_circle());
  REQUIRE(std::holds_alternative<CurveRejection>(r));
  const CurveRejection& rej = std::get<CurveRejection>(r);
  CHECK(rej.kind == CurveRejectionKind::Circle);
  CHECK(rej.witness == mpoly({{1, 2, 0}, {1, 0, 2}, {-1, 0, 0}}));

  // Radius 2 around (1, 2): ((3-t^2)/(1+t^2), (2t^2+4t+2)/(1+t^2)).
  ValidationResult s = validate_curve(RationalParametrization(
      qp({3, 0, -1}), qp({1, 0, 1}), qp({2, 4, 2}), qp({1, 0, 1})));
  REQUIRE(std::holds_alternative<CurveRejection>(s));
  const CurveRejection& srej = std::get<CurveRejection>(s);
  CHECK(srej.kind == CurveRejectionKind::Circle);
  CHECK(srej.witness == mpoly({{1, 2, 0},
                               {1, 0, 2},
                               {-2, 1, 0},
                               {-4, 0, 1},
                               {1, 0, 0}}));
}

TEST_CASE("validate_curve rejects point images") {
  ValidationResult r = validate_curve(
      RationalParametrization(qp({3}), qp({1}), qp({5}), qp({1})));
  REQUIRE(std::holds_alternative<CurveRejection>(r));
  const CurveRejection& rej = std::get<CurveRejection>(r);
  CHECK(rej.kind == CurveRejectionKind::Degenerate);
  CHECK(rej.witness.is_zero());
}

TEST_CASE("validate_curve accepts non-circular conics and genuine curves") {
  {
    // Ellipse x^2 + y^2/4 = 1: a conic, but not a circle.
    ValidationResult r = validate_curve(RationalParametrization(
        qp({1, 0, -1}), qp({1, 0, 1}), qp({0, 4}), qp({1, 0, 1})));
    CHECK(std::holds_alternative<ValidatedCurve>(r));
  }
  {
    // Hyperbola (t, 1/t): degree-2 part has no square terms at all.
    ValidationResult r = validate_curve(
        RationalParametrization(qp({0, 1}), qp({1}), qp({1}), qp({0, 1})));
    CHECK(std::holds_alternative<ValidatedCurve>(r));
  }
  {
    ValidationResult r = validate_curve(parabola());
    CHECK(std::holds_alternative<ValidatedCurve>(r));
  }
  {
    ValidationResult r = validate_curve(cardioid());
    REQUIRE(std::holds_alternative<ValidatedCurve>(r));
    const ValidatedCurve& vc = std::get<ValidatedCurve>(r);
    CHECK(vc.param.W == qp({1, 0, 32, 0, 256}));
    CHECK(vc.implicit_curve.f == cardioid_quartic());
    CHECK(vc.implicit_curve.tracing_index == 1);
    CHECK(vc.hodo.w == qp({0, 0, 65536}) * qp({1, 0, 16}).pow(5));
  }
}

TEST_CASE("rejection labels are stable identifiers") {
  CHECK(std::string(curve_rejection_label(CurveRejectionKind::Line)) ==
        "LineRejected");
  CHECK(std::string(curve_rejection_label(CurveRejectionKind::Circle)) ==
        "CircleRejected");
  CHECK(std::string(curve_rejection_label(CurveRejectionKind::Degenerate)) ==
        "DegenerateRejected");
}

TEST_CASE("reparametrize composes and re-reduces") {
  {
    RationalParametrization r =
        reparametrize(parabola(), qp({0, 0, 1}), qp({1}));
    CHECK(r.p1() == qp({0, 0, 1}));
    CHECK(r.q1() == qp({1}));
    CHECK(r.p2() == qp({0, 0, 0, 0, 1}));
    CHECK(r.q2() == qp({1}));
  }
  {
    // t <- (s+1)/(s-1) applied to (t, t^2).
    RationalParametrization r =
        reparametrize(parabola(), qp({1, 1}), qp({-1, 1}));
    CHECK(r.p1() == qp({1, 1}));
    CHECK(r.q1() == qp({-1, 1}));
    CHECK(r.p2() == qp({1, 2, 1}));
    CHECK(r.q2() == qp({1, -2, 1}));
  }
  {
    // Substituting into x = t/(t+1) must keep fractions reduced.
    RationalParametrization rp(qp({0, 1}), qp({1, 1}), qp({0, 0, 1}),
                               qp({1}));
    RationalParametrization r = reparametrize(rp, qp({0, 0, 1}), qp({1}));
    CHECK(r.p1() == qp({0, 0, 1}));
    CHECK(r.q1() == qp({1, 0, 1}));
    CHECK(r.p2() == qp({0, 0, 0, 0, 1}));
  }
  CHECK_THROWS_AS(reparametrize(parabola(), qp({2}), qp({1})),
                  std::invalid_argument);
  // (2t+2)/(t+1) is the constant 2 in disguise.
  CHECK_THROWS_AS(reparametrize(parabola(), qp({2, 2}), qp({1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(reparametrize(parabola(), qp({0, 1}), qp({})),
                  std::invalid_argument);
}
