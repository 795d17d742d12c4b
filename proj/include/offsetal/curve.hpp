#pragma once

#include <stdexcept>
#include <variant>

#include "offsetal/polyops.hpp"

namespace offsetal {

// Two independent computations of the same quantity disagreed.  This always
// signals a defect in the library itself, never bad user input, and callers
// are expected to let it propagate rather than pick one of the answers.
class InternalInconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The parametrization maps every parameter value to one fixed point.
class DegenerateCurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Plane curve given componentwise as t -> (p1(t)/q1(t), p2(t)/q2(t)).
// Construction reduces each fraction and makes its denominator monic, so the
// stored representation depends only on the point map.
class RationalParametrization {
 public:
  // Throws std::invalid_argument when a denominator is identically zero.
  RationalParametrization(QPoly p1, QPoly q1, QPoly p2, QPoly q2);

  const QPoly& p1() const { return p1_; }
  const QPoly& q1() const { return q1_; }
  const QPoly& p2() const { return p2_; }
  const QPoly& q2() const { return q2_; }

 private:
  QPoly p1_, q1_, p2_, q2_;
};

// Common-denominator form (X/W, Y/W) with gcd(X, Y, W) = 1, all coefficients
// integers of overall content 1, and positive leading coefficient on W.
struct NormalizedParametrization {
  QPoly X, Y, W;
};

// First-derivative data of a normalized parametrization.
struct Hodograph {
  QPoly U;  // X'W - XW'
  QPoly V;  // Y'W - YW'
  QPoly w;  // U^2 + V^2; nonzero whenever the curve is not a single point
};

// Squarefree implicit equation f of the traced curve, the tracing index n,
// and the constant c such that c * f^n equals the elimination resultant
// Res_t(W(t)x - X(t), W(t)y - Y(t)) exactly.
struct ImplicitCurve {
  MultiPoly f;
  int tracing_index = 0;
  Rational constant;
};

enum class CurveRejectionKind { Line, Circle, Degenerate };

// Stable identifier used in diagnostics and reports.
const char* curve_rejection_label(CurveRejectionKind k);

struct CurveRejection {
  CurveRejectionKind kind;
  // Implicit equation that triggered the rejection; zero for Degenerate,
  // where no curve equation exists.
  MultiPoly witness;
};

// Everything later pipeline stages need about an accepted input curve.
struct ValidatedCurve {
  RationalParametrization input;
  NormalizedParametrization param;
  Hodograph hodo;
  ImplicitCurve implicit_curve;
};

using ValidationResult = std::variant<ValidatedCurve, CurveRejection>;

NormalizedParametrization normalize(const RationalParametrization& rp);

// Throws DegenerateCurveError when both derivatives vanish identically.
Hodograph hodograph(const NormalizedParametrization& np);

// Eliminate t from (W(t)x - X(t), W(t)y - Y(t)) and split the resultant as
// constant * f^n with f squarefree.  Also checks that f vanishes at sample
// points of the curve.  Throws DegenerateCurveError for point images.
ImplicitCurve implicitize(const NormalizedParametrization& np);
ImplicitCurve implicitize(const RationalParametrization& rp);

// Degree in s of gcd(X(t)W(s) - X(s)W(t), Y(t)W(s) - Y(s)W(t)).  Counts the
// parameter values that hit a generic curve point, i.e. the tracing index,
// by a route independent of the elimination resultant.
int tracing_index_by_parameter_pairing(const NormalizedParametrization& np);

// Tracing index computed by both methods above; throws
// InternalInconsistencyError when they disagree.
int tracing_index(const RationalParametrization& rp);

// Rejects lines, circles and point images; accepts everything else and
// returns the bundle of derived data.
ValidationResult validate_curve(const RationalParametrization& rp);

// Substitute t <- subst_num(s)/subst_den(s) into the parametrization.
// Throws std::invalid_argument when the substitution is constant or its
// denominator is identically zero.
RationalParametrization reparametrize(const RationalParametrization& rp,
                                      const QPoly& subst_num,
                                      const QPoly& subst_den);

}  // namespace offsetal
