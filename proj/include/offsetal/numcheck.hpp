#ifndef OFFSETAL_NUMCHECK_HPP
#define OFFSETAL_NUMCHECK_HPP

#include <complex>
#include <string>
#include <vector>

#include "offsetal/offset.hpp"

namespace offsetal {

// Centralized floating-point tolerances for the numeric cross-checks.  All
// thresholds live here so that CI behavior is reproducible and the CLI can
// override them in one place.
struct NumTolerances {
  double residual_accept = 1e-6;  // below: numerically vanishing
  double residual_reject = 1e-2;  // above: numerically bounded away from zero
  double root_cluster = 1e-8;     // roots closer than this count once
  double guard = 1e-6;            // keep-away distance from excluded parameters
  double root_match = 1e-6;       // pairing distance between two root sets
};

// Compensated (error-free-transformation) Horner evaluation; coefficients are
// converted from exact rationals at evaluation time.
double eval_qp_double(const QPoly& f, double t);
double eval_mp_double(const MultiPoly& f, double x, double y);

// All complex roots of the polynomial with the given double coefficients
// (c[k] is the coefficient of degree k), via eigenvalues of the balanced
// companion matrix.  Near-zero leading coefficients are trimmed relative to
// the largest coefficient.  Constant polynomials have no roots.
std::vector<std::complex<double>> poly_roots(std::vector<double> coeffs);

// Real roots of an exact univariate polynomial, in increasing order;
// eigenvalues whose imaginary part is negligible relative to their size.
std::vector<double> real_roots_qp(const QPoly& f);

enum class Branch { Exterior, Interior };
const char* branch_label(Branch b);  // "ext" / "int"

struct Vec2 {
  double x = 0;
  double y = 0;
};

// One numeric point of the offset: the parameter, which of the two branches it
// came from, the offset point itself, the corresponding point on the input
// curve, and the unit normal the displacement was taken along (so that
// point = base_point + d * unit_normal on either branch).
struct OffsetSample {
  double t = 0;
  Branch branch = Branch::Exterior;
  Vec2 point;
  Vec2 base_point;
  Vec2 unit_normal;
};

// Samples both offset branches at each parameter value.  Parameters within the
// guard distance of a real root of the denominator W or of the hodograph norm
// w are skipped; each skip appends a human-readable notice when `notices` is
// given.  Output order is deterministic: for each t in input order, the
// exterior sample then the interior one.
std::vector<OffsetSample> sample_offset(const OffsetProblem& op,
                                        const std::vector<double>& ts,
                                        const NumTolerances& tol = {},
                                        std::vector<std::string>* notices = nullptr);

// Largest normalized residual max |f(point)| / (1 + max |coeff of f|) over the
// samples.  Throws std::invalid_argument on an empty sample list.
double residual_check(const MultiPoly& f, const std::vector<OffsetSample>& samples);

// Residual of f at one point under the residual_check normalization, together
// with the double-precision noise floor of that evaluation: the sum of the
// term magnitudes |c|*|x|^i*|y|^j scaled by the degree and machine epsilon,
// under the same normalization.  A residual below the floor carries no
// information — at points of large magnitude a high-degree polynomial cannot
// be resolved near zero in doubles, and callers must treat such evaluations
// as unresolvable rather than as evidence either way.
struct PointResidual {
  double residual = 0;
  double noise_floor = 0;
};
PointResidual point_residual(const MultiPoly& f, const Vec2& point);

// Number of distinct parameter values (real or complex, clustered within the
// root-cluster tolerance) that solve both eliminant equations at the given
// point — i.e. how many curve points generate this offset point.  A generic
// point of a simple component yields the tracing index n, a generic point of
// a special component 2n.  Borderline root pairings append a widened-tolerance
// warning to `notices` when given.
int count_generators(const OffsetProblem& op, Vec2 point,
                     const NumTolerances& tol = {},
                     std::vector<std::string>* notices = nullptr);

enum class PlotFormat { Svg, Csv };

struct PlotOptions {
  double t_min = -1;
  double t_max = 1;
  int count = 200;        // number of parameter values sampled
  PlotFormat format = PlotFormat::Svg;
};

// Writes plot data for the offset to `path`.  SVG: the input curve in red,
// both offset branches in black, and — when the report certifies a special
// component — the samples lying on it re-traced dash-dot.  CSV: header
// `t,branch,x,y` with branch in {ext,int} and %.12g formatting.  Throws
// std::invalid_argument on an empty sample range and std::runtime_error on an
// unwritable path.
void emit_plot(const OffsetProblem& op, const StructureReport& report,
               const std::string& path, const PlotOptions& opts,
               const NumTolerances& tol = {});

}  // namespace offsetal

#endif  // OFFSETAL_NUMCHECK_HPP
