#pragma once

#include <string>
#include <vector>

#include "offsetal/curve.hpp"
#include "offsetal/gauss.hpp"

namespace offsetal {

// One offset computation: an accepted curve plus an exact positive distance.
struct OffsetProblem {
  NormalizedParametrization np;
  Hodograph h;
  Rational d;
  Rational d_squared;
  int tracing_index = 0;
  // Test hook: pretend the extraneous-candidate machinery is broken.  The
  // classifier then refuses to certify anything instead of guessing.
  bool corrupt_extraneous_for_testing = false;
};

// Throws std::invalid_argument unless d > 0.
OffsetProblem make_offset_problem(const ValidatedCurve& vc, const Rational& d);

// The eliminant system.  With A = Wx - X and B = Wy - Y:
//   p_full = U*A + V*B,   q_full = A^2 + B^2 - d^2 W^2,
// and P, Q are their primitive parts in the t-direction, with the removed
// contents recorded so p_full = content_p * P holds exactly.
struct PQSystem {
  TPoly P, Q;
  QPoly removed_content_p, removed_content_q;
};

PQSystem build_pq(const OffsetProblem& op);

// Res_t(P, Q) split as constant * H with H canonical; throws
// InternalInconsistencyError when the resultant vanishes identically.
struct OffsetResultant {
  MultiPoly H;
  Rational constant;
};

OffsetResultant offset_resultant(const PQSystem& pq);

// Candidate equation covering the extraneous factors of H: the product of
// isotropic-line pairs attached to the curve, assembled from two sources.
//   * Parameters where the tangent direction is isotropic: roots of the
//     odd-multiplicity kernel of w = U^2 + V^2 (factors shared with W
//     dropped), contributing the isotropic pairs through their curve points.
//   * Isotropic asymptotes: directions where the curve runs to infinity at a
//     circular point, recovered over Q(i) from the common roots of Y + iX
//     and W and the finite limits of (Y + iX)/W there.
// Canonical; equals 1 when no candidates exist.  The classifier treats this
// strictly as a hint and certifies every split independently.
MultiPoly extraneous_candidates(const OffsetProblem& op);

// Exact test whether g vanishes identically on at least one branch of the
// offset map.  Works in Q[t][s]/(s^2 - w(t)); when w is a perfect square
// sigma^2 the branches are rational and sigma is substituted directly.
// Nonzero constants return false.
bool membership_test(const OffsetProblem& op, const MultiPoly& g);

// Split off the maximal divisor of p that is a product of isotropic lines
// (factors involving only x + iy or only x - iy), p == constant*lines*rest.
// Sound for this pipeline because components of a genuine offset have
// Zariski-dense real points while products of isotropic lines never do.
struct LineSplit {
  MultiPoly lines;  // canonical; 1 when none
  MultiPoly rest;   // canonical
};
LineSplit split_isotropic_lines(const MultiPoly& p);

enum class FactorKind { OffsetSimple, OffsetSpecial, Extraneous, Unclassified };
const char* factor_kind_label(FactorKind k);

struct ClassifiedFactor {
  MultiPoly poly;  // canonical, squarefree
  int multiplicity_in_H = 0;
  FactorKind kind = FactorKind::Unclassified;
};

// Result of splitting H into offset part F and extraneous part G.
// complete == false means at least one factor stayed Unclassified; F and G
// then cover only the certified parts and no reconstruction claim is made.
struct SplitResult {
  MultiPoly F, G;
  std::vector<ClassifiedFactor> factors;
  bool complete = false;
  std::vector<std::string> diagnostics;
};

SplitResult classify_and_split(const MultiPoly& H, const OffsetProblem& op);

struct StructureReport {
  MultiPoly H, F, G;            // canonical
  Rational resultant_constant;  // Res_t(P, Q) == resultant_constant * H
  QPoly removed_content_p, removed_content_q;
  std::vector<ClassifiedFactor> factors;
  int tracing_index = 0;
  std::vector<int> exponent_pattern;  // offset-factor multiplicities, ascending
  bool has_special = false;
  MultiPoly f1_part, f2_part;  // products at multiplicity n and 2n; 1 if empty
  bool verdict_squarefree = false;
  bool theorem_pattern_ok = false;  // pattern contained in {n, 2n}
  bool complete = false;
  std::vector<std::string> diagnostics;
};

StructureReport structure_report(const OffsetProblem& op);

// is_offset is meaningful only when determined (the classification finished).
struct IsOffsetResult {
  bool determined = false;
  bool is_offset = false;
  MultiPoly special_equation;  // 1 when absent
};

IsOffsetResult is_offset_test(const OffsetProblem& op);
IsOffsetResult is_offset_from_report(const StructureReport& report);

// Cross-check of the report along the line y = y0: the resultant of the
// specialized system must match H(x, y0) and the x-root multiplicities must
// match the factor multiplicities.  Failures are recorded, never thrown;
// usable_y0 == false means y0 hit a leading-coefficient root and the caller
// should try another value.
struct SpecializationCheck {
  bool usable_y0 = false;
  bool resultant_matches = false;
  bool multiplicities_match = false;
  std::vector<std::string> notes;
};

SpecializationCheck verify_specialization(const OffsetProblem& op,
                                          const Rational& y0,
                                          const StructureReport& report);

}  // namespace offsetal
