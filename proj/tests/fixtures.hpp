#pragma once

// Reference inputs and frozen expected values shared by the unit tests and the
// acceptance runner. Every polynomial here was fixed independently of the
// library (hand derivation or published reference data) and must not be
// regenerated from library output.

#include <initializer_list>
#include <tuple>
#include <vector>

#include "offsetal/curve.hpp"
#include "offsetal/multipoly.hpp"

namespace offsetal::testing {

inline QPoly fx_qp(const std::vector<long>& cs) {
  QPoly r;
  for (size_t i = 0; i < cs.size(); ++i) r.set_coeff(static_cast<int>(i), Rational(cs[i]));
  return r;
}

inline MultiPoly fx_mp(std::initializer_list<std::tuple<long, int, int>> terms) {
  MultiPoly r;
  for (const auto& [c, dx, dy] : terms) r.add_term(Rational(c), dx, dy);
  return r;
}

// ---------- input parametrizations ----------

// (t, t^2): the parabola y = x^2, proper.
inline RationalParametrization fx_parabola() {
  return RationalParametrization(fx_qp({0, 1}), fx_qp({1}), fx_qp({0, 0, 1}), fx_qp({1}));
}

// (t^2, t^4): the same parabola traced twice.
inline RationalParametrization fx_parabola_doubled() {
  return RationalParametrization(fx_qp({0, 0, 1}), fx_qp({1}), fx_qp({0, 0, 0, 0, 1}),
                                 fx_qp({1}));
}

// (-1024 t^3 / (16t^2+1)^2, -128 t^2 (16t^2-1) / (16t^2+1)^2): cardioid, proper.
inline RationalParametrization fx_cardioid() {
  QPoly den = fx_qp({1, 0, 16}) * fx_qp({1, 0, 16});
  return RationalParametrization(fx_qp({0, 0, 0, -1024}), den,
                                 fx_qp({0, 0, 128, 0, -2048}), den);
}

// Degree-8 proper parametrization of the distance-1 offset of the cardioid.
inline RationalParametrization fx_cardioid_offset() {
  QPoly num1 = fx_qp({-9, 0, 1}) * fx_qp({729, 0, -1053, 3456, -117, 0, 1});
  QPoly num2 = fx_qp({0, -18}) * fx_qp({729, -1296, -189, 864, -21, -16, 1});
  QPoly den = fx_qp({9, 0, 1}).pow(4);
  return RationalParametrization(num1, den, num2, den);
}

// Degree-12 parametrization of the distance-6 offset of y = x^2/4, tracing the
// curve twice.
inline RationalParametrization fx_parabola_offset6() {
  QPoly num1 = fx_qp({0, 0, 4}) * fx_qp({-1, 0, -6, 0, 0, 0, 6, 0, 1});
  QPoly num2 = fx_qp({1, 0, 0, 0, -1, 0, -48, 0, -1, 0, 0, 0, 1});
  QPoly den = fx_qp({0, 0, 0, 0, 4}) * fx_qp({1, 0, 0, 0, 1});
  return RationalParametrization(num1, den, num2, den);
}

// ((t^3 - 3t)/3, t^2): cubic with hodograph norm (a perfect square), so the
// offset branches are rational; it also has no isotropic tangents or
// asymptotes, hence no extraneous factors at all.
inline RationalParametrization fx_square_hodograph_cubic() {
  return RationalParametrization(fx_qp({0, -3, 0, 1}), fx_qp({3}), fx_qp({0, 0, 1}),
                                 fx_qp({1}));
}

// ((t^2+1)/(t^2-1), t/(t^2-1)): hyperbola x^2 - 4y^2 = 1; its eliminant system
// has a y-dependent leading parameter coefficient, exercising the resample
// path of the line check.
inline RationalParametrization fx_hyperbola() {
  QPoly den = fx_qp({-1, 0, 1});
  return RationalParametrization(fx_qp({1, 0, 1}), den, fx_qp({0, 1}), den);
}

// ---------- frozen reference polynomials ----------

// Implicit equation of the cardioid.
inline MultiPoly fx_cardioid_quartic() {
  return fx_mp({{1, 4, 0},
                {2, 2, 2},
                {1, 0, 4},
                {8, 2, 1},
                {8, 0, 3},
                {-16, 2, 0}});
}

// Offset part of the distance-1 offset of the cardioid (degree 8, published).
inline MultiPoly fx_cardioid_offset_F() {
  return fx_mp({{1, 8, 0},    {4, 6, 2},   {6, 4, 4},   {4, 2, 6},  {1, 0, 8},
                {16, 6, 1},   {48, 4, 3},  {48, 2, 5},  {16, 0, 7}, {-35, 6, 0},
                {-9, 4, 2},   {87, 2, 4},  {61, 0, 6},  {-292, 4, 1},
                {-328, 2, 3}, {-36, 0, 5}, {211, 4, 0}, {-234, 2, 2},
                {-189, 0, 4}, {-40, 2, 1}, {-232, 0, 3},
                {-429, 2, 0}, {131, 0, 2}, {316, 0, 1}, {252, 0, 0}});
}

// Extraneous conic of the distance-1 offset of the cardioid.
inline MultiPoly fx_cardioid_G() {
  return fx_mp({{1, 2, 0}, {1, 0, 2}, {4, 0, 1}, {4, 0, 0}});
}

// Simple part of the distance-1 offset of the cardioid offset (degree 8,
// published); the special part is the cardioid itself.
inline MultiPoly fx_offset_of_offset_f1() {
  return fx_mp({{1, 8, 0},    {4, 6, 2},    {6, 4, 4},    {4, 2, 6},   {1, 0, 8},
                {16, 6, 1},   {48, 4, 3},   {48, 2, 5},   {16, 0, 7},
                {-44, 6, 0},  {-36, 4, 2},  {60, 2, 4},   {52, 0, 6},
                {-400, 4, 1}, {-544, 2, 3}, {-144, 0, 5}, {112, 4, 0},
                {-864, 2, 2}, {-720, 0, 4}, {128, 2, 1},  {-640, 0, 3},
                {-768, 2, 0}, {2048, 0, 2}, {4864, 0, 1}, {3840, 0, 0}});
}

// Simple part of the distance-6 offset of the doubly traced parabola offset
// (degree 6, published); the special part is x^2 - 4y.
inline MultiPoly fx_parabola_offset6_f1() {
  return fx_mp({{1, 6, 0},     {1, 4, 2},      {-10, 4, 1},    {-8, 2, 3},
                {-431, 4, 0},  {-256, 2, 2},   {16, 0, 4},     {280, 2, 1},
                {-1184, 0, 3}, {59328, 2, 0},  {19600, 0, 2},  {170496, 0, 1},
                {-3154176, 0, 0}});
}

inline MultiPoly fx_parabola_offset6_f2() {
  return fx_mp({{1, 2, 0}, {-4, 0, 1}});
}

// Base of the extraneous factor of that offset: x^2 + y^2 - 2y + 1.
inline MultiPoly fx_parabola_offset6_extraneous_base() {
  return fx_mp({{1, 2, 0}, {1, 0, 2}, {-2, 0, 1}, {1, 0, 0}});
}

// Isotropic-line quartic attached to the parabola (t, t^2): the two tangent
// parameters +-i/2 carry the conjugate line pairs through (+-i/2, -1/4);
// multiplying the four lines out gives (16x^2+16y^2+8y-3)^2 + 256 x^2 up to a
// constant.  This is the candidate produced by the finite isotropic-tangent
// source; for this curve it happens not to divide the eliminant, which is why
// candidates are only ever used through gcds.
inline MultiPoly fx_parabola_line_quartic() {
  MultiPoly s = fx_mp({{16, 2, 0}, {16, 0, 2}, {8, 0, 1}, {-3, 0, 0}});
  return s * s + fx_mp({{256, 2, 0}});
}

}  // namespace offsetal::testing
