#ifndef OFFSETAL_TEXTFORM_HPP
#define OFFSETAL_TEXTFORM_HPP

#include <string>

#include "offsetal/multipoly.hpp"
#include "offsetal/polyops.hpp"

namespace offsetal {

// Canonical text rendering used in JSON output and golden files.
// Terms appear in graded-lex order (x before y), exponents use `^`, products
// `*`, unit coefficients are omitted next to variables, and separators are
// ` + ` / ` - `; e.g. `x^4 + 2*x^2*y^2 + y^4 + 8*x^2*y + 8*y^3 - 16*x^2`.
std::string rational_text(const Rational& r);
std::string poly_text(const MultiPoly& f);
std::string poly_text(const QPoly& f, const std::string& var);

}  // namespace offsetal

#endif  // OFFSETAL_TEXTFORM_HPP
