#ifndef OFFSETAL_PARSE_HPP
#define OFFSETAL_PARSE_HPP

#include <stdexcept>
#include <string>

#include "offsetal/curve.hpp"

namespace offsetal {

// Syntax or semantic error in curve input text, carrying the 1-based source
// position it was detected at.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Exact rational literal per the input grammar: `int` or `int/uint` with an
// optional leading sign, nothing else (no decimals, no exponents).  Throws
// std::invalid_argument otherwise.
Rational parse_rational_strict(const std::string& text);

// A parsed curve document: the raw right-hand-side expression texts plus the
// reduced parametrization they evaluate to.
struct CurveInput {
  std::string x_text;
  std::string y_text;
  RationalParametrization param;
};

// Parses a curve input document: a line `x = <expr>` and a line `y = <expr>`
// (in that order; blank lines and `#` comment lines are ignored).  Expressions
// use the grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' uint)?
//   base   := '(' expr ')' | 't' | rational
// with exact rational-function arithmetic; implicit multiplication is a
// syntax error, and division by an expression that reduces to zero is
// reported at its position.
CurveInput parse_curve_document(const std::string& text);

// Convenience wrapper returning only the reduced parametrization.
RationalParametrization parse_curve_text(const std::string& text);

}  // namespace offsetal

#endif  // OFFSETAL_PARSE_HPP
