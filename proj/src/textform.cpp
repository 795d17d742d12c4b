#include "offsetal/textform.hpp"

#include <sstream>
#include <vector>

namespace offsetal {

namespace {

std::string monomial_text(const std::vector<std::pair<std::string, int>>& vars) {
  std::string s;
  for (const auto& [name, e] : vars) {
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += name;
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

// Appends one term with coefficient c (nonzero) and the given monomial text.
void append_term(std::string& out, const Rational& c, const std::string& mono) {
  Rational a = c.abs();
  if (out.empty()) {
    if (c.sign() < 0) out += '-';
  } else {
    out += c.sign() < 0 ? " - " : " + ";
  }
  if (mono.empty()) {
    out += rational_text(a);
  } else {
    if (!a.is_one()) out += rational_text(a) + "*";
    out += mono;
  }
}

}  // namespace

std::string rational_text(const Rational& r) {
  std::string s = r.num().get_str();
  if (!r.is_integer()) s += "/" + r.den().get_str();
  return s;
}

std::string poly_text(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms())
    append_term(out, c, monomial_text({{"x", e.dx}, {"y", e.dy}}));
  return out;
}

std::string poly_text(const QPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    if (f.coeff(k).is_zero()) continue;
    append_term(out, f.coeff(k), monomial_text({{var, k}}));
  }
  return out;
}

}  // namespace offsetal
