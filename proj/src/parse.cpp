#include "offsetal/parse.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "offsetal/polyops.hpp"

namespace offsetal {

namespace {

// A rational function in t kept as an exact numerator/denominator pair; the
// denominator is nonzero by construction and reduction is deferred to the
// RationalParametrization constructor.
struct RatFn {
  QPoly num;
  QPoly den{Rational(1)};
};

RatFn rf_add(const RatFn& a, const RatFn& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}
RatFn rf_sub(const RatFn& a, const RatFn& b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}
RatFn rf_mul(const RatFn& a, const RatFn& b) { return {a.num * b.num, a.den * b.den}; }

class ExprParser {
 public:
  ExprParser(const std::string& src, int line, int column_base)
      : s_(src), line_(line), col0_(column_base) {}

  RatFn parse_all() {
    RatFn v = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col0_ + static_cast<int>(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      d += s_[pos_++];
    return d;
  }

  unsigned long read_uint(const char* what) {
    skip_ws();
    std::string d = read_digits();
    if (d.empty()) fail(std::string("expected ") + what);
    if (d.size() > 4) fail("exponent too large");
    return std::stoul(d);
  }

  RatFn expr() {
    RatFn v = term();
    for (;;) {
      if (eat('+'))
        v = rf_add(v, term());
      else if (eat('-'))
        v = rf_sub(v, term());
      else
        return v;
    }
  }

  RatFn term() {
    RatFn v = factor();
    for (;;) {
      if (eat('*')) {
        v = rf_mul(v, factor());
      } else if (eat('/')) {
        size_t at = pos_;
        RatFn d = factor();
        if (d.num.is_zero())
          throw ParseError("division by zero expression", line_, col0_ + static_cast<int>(at));
        v = rf_mul(v, {d.den, d.num});
      } else {
        // implicit multiplication such as `2t` or `t(t+1)` is rejected
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 't' ||
                                 std::isdigit(static_cast<unsigned char>(s_[pos_]))))
          fail("missing operator (implicit multiplication is not allowed)");
        return v;
      }
    }
  }

  RatFn factor() {
    RatFn v = base();
    if (eat('^')) {
      int e = static_cast<int>(read_uint("a nonnegative integer exponent"));
      return {v.num.pow(e), v.den.pow(e)};
    }
    return v;
  }

  RatFn base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFn v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 't') {
      ++pos_;
      return {QPoly::variable(), QPoly(Rational(1))};
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit;
      if (c == '-' || c == '+') {
        lit += c;
        ++pos_;
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          fail("expected a number after the sign");
      }
      lit += read_digits();
      if (eat('/')) {
        std::string d = read_digits();
        if (d.empty()) fail("expected a denominator");
        lit += "/" + d;
      }
      Rational r;
      try {
        r = Rational::from_string(lit);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      return {QPoly(r), QPoly(Rational(1))};
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_;
  int col0_;
};

// Splits off `name = <rest>` from a source line; returns the expression text
// and the column where it starts.
std::pair<std::string, int> strip_assignment(const std::string& src, char name, int line) {
  size_t i = 0;
  while (i < src.size() && (src[i] == ' ' || src[i] == '\t')) ++i;
  if (i >= src.size() || src[i] != name)
    throw ParseError(std::string("expected '") + name + " = ...'", line,
                     static_cast<int>(i) + 1);
  ++i;
  while (i < src.size() && (src[i] == ' ' || src[i] == '\t')) ++i;
  if (i >= src.size() || src[i] != '=')
    throw ParseError("expected '='", line, static_cast<int>(i) + 1);
  ++i;
  return {src.substr(i), static_cast<int>(i) + 1};
}

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational_strict(const std::string& text) {
  return Rational::from_string(text);  // already enforces int ('/' uint)?
}

CurveInput parse_curve_document(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  lines.push_back(cur);

  RatFn comps[2];
  std::string raw[2];
  int found = 0;
  for (size_t li = 0; li < lines.size(); ++li) {
    std::string line = lines[li];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank_or_comment(line)) continue;
    int lineno = static_cast<int>(li) + 1;
    if (found == 2) throw ParseError("unexpected extra input line", lineno, 1);
    char expect = found == 0 ? 'x' : 'y';
    auto [expr_text, col] = strip_assignment(line, expect, lineno);
    comps[found] = ExprParser(expr_text, lineno, col).parse_all();
    size_t b = expr_text.find_first_not_of(" \t");
    size_t e = expr_text.find_last_not_of(" \t");
    raw[found] = b == std::string::npos ? std::string() : expr_text.substr(b, e - b + 1);
    ++found;
  }
  if (found < 2)
    throw ParseError(found == 0 ? "missing 'x = ...' line" : "missing 'y = ...' line",
                     static_cast<int>(lines.size()), 1);
  return {raw[0], raw[1],
          RationalParametrization(comps[0].num, comps[0].den, comps[1].num, comps[1].den)};
}

RationalParametrization parse_curve_text(const std::string& text) {
  return parse_curve_document(text).param;
}

}  // namespace offsetal
