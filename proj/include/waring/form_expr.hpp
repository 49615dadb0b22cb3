#ifndef WARING_FORM_EXPR_HPP
#define WARING_FORM_EXPR_HPP

// Exact parser for human-written binary-form expressions such as
// "(x-2y)^3*(x+y)", "x^2y^2", or "1/4(x+y)^2 - 1/4(x-y)^2".
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*' | '/') factor | factor)*    (juxtaposition multiplies)
//   factor  := primary ['^' natural]
//   primary := natural | 'x' | 'y' | '(' expr ')'
//
// '/' requires a constant divisor.  Expansion is exact rational arithmetic; the
// expanded result must be homogeneous and nonzero, and parse_form returns it as
// a BinaryForm of the unique degree present.

#include <cctype>
#include <map>
#include <string>
#include <utility>

#include "binary_form.hpp"
#include "rational.hpp"

namespace waring {

namespace detail {

// A not-necessarily-homogeneous polynomial in x, y: its nonzero homogeneous
// components keyed by total degree.  Only the handful of ring operations the
// parser needs.
struct MixedPoly {
  std::map<int, BinaryForm> comp;

  static MixedPoly constant(const Rat& c) {
    MixedPoly p;
    if (c != 0) {
      BinaryForm f(0);
      f.set_coeff(0, c);
      p.comp.emplace(0, f);
    }
    return p;
  }

  static MixedPoly variable(bool is_x) {
    MixedPoly p;
    p.comp.emplace(1, is_x ? BinaryForm::linear(Rat(1), Rat(0))
                           : BinaryForm::linear(Rat(0), Rat(1)));
    return p;
  }

  void absorb(int deg, const BinaryForm& f) {
    auto it = comp.find(deg);
    if (it == comp.end()) {
      if (!f.is_zero()) comp.emplace(deg, f);
      return;
    }
    it->second = it->second + f;
    if (it->second.is_zero()) comp.erase(it);
  }

  friend MixedPoly operator+(const MixedPoly& a, const MixedPoly& b) {
    MixedPoly r = a;
    for (const auto& [deg, f] : b.comp) r.absorb(deg, f);
    return r;
  }

  friend MixedPoly operator*(const MixedPoly& a, const MixedPoly& b) {
    MixedPoly r;
    for (const auto& [da, fa] : a.comp)
      for (const auto& [db, fb] : b.comp) r.absorb(da + db, fa * fb);
    return r;
  }

  MixedPoly scaled(const Rat& c) const {
    MixedPoly r;
    if (c == 0) return r;
    for (const auto& [deg, f] : comp) r.comp.emplace(deg, c * f);
    return r;
  }

  bool is_constant() const {
    return comp.empty() || (comp.size() == 1 && comp.begin()->first == 0);
  }

  Rat constant_value() const { return comp.empty() ? Rat(0) : comp.begin()->second.coeff(0); }

  MixedPoly pow(long e) const {
    MixedPoly r = constant(Rat(1));
    for (long i = 0; i < e; ++i) r = r * *this;
    return r;
  }
};

class FormExprParser {
 public:
  explicit FormExprParser(const std::string& src) : src_(src) {}

  MixedPoly parse() {
    MixedPoly v = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw domain_error("form expression: " + what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Int parse_natural() {
    skip_ws();
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      digits += src_[pos_++];
    if (digits.empty()) fail("expected a number");
    return Int(digits);
  }

  MixedPoly parse_primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MixedPoly v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      return MixedPoly::variable(c == 'x');
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return MixedPoly::constant(Rat(parse_natural()));
    fail(c == '\0' ? std::string("unexpected end of input")
                   : "unexpected character '" + std::string(1, c) + "'");
  }

  MixedPoly parse_factor() {
    MixedPoly base = parse_primary();
    if (eat('^')) {
      const Int e = parse_natural();
      if (e > 64) fail("exponent too large");
      return base.pow(e.get_si());
    }
    return base;
  }

  // true when the upcoming token can start a factor (for juxtaposition)
  bool at_factor_start() {
    const char c = peek();
    return c == '(' || c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c));
  }

  MixedPoly parse_term() {
    MixedPoly v = parse_factor();
    for (;;) {
      if (eat('*')) {
        v = v * parse_factor();
      } else if (eat('/')) {
        MixedPoly divisor = parse_factor();
        if (!divisor.is_constant()) fail("division by a non-constant");
        const Rat dv = divisor.constant_value();
        if (dv == 0) fail("division by zero");
        v = v.scaled(1 / dv);
      } else if (at_factor_start()) {
        v = v * parse_factor();
      } else {
        return v;
      }
    }
  }

  MixedPoly parse_expr() {
    MixedPoly v;
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    v = parse_term();
    if (negate) v = v.scaled(Rat(-1));
    for (;;) {
      if (eat('+'))
        v = v + parse_term();
      else if (eat('-'))
        v = v + parse_term().scaled(Rat(-1));
      else
        return v;
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parse and exactly expand a binary-form expression.  Throws domain_error on
// syntax errors, on the zero form, and on inhomogeneous expressions.
inline BinaryForm parse_form(const std::string& text) {
  detail::FormExprParser parser(text);
  const detail::MixedPoly p = parser.parse();
  if (p.comp.empty()) throw domain_error("form expression: expands to the zero form");
  if (p.comp.size() > 1)
    throw domain_error("form expression: not homogeneous (degrees " +
                       std::to_string(p.comp.begin()->first) + " and " +
                       std::to_string(p.comp.rbegin()->first) + " present)");
  return p.comp.begin()->second;
}

}  // namespace waring

#endif  // WARING_FORM_EXPR_HPP
