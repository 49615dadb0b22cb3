#ifndef WARING_BINARY_FORM_HPP
#define WARING_BINARY_FORM_HPP

// Homogeneous binary forms over Q in the plain monomial basis:
//   f = sum_{i=0..d} a_i x^i y^(d-i),  coeff(i) = a_i.
// A form carries an explicit degree; the zero form of each degree is legal.
// apply_apolar realizes h(dx, dy) acting on f by differentiation.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "unipoly.hpp"

namespace waring {

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

class BinaryForm {
 public:
  BinaryForm() : a_(1, Rat(0)) {}
  explicit BinaryForm(int degree) : a_(check_degree(degree) + 1, Rat(0)) {}
  BinaryForm(int degree, std::vector<Rat> coeffs) : a_(std::move(coeffs)) {
    if (static_cast<int>(a_.size()) != check_degree(degree) + 1)
      throw domain_error("BinaryForm: coefficient count does not match degree");
  }

  int degree() const { return static_cast<int>(a_.size()) - 1; }
  const Rat& coeff(int i) const { return a_[checked(i)]; }
  void set_coeff(int i, const Rat& v) { a_[checked(i)] = v; }
  const std::vector<Rat>& coeffs() const { return a_; }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  // a*x + b*y as a degree-1 form
  static BinaryForm linear(const Rat& a, const Rat& b) {
    return BinaryForm(1, {b, a});
  }

  // (a*x + b*y)^d
  static BinaryForm linear_power(const Rat& a, const Rat& b, int d) {
    BinaryForm f(d);
    Rat apow = 1;
    for (int i = 0; i <= d; ++i) {
      f.a_[static_cast<std::size_t>(i)] =
          Rat(binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(i))) * apow *
          rat_pow(b, static_cast<unsigned long>(d - i));
      apow *= a;
    }
    return f;
  }

  // x^i y^(d-i)
  static BinaryForm monomial(int d, int i) {
    BinaryForm f(d);
    f.set_coeff(i, Rat(1));
    return f;
  }

  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) throw domain_error("form addition: degree mismatch");
    BinaryForm r(f.degree());
    for (std::size_t i = 0; i < f.a_.size(); ++i) r.a_[i] = f.a_[i] + g.a_[i];
    return r;
  }

  friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) throw domain_error("form subtraction: degree mismatch");
    BinaryForm r(f.degree());
    for (std::size_t i = 0; i < f.a_.size(); ++i) r.a_[i] = f.a_[i] - g.a_[i];
    return r;
  }

  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
    BinaryForm r(f.degree() + g.degree());
    for (std::size_t i = 0; i < f.a_.size(); ++i) {
      if (f.a_[i] == 0) continue;
      for (std::size_t j = 0; j < g.a_.size(); ++j) r.a_[i + j] += f.a_[i] * g.a_[j];
    }
    return r;
  }

  friend BinaryForm operator*(const Rat& c, const BinaryForm& f) {
    BinaryForm r(f.degree());
    for (std::size_t i = 0; i < f.a_.size(); ++i) r.a_[i] = c * f.a_[i];
    return r;
  }

  BinaryForm operator-() const { return Rat(-1) * *this; }

  friend bool operator==(const BinaryForm& f, const BinaryForm& g) { return f.a_ == g.a_; }

  Rat eval(const Rat& x, const Rat& y) const {
    Rat result = 0, xpow = 1;
    std::vector<Rat> yp(a_.size());
    yp[a_.size() - 1] = 1;
    for (std::size_t i = a_.size() - 1; i > 0; --i) yp[i - 1] = yp[i] * y;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      result += a_[i] * xpow * yp[i];
      xpow *= x;
    }
    return result;
  }

  // f(t, 1) as a primitive integer polynomial with the sign of f preserved
  // (scaled by a positive rational only)
  ZPoly dehom_primitive() const {
    Int lcm = 1;
    for (const auto& v : a_) lcm = lcm * v.get_den() / gcd(lcm, v.get_den());
    std::vector<Int> z;
    z.reserve(a_.size());
    for (const auto& v : a_) z.push_back(v.get_num() * (lcm / v.get_den()));
    return ZPoly(std::move(z)).primitive();
  }

  // multiplicity of the root at infinity [1:0], i.e. the exponent of y dividing f
  int inf_multiplicity() const {
    if (is_zero()) throw domain_error("inf_multiplicity: zero form");
    int top = degree();
    while (a_[static_cast<std::size_t>(top)] == 0) --top;
    return degree() - top;
  }

  // positive-rational rescaling to coprime integer coefficients, then sign-normalized
  // so the highest nonzero coefficient is positive; zero forms are returned unchanged
  BinaryForm canonicalized() const {
    if (is_zero()) return *this;
    Int lcm = 1;
    for (const auto& v : a_) lcm = lcm * v.get_den() / gcd(lcm, v.get_den());
    Int content = 0;
    for (const auto& v : a_) content = gcd(content, Int(v.get_num() * (lcm / v.get_den())));
    Rat scale = make_rat(lcm, content);
    int top = degree();
    while (a_[static_cast<std::size_t>(top)] == 0) --top;
    if (a_[static_cast<std::size_t>(top)] < 0) scale = -scale;
    return scale * *this;
  }

 private:
  static int check_degree(int d) {
    if (d < 0) throw domain_error("BinaryForm: negative degree");
    return d;
  }
  std::size_t checked(int i) const {
    if (i < 0 || i > degree()) throw domain_error("BinaryForm: coefficient index out of range");
    return static_cast<std::size_t>(i);
  }

  std::vector<Rat> a_;  // a_[i] multiplies x^i y^(d-i); size is degree+1
};

// h(dx, dy) applied to f; requires deg h <= deg f.  Result degree is deg f - deg h.
inline BinaryForm apply_apolar(const BinaryForm& h, const BinaryForm& f) {
  const int e = h.degree(), d = f.degree();
  if (e > d) throw domain_error("apply_apolar: operator degree exceeds form degree");
  BinaryForm out(d - e);
  for (int r = 0; r <= d - e; ++r) {
    Rat acc = 0;
    for (int j = 0; j <= e; ++j) {
      if (h.coeff(j) == 0) continue;
      acc += h.coeff(j) * f.coeff(r + j) *
             Rat(falling(r + j, j) * falling(d - r - j, e - j));
    }
    out.set_coeff(r, acc);
  }
  return out;
}

// True when f has d distinct projective roots over C (no repeated factor,
// counting the root at [1:0] through the y-multiplicity).
inline bool has_distinct_roots(const BinaryForm& f) {
  if (f.is_zero()) throw domain_error("has_distinct_roots: zero form");
  if (f.inf_multiplicity() > 1) return false;
  const ZPoly q = f.dehom_primitive();
  return q.deg() == 0 || is_squarefree(q);
}

// Pretty printer: "x^3 - 1/2*x*y^2 + y^3" style, highest x-power first.
inline std::string format_form(const BinaryForm& f) {
  if (f.is_zero()) return "0";
  const int d = f.degree();
  std::ostringstream os;
  bool first = true;
  for (int i = d; i >= 0; --i) {
    const Rat& c = f.coeff(i);
    if (c == 0) continue;
    const Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string vars;
    if (i > 0) vars += (i == 1) ? "x" : "x^" + std::to_string(i);
    if (i < d) {
      if (!vars.empty()) vars += "*";
      vars += (d - i == 1) ? "y" : "y^" + std::to_string(d - i);
    }
    const std::string mag_str =
        mag.get_den() == 1 ? mag.get_num().get_str() : rat_to_string(mag);
    if (vars.empty()) {
      os << mag_str;
    } else {
      if (mag != 1) os << mag_str << "*";
      os << vars;
    }
  }
  return os.str();
}

}  // namespace waring

#endif  // WARING_BINARY_FORM_HPP
