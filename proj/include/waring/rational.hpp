#ifndef WARING_RATIONAL_HPP
#define WARING_RATIONAL_HPP

// Exact arithmetic primitives shared by the whole library.
//
// Rat is GMP's canonical rational (always reduced, denominator > 0); Int is an
// arbitrary-precision integer.  Everything downstream relies on these invariants,
// so construction from raw numerator/denominator goes through make_rat / rat_from_string
// which canonicalize and reject zero denominators.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace waring {

using Int = mpz_class;
using Rat = mpq_class;

// Input or argument violates a documented precondition.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural invariant the library itself guarantees was violated: a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Accepts "n" or "n/d" with optional leading '-'; rejects anything else.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw domain_error("empty rational literal");
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits(s)) throw domain_error("malformed rational literal: " + s);
    return Rat(Int(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!digits(num) || !digits(den) || den[0] == '-' || den[0] == '+')
    throw domain_error("malformed rational literal: " + s);
  return make_rat(Int(num), Int(den));
}

// Always "num/den", so serialized values round-trip without a format switch.
inline std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int int_pow(Int base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  return r;  // powers of a canonical rational are canonical
}

inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

// falling factorial n·(n-1)···(n-k+1); exact, 1 when k == 0
inline Int falling(long n, long k) {
  Int r = 1;
  for (long i = 0; i < k; ++i) r *= Int(n - i);
  return r;
}

// Minimal-denominator rational in the closed interval [a, b] (Stern–Brocot /
// continued-fraction descent).  Used for exact rational-root reconstruction.
inline Rat simplest_rational_in(const Rat& a, const Rat& b) {
  if (a > b) throw internal_error("simplest_rational_in: empty interval");
  if (a <= 0 && 0 <= b) return Rat(0);
  if (b < 0) return -simplest_rational_in(-b, -a);
  // 0 < a <= b
  Int fa = rat_floor(a);
  if (Rat(fa) + 1 <= b) {
    // an integer lies in [a, b]
    return Rat(rat_ceil(a));
  }
  const Rat ra = a - Rat(fa), rb = b - Rat(fa);
  if (ra == 0) return Rat(fa);
  return Rat(fa) + 1 / simplest_rational_in(1 / rb, 1 / ra);
}

}  // namespace waring

#endif  // WARING_RATIONAL_HPP
