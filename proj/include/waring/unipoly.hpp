#ifndef WARING_UNIPOLY_HPP
#define WARING_UNIPOLY_HPP

// Dense univariate polynomials over Z with exact Sturm machinery:
// sign-safe pseudo-remainder Sturm chains, real-root counting, isolation into
// rational intervals, squarefree tests, and exact rational-root extraction.
//
// All root counting is over the reals and exact; no floating point anywhere.

#include <algorithm>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace waring {

class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ZPoly constant(const Int& v) { return ZPoly(std::vector<Int>{v}); }

  // degree of the zero polynomial is -1
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Int& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& lead() const { return c_.back(); }

  ZPoly derivative() const {
    if (deg() <= 0) return ZPoly();
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Int(static_cast<long>(i)) * c_[i];
    return ZPoly(std::move(d));
  }

  ZPoly operator-() const {
    std::vector<Int> d = c_;
    for (auto& v : d) v = -v;
    return ZPoly(std::move(d));
  }

  friend ZPoly operator*(const ZPoly& p, const ZPoly& q) {
    if (p.is_zero() || q.is_zero()) return ZPoly();
    std::vector<Int> d(p.c_.size() + q.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) d[i + j] += p.c_[i] * q.c_[j];
    return ZPoly(std::move(d));
  }

  friend ZPoly operator-(const ZPoly& p, const ZPoly& q) {
    std::vector<Int> d(std::max(p.c_.size(), q.c_.size()), Int(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) d[i] = p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) d[i] -= q.c_[i];
    return ZPoly(std::move(d));
  }

  friend ZPoly operator+(const ZPoly& p, const ZPoly& q) {
    std::vector<Int> d(std::max(p.c_.size(), q.c_.size()), Int(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) d[i] = p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) d[i] += q.c_[i];
    return ZPoly(std::move(d));
  }

  friend bool operator==(const ZPoly& p, const ZPoly& q) { return p.c_ == q.c_; }

  ZPoly scaled(const Int& k) const {
    std::vector<Int> d = c_;
    for (auto& v : d) v *= k;
    return ZPoly(std::move(d));
  }

  // positive gcd of the coefficients; 0 for the zero polynomial
  Int content() const {
    Int g = 0;
    for (const auto& v : c_) g = gcd(g, v);
    return g;
  }

  // divide by the positive content (sign of the polynomial is preserved)
  ZPoly primitive() const {
    Int g = content();
    if (g == 0 || g == 1) return *this;
    std::vector<Int> d = c_;
    for (auto& v : d) v /= g;
    return ZPoly(std::move(d));
  }

  // sign of p(u/v) with v > 0, via the homogeneous integer value sum c_i u^i v^(n-i)
  int sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    const Int u = x.get_num(), v = x.get_den();
    Int acc = 0, upow = 1;
    std::vector<Int> vpow(c_.size());
    vpow[c_.size() - 1] = 1;
    for (std::size_t i = c_.size() - 1; i > 0; --i) vpow[i - 1] = vpow[i] * v;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      acc += c_[i] * upow * vpow[i];
      upow *= u;
    }
    return sgn(acc);
  }

  int sign_at_pos_inf() const { return is_zero() ? 0 : sgn(lead()); }
  int sign_at_neg_inf() const {
    if (is_zero()) return 0;
    return (deg() % 2 == 0) ? sgn(lead()) : -sgn(lead());
  }

  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = c_.size(); i > 0; --i) acc = acc * x + Rat(c_[i - 1]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;  // c_[i] is the coefficient of t^i; invariant: no trailing zeros
};

// Pseudo-remainder: rem = lc(b)^scalings * (a mod b) for some scalings >= 0.
// (One scaling per elimination round; the exact count is reported so callers can
// recover the sign of the true remainder when lc(b) < 0.)
struct PseudoRem {
  ZPoly rem;
  int scalings = 0;
};

inline PseudoRem pseudo_rem(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw internal_error("pseudo_rem: zero divisor");
  std::vector<Int> r(a.coeffs());
  const int db = b.deg();
  const Int& lb = b.lead();
  int dr = static_cast<int>(r.size()) - 1;
  int rounds = 0;
  while (dr >= db) {
    const Int top = r[static_cast<std::size_t>(dr)];
    for (int i = 0; i < dr; ++i) r[static_cast<std::size_t>(i)] *= lb;
    for (int i = 0; i < db; ++i)
      r[static_cast<std::size_t>(dr - db + i)] -= top * b[i];
    r.resize(static_cast<std::size_t>(dr));
    ++rounds;
    dr = static_cast<int>(r.size()) - 1;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) {
      r.pop_back();
      --dr;
    }
  }
  return {ZPoly(std::move(r)), rounds};
}

// Sturm chain of p: S0 = p, S1 = p', S_{i+1} = -rem(S_{i-1}, S_i), each stored as a
// positive-scalar multiple (primitive part) so the sign structure is exact.
inline std::vector<ZPoly> sturm_chain(const ZPoly& p) {
  std::vector<ZPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p.primitive());
  ZPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive());
  while (true) {
    const ZPoly& a = chain[chain.size() - 2];
    const ZPoly& b = chain[chain.size() - 1];
    if (b.deg() < 0) break;
    if (a.deg() < b.deg()) throw internal_error("sturm_chain: degree order violated");
    auto [r, scalings] = pseudo_rem(a, b);
    if (r.is_zero()) break;
    // r = lb^scalings * rem(a, b); the chain needs a positive multiple of -rem
    const bool negative_scale = (sgn(b.lead()) < 0) && (scalings % 2 == 1);
    ZPoly next = negative_scale ? std::move(r) : -r;
    chain.push_back(next.primitive());
  }
  return chain;
}

namespace detail {

inline int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace detail

inline int sign_variations_at(const std::vector<ZPoly>& chain, const Rat& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) s.push_back(p.sign_at(x));
  return detail::variations(s);
}

inline int sign_variations_neg_inf(const std::vector<ZPoly>& chain) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(p.sign_at_neg_inf());
  return detail::variations(s);
}

inline int sign_variations_pos_inf(const std::vector<ZPoly>& chain) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(p.sign_at_pos_inf());
  return detail::variations(s);
}

// Number of distinct real roots of p (Sturm's theorem; multiple roots counted once).
inline int count_real_roots(const ZPoly& p) {
  if (p.is_zero()) throw domain_error("count_real_roots: zero polynomial");
  if (p.deg() == 0) return 0;
  const auto chain = sturm_chain(p);
  return sign_variations_neg_inf(chain) - sign_variations_pos_inf(chain);
}

// Distinct real roots in (a, b]; requires p(a) != 0 and p(b) != 0.
inline int count_roots_in(const std::vector<ZPoly>& chain, const Rat& a, const Rat& b) {
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

// Strict upper bound on the absolute value of every real root (Cauchy bound).
inline Int root_bound(const ZPoly& p) {
  if (p.deg() < 0) throw domain_error("root_bound: zero polynomial");
  Int m = 0;
  for (int i = 0; i < p.deg(); ++i) m = std::max(m, Int(abs(p[i])));
  Int la = abs(p.lead());
  // 1 + ceil(m / la)
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), la.get_mpz_t());
  return q + 1;
}

// gcd over Q represented by a primitive integer polynomial with positive leading
// coefficient (primitive-PRS via pseudo-remainders).
inline ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
  a = a.primitive();
  b = b.primitive();
  if (a.is_zero()) return (b.is_zero() || sgn(b.lead()) > 0) ? b : -b;
  if (b.is_zero()) return sgn(a.lead()) > 0 ? a : -a;
  if (a.deg() < b.deg()) std::swap(a, b);
  while (!b.is_zero()) {
    ZPoly r = pseudo_rem(a, b).rem.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return sgn(a.lead()) > 0 ? a : -a;
}

inline bool is_squarefree(const ZPoly& p) {
  if (p.is_zero()) return false;
  if (p.deg() <= 1) return true;
  return zpoly_gcd(p, p.derivative()).deg() == 0;
}

// forward declaration (defined below, needs qpoly_divide_exact)
inline ZPoly squarefree_part(const ZPoly& p);

// Exact quotient p / d; throws internal_error unless d divides p over Q.
// The quotient is returned over Q as integer-after-clearing is not guaranteed.
inline std::vector<Rat> qpoly_divide_exact(const std::vector<Rat>& p, const std::vector<Rat>& d) {
  if (d.empty() || d.back() == 0) throw internal_error("qpoly_divide_exact: bad divisor");
  std::vector<Rat> r = p;
  while (!r.empty() && r.back() == 0) r.pop_back();
  if (r.empty()) return {};
  if (r.size() < d.size()) throw internal_error("qpoly_divide_exact: not divisible");
  std::vector<Rat> q(r.size() - d.size() + 1, Rat(0));
  for (std::size_t k = q.size(); k > 0; --k) {
    const std::size_t i = k - 1;
    Rat top = r[i + d.size() - 1] / d.back();
    q[i] = top;
    for (std::size_t j = 0; j < d.size(); ++j) r[i + j] -= top * d[j];
  }
  for (const auto& v : r)
    if (v != 0) throw internal_error("qpoly_divide_exact: nonzero remainder");
  return q;
}

// p / gcd(p, p') as a primitive integer polynomial (same sign as p).
inline ZPoly squarefree_part(const ZPoly& p) {
  if (p.is_zero()) throw domain_error("squarefree_part: zero polynomial");
  const ZPoly pr = p.primitive();
  if (pr.deg() <= 1) return pr;
  const ZPoly g = zpoly_gcd(pr, pr.derivative());
  if (g.deg() == 0) return pr;
  std::vector<Rat> num(pr.coeffs().begin(), pr.coeffs().end());
  std::vector<Rat> den(g.coeffs().begin(), g.coeffs().end());
  const auto q = qpoly_divide_exact(num, den);
  Int lcm = 1;
  for (const auto& v : q) lcm = lcm * v.get_den() / gcd(lcm, v.get_den());
  std::vector<Int> zi;
  zi.reserve(q.size());
  for (const auto& v : q) zi.push_back(v.get_num() * (lcm / v.get_den()));
  return ZPoly(std::move(zi)).primitive();
}

// Half-open isolating interval: exactly one real root in (lo, hi], p(lo), p(hi) != 0.
struct IsolatingInterval {
  Rat lo, hi;
};

namespace detail {

// midpoint of (lo, hi) that is not a root of p (shifts right in shrinking steps;
// p has finitely many roots so this terminates almost immediately)
inline Rat root_free_split(const ZPoly& p, const Rat& lo, const Rat& hi) {
  Rat mid = (lo + hi) / 2;
  Rat step = (hi - lo) / 4;
  while (p.sign_at(mid) == 0) {
    mid += step;
    step /= 2;
  }
  return mid;
}

}  // namespace detail

// Isolate all distinct real roots of a squarefree p into disjoint intervals,
// sorted increasingly and strictly separated (hi_i < lo_{i+1}).
inline std::vector<IsolatingInterval> isolate_real_roots(const ZPoly& p) {
  if (p.is_zero()) throw domain_error("isolate_real_roots: zero polynomial");
  if (!is_squarefree(p)) throw domain_error("isolate_real_roots: polynomial not squarefree");
  std::vector<IsolatingInterval> out;
  if (p.deg() == 0) return out;
  const auto chain = sturm_chain(p);
  const Rat bound = Rat(root_bound(p));
  struct Span {
    Rat lo, hi;
    int count;
  };
  std::vector<Span> stack;
  const int total = count_roots_in(chain, -bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Span s = stack.back();
    stack.pop_back();
    if (s.count == 1) {
      out.push_back({s.lo, s.hi});
      continue;
    }
    const Rat mid = detail::root_free_split(p, s.lo, s.hi);
    const int left = count_roots_in(chain, s.lo, mid);
    if (left > 0) stack.push_back({s.lo, mid, left});
    if (s.count - left > 0) stack.push_back({mid, s.hi, s.count - left});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  // refine until intervals are strictly separated (shared endpoints are legal for
  // half-open intervals but downstream cell sampling wants real gaps)
  auto refine = [&](IsolatingInterval& iv) {
    const Rat mid = detail::root_free_split(p, iv.lo, iv.hi);
    if (count_roots_in(chain, iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  };
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    while (!(out[i].hi < out[i + 1].lo)) refine(out[i + 1]);
  return out;
}

// Shrink an isolating interval below the requested width.
inline void refine_to_width(const ZPoly& p, const std::vector<ZPoly>& chain, IsolatingInterval& iv,
                            const Rat& width) {
  while (iv.hi - iv.lo > width) {
    const Rat mid = detail::root_free_split(p, iv.lo, iv.hi);
    if (count_roots_in(chain, iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
}

// Exact floor of the single root isolated by iv.  After refining below width 1/3
// the interval holds at most one integer, and one Sturm query settles the side.
inline Int root_floor(const ZPoly& p, const std::vector<ZPoly>& chain, IsolatingInterval iv) {
  refine_to_width(p, chain, iv, make_rat(Int(1), Int(3)));
  const Int k = rat_floor(iv.hi);
  if (Rat(k) <= iv.lo) return k;                                 // no integer in (lo, hi]
  if (p.sign_at(Rat(k)) == 0) return k;                          // root is exactly k
  if (count_roots_in(chain, iv.lo, Rat(k)) == 1) return k - 1;   // root in (k-1, k)
  return k;                                                      // root in (k, k+1)
}

// Exact ceiling of the single root isolated by iv.
inline Int root_ceil(const ZPoly& p, const std::vector<ZPoly>& chain, IsolatingInterval iv) {
  refine_to_width(p, chain, iv, make_rat(Int(1), Int(3)));
  const Int k = rat_floor(iv.hi);
  if (Rat(k) <= iv.lo) return k + 1;                             // noninteger root, floor k
  if (p.sign_at(Rat(k)) == 0) return k;
  if (count_roots_in(chain, iv.lo, Rat(k)) == 1) return k;       // root in (k-1, k)
  return k + 1;                                                  // root in (k, k+1)
}

// All rational roots of p (each once, sorted).  Exact: isolates the real roots of the
// squarefree part, then reconstructs the unique denominator-bounded rational in each
// interval (root denominators divide the leading coefficient).
inline std::vector<Rat> rational_roots(const ZPoly& p) {
  if (p.is_zero()) throw domain_error("rational_roots: zero polynomial");
  std::vector<Rat> out;
  if (p.deg() == 0) return out;
  const ZPoly sf = squarefree_part(p);
  const Int L = abs(sf.lead());
  auto intervals = isolate_real_roots(sf);
  const auto chain = sturm_chain(sf);
  // width below the minimal spacing 1/L^2 of distinct rationals with denominator <= L
  const Rat width = make_rat(Int(1), 2 * L * L + 1);
  for (auto& iv : intervals) {
    refine_to_width(sf, chain, iv, width);
    const Rat cand = simplest_rational_in(iv.lo, iv.hi);
    if (cand.get_den() <= L && sf.sign_at(cand) == 0) out.push_back(cand);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace waring

#endif  // WARING_UNIPOLY_HPP
