#ifndef WARING_PENCIL_HPP
#define WARING_PENCIL_HPP

// Exact decision: does the pencil { A + t*B : t in R } + { B } (the point at
// infinity) contain a hyperbolic form?
//
// Method.  Write S(x, t) = P(x) + t*Q(x) for the dehomogenizations of the
// integer-canonicalized basis, and let R(t) be the resultant of S and dS/dx at
// formal x-degrees (n, n-1).  Where R(t) != 0 the member has full degree n and
// simple complex roots; on each connected component of { R != 0 } the real-root
// count is therefore constant, so membership of the hyperbolic set is decided
// by one sample per component.  Having simple real projective roots is an open
// condition in the parameter (on the projective t-line), so a hyperbolic member
// at a component boundary or at infinity forces hyperbolic members in an
// adjacent component; sampling every component plus t = infinity is a complete
// decision.
//
// If R vanishes identically then (for an independent basis) P, Q, P', Q' share
// a nonconstant factor D(x): every finite member is divisible by D and so is
// its derivative, hence has a repeated complex root and is never hyperbolic.
// (A parameter-dependent common factor is impossible: S is affine in t, and a
// degree-1-in-t factor would force P, Q proportional.)  Only the member at
// infinity remains to be tested.
//
// Samples are deterministic: midpoints of the gaps between adjacent isolating
// intervals for the bounded components, and the nearest integers strictly
// outside the root range (floor(r_max)+1, ceil(r_min)-1) for the unbounded
// ones; they are tested in ascending |t| (positive first on ties), infinity
// last, stopping at the first witness.

#include <algorithm>
#include <utility>
#include <vector>

#include "binary_form.hpp"
#include "hyperbolic.hpp"
#include "qmatrix.hpp"
#include "rational.hpp"
#include "resultant.hpp"
#include "unipoly.hpp"

namespace waring {

namespace detail {

// Interpolate the unique polynomial of degree < values.size() through
// (i, values[i]) for i = 0, 1, 2, ...; returns low-to-high coefficients.
inline std::vector<Rat> interpolate_on_integers(const std::vector<Int>& values) {
  const int k = static_cast<int>(values.size());
  QMatrix vand(k, k);
  std::vector<Rat> rhs(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Rat p(1);
    for (int j = 0; j < k; ++j) {
      vand.at(i, j) = p;
      p *= Rat(i);
    }
    rhs[static_cast<std::size_t>(i)] = Rat(values[static_cast<std::size_t>(i)]);
  }
  return solve_unique(vand, rhs);
}

}  // namespace detail

struct PencilSample {
  bool at_infinity = false;
  Rat t;                     // meaningless when at_infinity
  bool hyperbolic = false;
  int real_root_count = 0;   // distinct real projective roots of the member
};

struct PencilTrace {
  BinaryForm a, b;           // integer-canonical basis actually analyzed
  ZPoly disc;                // R(t) = Res_x(S, dS/dx) at formal degrees (n, n-1)
  bool disc_zero = false;    // R identically zero (only infinity is tested)
  std::vector<IsolatingInterval> disc_roots;  // roots of the squarefree part of R
  std::vector<PencilSample> samples;          // in tested order, stops at first witness
};

struct PencilDecision {
  bool found = false;
  bool at_infinity = false;
  Rat t;                     // witness parameter when found and finite
  BinaryForm witness;        // A + t*B, or B for the member at infinity
  PencilTrace trace;
};

// The deterministic sample parameters for the components cut out by the given
// isolated roots.  Exposed separately for certificate replay.
inline std::vector<Rat> pencil_sample_points(const ZPoly& disc_sf,
                                             const std::vector<IsolatingInterval>& roots) {
  if (roots.empty()) return {Rat(0)};
  const auto chain = sturm_chain(disc_sf);
  std::vector<Rat> out;
  out.push_back(Rat(Int(root_ceil(disc_sf, chain, roots.front()) - 1)));
  for (std::size_t i = 1; i < roots.size(); ++i)
    out.push_back((roots[i - 1].hi + roots[i].lo) / 2);
  out.push_back(Rat(Int(root_floor(disc_sf, chain, roots.back()) + 1)));
  std::sort(out.begin(), out.end(), [](const Rat& x, const Rat& y) {
    const Rat ax = x < 0 ? Rat(-x) : x, ay = y < 0 ? Rat(-y) : y;
    if (ax != ay) return ax < ay;
    return x > y;  // positive before negative on equal magnitude
  });
  return out;
}

inline PencilDecision pencil_contains_hyperbolic(const BinaryForm& a_in, const BinaryForm& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) throw domain_error("pencil: zero basis form");
  if (a_in.degree() != b_in.degree()) throw domain_error("pencil: basis degrees differ");
  const int n = a_in.degree();
  {
    QMatrix m(2, n + 1);
    for (int j = 0; j <= n; ++j) {
      m.at(0, j) = a_in.coeff(j);
      m.at(1, j) = b_in.coeff(j);
    }
    if (m.rank() != 2) throw domain_error("pencil: basis forms are dependent");
  }

  PencilDecision out;
  PencilTrace& tr = out.trace;
  tr.a = a_in.canonicalized();
  tr.b = b_in.canonicalized();

  // R(t) by evaluation at t = 0..2n-1 and interpolation (deg_t R <= 2n-1).
  const ZPoly p = tr.a.dehom_primitive(), q = tr.b.dehom_primitive();
  const ZPoly dp = p.derivative(), dq = q.derivative();
  std::vector<Int> vals;
  for (int k = 0; k < 2 * n; ++k) {
    const ZPoly s = p + q.scaled(Int(k)), ds = dp + dq.scaled(Int(k));
    vals.push_back(resultant_int(s, n, ds, n - 1));
  }
  std::vector<Int> coeffs;
  for (const Rat& c : detail::interpolate_on_integers(vals)) {
    if (c.get_den() != 1) throw internal_error("pencil: non-integer discriminant coefficient");
    coeffs.push_back(c.get_num());
  }
  tr.disc = ZPoly(std::move(coeffs));

  auto test = [&](bool at_inf, const Rat& t) -> bool {
    const BinaryForm member = at_inf ? tr.b : tr.a + t * tr.b;
    PencilSample s;
    s.at_infinity = at_inf;
    if (!at_inf) s.t = t;
    s.hyperbolic = is_hyperbolic(member);
    s.real_root_count = count_distinct_real_roots(member);
    tr.samples.push_back(s);
    if (s.hyperbolic) {
      out.found = true;
      out.at_infinity = at_inf;
      if (!at_inf) out.t = t;
      out.witness = member;
    }
    return s.hyperbolic;
  };

  if (tr.disc.is_zero()) {
    // No finite member can be hyperbolic; only infinity remains.
    tr.disc_zero = true;
    test(true, Rat(0));
    return out;
  }

  const ZPoly disc_sf = squarefree_part(tr.disc);
  tr.disc_roots = isolate_real_roots(disc_sf);
  for (const Rat& t : pencil_sample_points(disc_sf, tr.disc_roots))
    if (test(false, t)) return out;
  test(true, Rat(0));
  return out;
}

}  // namespace waring

#endif  // WARING_PENCIL_HPP
