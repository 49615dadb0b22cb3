#ifndef WARING_DECOMPOSE_HPP
#define WARING_DECOMPOSE_HPP

// Power-sum decompositions f = sum c_i (a_i x + b_i y)^d read off a hyperbolic
// member s of the apolar ideal of f: each projective root [a:b] of s (i.e. each
// linear factor bx - ay) contributes the direction (ax + by)^d, and the
// coefficients c_i solve a full-column-rank linear system, exactly over Q.
//
// Two modes:
//   decompose_rational — requires every root of s rational; the system is
//     consistent (apolarity), the re-summation reproduces f exactly, residual 0.
//   decompose_numeric  — isolates the real roots of s, replaces each by the
//     simplest rational in an interval of width 2^-(precision+8), solves the
//     least-squares normal equations exactly over Q, and computes the exact
//     sup-norm residual of the re-summation.  Intervals are bisected further
//     until the residual drops below 2^(1-precision), so the reported bound is
//     both exact and guaranteed smaller than that threshold.

#include <string>
#include <utility>
#include <vector>

#include "apolarity.hpp"
#include "binary_form.hpp"
#include "hyperbolic.hpp"
#include "qmatrix.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace waring {

// One summand c * (a x + b y)^d; (a, b) is kept primitive-integer when the root
// is rational and a small-denominator rational pair in numeric mode.
struct PowerTerm {
  Rat c;
  Rat a, b;
};

enum class DecompositionKind { EXACT, NUMERIC };

inline const char* decomposition_kind_name(DecompositionKind k) {
  return k == DecompositionKind::EXACT ? "exact" : "numeric";
}

struct Decomposition {
  DecompositionKind kind = DecompositionKind::EXACT;
  BinaryForm subject{0};
  BinaryForm witness{0};
  std::vector<PowerTerm> terms;
  // exact sup-norm of subject - resummation (0 in exact mode)
  Rat residual_bound = Rat(0);
  int precision = 0;  // requested bits, numeric mode only
  BinaryForm resummation{0};
};

namespace detail {

// Shared precondition checks; returns the root data of the witness.
inline HyperbolicityCertificate check_decompose_inputs(const BinaryForm& s,
                                                       const BinaryForm& f) {
  if (f.is_zero()) throw domain_error("decompose: zero subject form");
  if (s.is_zero()) throw domain_error("decompose: zero witness form");
  if (s.degree() < 1) throw domain_error("decompose: witness must have positive degree");
  if (s.degree() > f.degree() + 1)
    throw domain_error("decompose: witness degree exceeds subject degree + 1");
  if (!in_apolar_ideal(s, f))
    throw domain_error("decompose: witness is not in the apolar ideal of the subject");
  HyperbolicityCertificate cert = hyperbolicity_certificate(s);
  if (!cert.hyperbolic)
    throw domain_error("decompose: witness is not hyperbolic (" + cert.failure + ")");
  return cert;
}

// Column j holds the coefficients of (a_j x + b_j y)^d in the monomial basis.
inline QMatrix power_matrix(const std::vector<std::pair<Rat, Rat>>& dirs, int d) {
  QMatrix m(d + 1, static_cast<int>(dirs.size()));
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    const BinaryForm p = BinaryForm::linear_power(dirs[j].first, dirs[j].second, d);
    for (int i = 0; i <= d; ++i) m.at(i, static_cast<int>(j)) = p.coeff(i);
  }
  return m;
}

inline BinaryForm resum_terms(const std::vector<PowerTerm>& terms, int d) {
  BinaryForm acc(d);
  for (const auto& t : terms) acc = acc + t.c * BinaryForm::linear_power(t.a, t.b, d);
  return acc;
}

inline Rat sup_norm(const BinaryForm& f) {
  Rat m(0);
  for (int i = 0; i <= f.degree(); ++i) {
    Rat v = f.coeff(i);
    if (v < 0) v = -v;
    if (v > m) m = v;
  }
  return m;
}

// Finite root p/q of s(t,1) corresponds to the factor qx - py and hence to the
// direction (p, q); the root at [1:0] (y divides s) to the direction (1, 0).
inline std::pair<Rat, Rat> direction_of_root(const Rat& root) {
  return {Rat(root.get_num()), Rat(root.get_den())};
}

}  // namespace detail

// Exact decomposition from a rational-rooted hyperbolic witness s in f's apolar
// ideal.  Throws domain_error when a root of s is irrational.
inline Decomposition decompose_rational(const BinaryForm& s, const BinaryForm& f) {
  const auto cert = detail::check_decompose_inputs(s, f);
  const int d = f.degree(), m = s.degree();

  std::vector<std::pair<Rat, Rat>> dirs;
  const auto roots = rational_roots(s.dehom_primitive());
  for (const auto& r : roots) dirs.push_back(detail::direction_of_root(r));
  if (cert.roots.inf_multiplicity == 1) dirs.emplace_back(Rat(1), Rat(0));
  if (static_cast<int>(dirs.size()) != m)
    throw domain_error("decompose_rational: witness has irrational roots; use the numeric mode");

  const QMatrix mat = detail::power_matrix(dirs, d);
  std::vector<Rat> rhs;
  for (int i = 0; i <= d; ++i) rhs.push_back(f.coeff(i));
  const auto sol = solve_linear(mat, rhs);
  if (!sol)
    throw internal_error("decompose_rational: inconsistent system for an apolar witness");

  Decomposition out;
  out.kind = DecompositionKind::EXACT;
  out.subject = f;
  out.witness = s;
  for (std::size_t j = 0; j < dirs.size(); ++j)
    out.terms.push_back({(*sol)[j], dirs[j].first, dirs[j].second});
  out.resummation = detail::resum_terms(out.terms, d);
  if (!(out.resummation == f))
    throw internal_error("decompose_rational: re-summation mismatch");
  out.residual_bound = Rat(0);
  return out;
}

// Approximate decomposition from any hyperbolic witness.  Directions come from
// isolating intervals of the roots of s; coefficients solve the least-squares
// normal equations exactly over Q; the residual bound is the exact sup-norm of
// f minus the re-summation.  Intervals are refined until that bound is below
// 2^(1-precision).
inline Decomposition decompose_numeric(const BinaryForm& s, const BinaryForm& f,
                                       int precision = 128) {
  if (precision < 1) throw domain_error("decompose_numeric: precision must be >= 1 bit");
  const auto cert = detail::check_decompose_inputs(s, f);
  const int d = f.degree();

  const ZPoly sde = s.dehom_primitive();
  const auto chain = sde.deg() > 0 ? sturm_chain(sde) : std::vector<ZPoly>{};
  auto intervals = cert.roots.finite;  // sorted, disjoint, one simple root each

  const Rat target = rat_pow(make_rat(1, 2), static_cast<unsigned long>(precision - 1));
  Rat width = rat_pow(make_rat(1, 2), static_cast<unsigned long>(precision) + 8);

  Decomposition out;
  out.kind = DecompositionKind::NUMERIC;
  out.subject = f;
  out.witness = s;
  out.precision = precision;

  for (int round = 0; round < 512; ++round) {
    std::vector<std::pair<Rat, Rat>> dirs;
    for (auto& iv : intervals) {
      refine_to_width(sde, chain, iv, width);
      dirs.push_back(detail::direction_of_root(simplest_rational_in(iv.lo, iv.hi)));
    }
    if (cert.roots.inf_multiplicity == 1) dirs.emplace_back(Rat(1), Rat(0));

    const QMatrix mat = detail::power_matrix(dirs, d);
    const int m = mat.cols();
    QMatrix normal(m, m);
    std::vector<Rat> rhs(static_cast<std::size_t>(m), Rat(0));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        Rat acc(0);
        for (int k = 0; k <= d; ++k) acc += mat.at(k, i) * mat.at(k, j);
        normal.at(i, j) = acc;
      }
      Rat acc(0);
      for (int k = 0; k <= d; ++k) acc += mat.at(k, i) * f.coeff(k);
      rhs[static_cast<std::size_t>(i)] = acc;
    }
    const auto sol = solve_unique(normal, rhs);

    out.terms.clear();
    for (std::size_t j = 0; j < dirs.size(); ++j)
      out.terms.push_back({sol[j], dirs[j].first, dirs[j].second});
    out.resummation = detail::resum_terms(out.terms, d);
    out.residual_bound = detail::sup_norm(f - out.resummation);
    if (out.residual_bound < target) return out;
    width /= 2;
  }
  throw internal_error("decompose_numeric: residual refinement did not converge");
}

}  // namespace waring

#endif  // WARING_DECOMPOSE_HPP
