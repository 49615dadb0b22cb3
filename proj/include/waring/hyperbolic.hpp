#ifndef WARING_HYPERBOLIC_HPP
#define WARING_HYPERBOLIC_HPP

// Real-rootedness of binary forms, decided exactly by Sturm counts on the
// dehomogenization plus explicit bookkeeping for the root at [1:0].
//
//   hyperbolic  = all deg(f) projective roots real and pairwise distinct
//   real-rooted = all projective roots real, multiplicities allowed
//
// is_hyperbolic gives the bare predicate; hyperbolicity_certificate returns a
// replayable record (root isolation on success, the failing check otherwise).

#include <string>
#include <vector>

#include "binary_form.hpp"
#include "unipoly.hpp"

namespace waring {

// Isolated real roots of the dehomogenization plus the multiplicity at [1:0].
struct RootIsolation {
  std::vector<IsolatingInterval> finite;  // each contains exactly one root of f(t, 1)
  int inf_multiplicity = 0;               // y-adic valuation of f
  bool multiplicity_free = true;          // finite part squarefree and inf_multiplicity <= 1
};

// Core test on a dehomogenized integer polynomial q with inf_mult extra roots at
// [1:0]; total projective degree is deg q + inf_mult.
inline bool is_hyperbolic_dehom(const ZPoly& q, int inf_mult) {
  if (q.is_zero()) throw domain_error("is_hyperbolic_dehom: zero polynomial");
  if (inf_mult > 1) return false;
  if (q.deg() == 0) return true;  // roots are [1:0] at most once
  if (!is_squarefree(q)) return false;
  return count_real_roots(q) == q.deg();
}

inline bool is_hyperbolic(const BinaryForm& f) {
  if (f.is_zero()) throw domain_error("is_hyperbolic: zero form");
  return is_hyperbolic_dehom(f.dehom_primitive(), f.inf_multiplicity());
}

inline bool is_real_rooted(const BinaryForm& f) {
  if (f.is_zero()) throw domain_error("is_real_rooted: zero form");
  const ZPoly q = f.dehom_primitive();
  if (q.deg() == 0) return true;  // pure power of y
  const ZPoly part = squarefree_part(q);
  return count_real_roots(part) == part.deg();
}

// Distinct real projective roots: Sturm count of the squarefree part of f(t, 1)
// plus one root at [1:0] when y divides f.
inline int count_distinct_real_roots(const BinaryForm& f) {
  if (f.is_zero()) throw domain_error("count_distinct_real_roots: zero form");
  const ZPoly q = f.dehom_primitive();
  const int inf = f.inf_multiplicity() > 0 ? 1 : 0;
  if (q.deg() == 0) return inf;
  return count_real_roots(squarefree_part(q)) + inf;
}

// Isolation of the real projective roots of f.  The finite part of f must be
// squarefree (callers reduce first); the multiplicity at [1:0] is reported as-is.
inline RootIsolation isolate_real_roots(const BinaryForm& f) {
  if (f.is_zero()) throw domain_error("isolate_real_roots: zero form");
  RootIsolation out;
  out.inf_multiplicity = f.inf_multiplicity();
  const ZPoly q = f.dehom_primitive();
  if (q.deg() > 0) {
    if (!is_squarefree(q))
      throw domain_error("isolate_real_roots: finite part not squarefree");
    out.finite = isolate_real_roots(q);
  }
  out.multiplicity_free = out.inf_multiplicity <= 1;
  return out;
}

struct HyperbolicityCertificate {
  BinaryForm subject;
  bool hyperbolic = false;
  RootIsolation roots;       // populated on success: deg(f) simple real projective roots
  std::string failure;       // on failure: which check broke, empty otherwise
  int real_root_count = 0;   // distinct real projective roots either way
};

inline HyperbolicityCertificate hyperbolicity_certificate(const BinaryForm& f) {
  if (f.is_zero()) throw domain_error("hyperbolicity_certificate: zero form");
  HyperbolicityCertificate cert;
  cert.subject = f;
  cert.real_root_count = count_distinct_real_roots(f);
  const int inf = f.inf_multiplicity();
  const ZPoly q = f.dehom_primitive();
  if (inf > 1) {
    cert.failure = "repeated root at [1:0] (y-multiplicity " + std::to_string(inf) + ")";
    return cert;
  }
  if (q.deg() > 0 && !is_squarefree(q)) {
    cert.failure = "repeated finite root (gcd with derivative is nonconstant)";
    return cert;
  }
  if (cert.real_root_count != f.degree()) {
    cert.failure = "real root count " + std::to_string(cert.real_root_count) +
                   " below degree " + std::to_string(f.degree());
    return cert;
  }
  cert.hyperbolic = true;
  cert.roots = isolate_real_roots(f);
  return cert;
}

}  // namespace waring

#endif  // WARING_HYPERBOLIC_HPP
