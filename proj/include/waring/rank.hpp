#ifndef WARING_RANK_HPP
#define WARING_RANK_HPP

// Waring ranks of binary forms over Q with replayable certificates.
//
//   complex_rank              closed-form rule from the minimal generator
//   real_rank_search          degree scan with per-degree lower-bound evidence
//   typicality_certificate    generic-degrees forms: rank + absence at m-1
//   perturbation_stability_test  rank histogram under seeded perturbations
//
// The real-rank scan decides each graded piece by dimension: 0 empty, 1 a
// single exact hyperbolicity test, 2 the exact pencil decision, >= 3 a
// deterministic direction search (witnesses exact, absence empirical).  At
// degree d a deterministic completion guarantees a witness whenever f has two
// distinct roots, so the scan always terminates with m <= d there (pure powers
// stop at degree 1).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolarity.hpp"
#include "binary_form.hpp"
#include "evidence.hpp"
#include "hyperbolic.hpp"
#include "pencil.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace waring {

// Comas-Seiguer rule: rank is e1 when the degree-e1 generator has distinct
// projective roots, otherwise d + 2 - e1.  With a 2-dimensional minimal piece
// the two branches agree (2*e1 = d + 2), and a squarefree member always exists
// there because the generator pair is coprime.
inline int complex_rank(const BinaryForm& f) {
  if (f.is_zero()) throw domain_error("complex_rank: zero form");
  const int d = f.degree();
  if (d < 1) throw domain_error("complex_rank: degree must be at least 1");
  const int e1 = min_apolar_degree(f);
  if (2 * e1 == d + 2) return e1;
  const auto piece = apolar_piece(f, e1);
  if (piece.size() != 1) throw internal_error("complex_rank: unexpected minimal piece dimension");
  return has_distinct_roots(piece[0]) ? e1 : d + 2 - e1;
}

// Direction-vector height cap per subspace dimension, sized so exhausting the
// budget stays cheap while near-integer witnesses are still found.
inline int default_search_height(int dim) {
  switch (dim) {
    case 3: return 16;
    case 4: return 8;
    case 5: return 5;
    case 6: return 4;
    case 7: return 3;
    default: return 2;
  }
}

struct SubspaceSearchResult {
  bool found = false;
  BinaryForm witness;  // canonicalized, valid when found
  SamplingLog log;
};

// Digest over the direction stream plus the log's own parameters, so a
// tampered max_height or tested count can never reproduce the recorded value.
inline std::uint64_t finish_sampling_digest(Digest64 dg, int max_height, long tested) {
  dg.feed(static_cast<std::uint64_t>(max_height));
  dg.feed(static_cast<std::uint64_t>(tested));
  return dg.value();
}

// Deterministic enumeration of primitive integer directions over the basis,
// each combination tested exactly.  A witness is exact; not-found is only an
// exhausted-search report (the log allows bit-exact replay).
inline SubspaceSearchResult subspace_hyperbolic_search(const std::vector<BinaryForm>& basis,
                                                       int max_height, long max_tested = 200000) {
  SubspaceSearchResult res;
  res.log.max_height = max_height;
  if (basis.empty()) return res;
  Digest64 dg;
  if (basis.size() == 1) {
    dg.feed(1);
    res.log.tested = 1;
    res.log.digest = finish_sampling_digest(dg, max_height, res.log.tested);
    if (is_hyperbolic(basis[0])) {
      res.found = true;
      res.witness = basis[0].canonicalized();
    }
    return res;
  }
  DirectionEnumerator en(static_cast<int>(basis.size()));
  std::vector<long> v;
  while (res.log.tested < max_tested && en.next(v, max_height)) {
    for (long c : v) dg.feed(static_cast<std::uint64_t>(c));
    ++res.log.tested;
    BinaryForm cand(basis[0].degree());
    for (std::size_t i = 0; i < basis.size(); ++i)
      cand = cand + Rat(v[i]) * basis[i];
    if (cand.is_zero()) throw internal_error("subspace_hyperbolic_search: dependent basis");
    if (is_hyperbolic(cand)) {
      res.found = true;
      res.witness = cand.canonicalized();
      break;
    }
  }
  res.log.digest = finish_sampling_digest(dg, max_height, res.log.tested);
  return res;
}

// Decision for one graded piece: either a hyperbolic witness or lower-bound
// evidence at the rigor the dimension admits.
struct PieceDecision {
  int degree = 0;
  int dim = 0;
  bool has_hyperbolic = false;
  BinaryForm witness;           // valid when has_hyperbolic
  LowerBoundEvidence evidence;  // valid otherwise
};

inline PieceDecision decide_piece(const BinaryForm& f, int e) {
  PieceDecision out;
  out.degree = e;
  const auto basis = apolar_piece(f, e);
  out.dim = static_cast<int>(basis.size());
  auto absent = [&](Rigor r, LowerBoundPayload payload) {
    out.evidence = LowerBoundEvidence{e, out.dim, LowerVerdict::NO_HYPERBOLIC_FORM, r,
                                      std::move(payload)};
  };
  if (out.dim == 0) {
    absent(Rigor::EXACT, EmptyPieceEvidence{});
    return out;
  }
  if (out.dim == 1) {
    const auto cert = hyperbolicity_certificate(basis[0].canonicalized());
    if (cert.hyperbolic) {
      out.has_hyperbolic = true;
      out.witness = cert.subject;
    } else {
      absent(Rigor::EXACT, SingleMemberEvidence{cert.subject, cert});
    }
    return out;
  }
  if (out.dim == 2) {
    const auto dec = pencil_contains_hyperbolic(basis[0], basis[1]);
    if (dec.found) {
      out.has_hyperbolic = true;
      out.witness = dec.witness.canonicalized();
    } else {
      absent(Rigor::EXACT, PencilEvidence{dec.trace});
    }
    return out;
  }
  const auto sr = subspace_hyperbolic_search(basis, default_search_height(out.dim));
  if (sr.found) {
    out.has_hyperbolic = true;
    out.witness = sr.witness;
  } else {
    absent(Rigor::EMPIRICAL, SearchEvidence{sr.log});
  }
  return out;
}

// Deterministic hyperbolic member of (f^perp)_d for f that is not a pure power.
// The degree-d piece is the kernel of the functional L(h) = sum h_j a_j j!(d-j)!;
// with w having d-1 distinct integer roots, h = (x - c y) w lands in the kernel
// for c = L(x w)/L(y w), and shifting w's root window restores L(y w) != 0 and
// root-distinctness when needed.
inline BinaryForm hyperplane_hyperbolic_annihilator(const BinaryForm& f) {
  const int d = f.degree();
  if (d < 2) throw domain_error("hyperplane_hyperbolic_annihilator: degree must be at least 2");
  std::vector<Rat> lam(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j)
    lam[static_cast<std::size_t>(j)] = f.coeff(j) * Rat(falling(j, j) * falling(d - j, d - j));
  auto lam_of = [&](const BinaryForm& h) {
    Rat s(0);
    for (int j = 0; j <= d; ++j) s += h.coeff(j) * lam[static_cast<std::size_t>(j)];
    return s;
  };
  for (long shift = 0; shift < 1000; ++shift) {
    BinaryForm w(0, {Rat(1)});
    for (int i = 1; i <= d - 1; ++i) w = w * BinaryForm::linear(Rat(1), Rat(-(shift + i)));
    const BinaryForm xw = BinaryForm::monomial(1, 1) * w;
    const BinaryForm yw = BinaryForm::monomial(1, 0) * w;
    const Rat v = lam_of(yw);
    if (v == 0) continue;
    const Rat c = lam_of(xw) / v;
    bool collision = false;
    for (int i = 1; i <= d - 1 && !collision; ++i) collision = (c == Rat(shift + i));
    if (collision) continue;
    return xw - c * yw;
  }
  throw internal_error("hyperplane_hyperbolic_annihilator: no admissible root window");
}

struct RankCertificate {
  BinaryForm subject;
  int rank = 0;
  BinaryForm witness;  // hyperbolic member of (f^perp)_rank
  HyperbolicityCertificate witness_cert;
  std::vector<LowerBoundEvidence> lower;  // degrees e1 .. rank-1
  Rigor rigor = Rigor::EXACT;             // weakest lower-bound level (upper is exact)
};

// Certificate for a form with all-real distinct roots: its rank equals its
// degree, and every strictly lower apolar piece of dimension >= 3 is covered
// by that same fact.  Pieces of dimension <= 2 are still decided exactly (and
// must come up empty, or the invariant is broken).
inline RankCertificate hyperbolic_form_certificate(const BinaryForm& f) {
  const int d = f.degree();
  if (d < 2) throw domain_error("hyperbolic_form_certificate: degree must be at least 2");
  RankCertificate cert;
  cert.subject = f;
  cert.rank = d;
  cert.witness = hyperplane_hyperbolic_annihilator(f).canonicalized();
  if (!apply_apolar(cert.witness, f).is_zero())
    throw internal_error("hyperbolic_form_certificate: witness escaped the ideal");
  cert.witness_cert = hyperbolicity_certificate(cert.witness);
  if (!cert.witness_cert.hyperbolic)
    throw internal_error("hyperbolic_form_certificate: witness not hyperbolic");
  for (int e = min_apolar_degree(f); e < d; ++e) {
    const int dim = apolar_piece_dim(f, e);
    if (dim <= 2) {
      PieceDecision dec = decide_piece(f, e);
      if (dec.has_hyperbolic)
        throw internal_error("hyperbolic_form_certificate: annihilator below the degree");
      cert.lower.push_back(std::move(dec.evidence));
    } else {
      cert.lower.push_back(LowerBoundEvidence{e, dim, LowerVerdict::NO_HYPERBOLIC_FORM,
                                              Rigor::THEOREM_BACKED,
                                              TheoremEvidence{kFactHyperbolicMaxRank}});
    }
  }
  cert.rigor = Rigor::EXACT;
  for (const auto& ev : cert.lower) cert.rigor = weaker_of(cert.rigor, ev.rigor);
  return cert;
}

// Optional hint: a known hyperbolic member of the apolar ideal.  The scan
// still decides every lower degree, but at the hint's own degree the hint is
// an exact witness, sparing the enumeration a search it may be too coarse to
// win (piece members can have arbitrarily tall rational coordinates).
inline RankCertificate real_rank_search(const BinaryForm& f,
                                        const std::optional<BinaryForm>& hint = std::nullopt) {
  if (f.is_zero()) throw domain_error("real_rank_search: zero form");
  const int d = f.degree();
  if (d < 1) throw domain_error("real_rank_search: degree must be at least 1");
  if (hint) {
    if (hint->is_zero() || hint->degree() < 1 || hint->degree() > d + 1)
      throw domain_error("real_rank_search: hint degree out of range");
    if (!in_apolar_ideal(*hint, f))
      throw domain_error("real_rank_search: hint is not an apolar member");
    if (!is_hyperbolic(*hint)) throw domain_error("real_rank_search: hint is not hyperbolic");
  }
  // A form with d distinct real roots has rank exactly d; the generic scan
  // could only rediscover that through searches it may be too coarse to win.
  if (d >= 2 && is_hyperbolic(f)) return hyperbolic_form_certificate(f);
  RankCertificate cert;
  cert.subject = f;
  for (int e = min_apolar_degree(f); e <= d + 1; ++e) {
    if (hint && hint->degree() == e) {
      cert.rank = e;
      cert.witness = hint->canonicalized();
      cert.witness_cert = hyperbolicity_certificate(cert.witness);
      break;
    }
    if (e == d + 1) {
      // Unreachable for forms with two distinct roots (the degree-d completion
      // below fires first); kept for totality: the full space trivially
      // contains a product of distinct linear forms.
      BinaryForm h(0, {Rat(1)});
      for (int i = 0; i <= d; ++i) h = h * BinaryForm::linear(Rat(1), Rat(-i));
      cert.rank = d + 1;
      cert.witness = h.canonicalized();
      cert.witness_cert = hyperbolicity_certificate(cert.witness);
      break;
    }
    PieceDecision dec = decide_piece(f, e);
    if (!dec.has_hyperbolic && e == d && dec.dim >= 3) {
      // The empirical search can miss; the kernel construction cannot.
      const BinaryForm h = hyperplane_hyperbolic_annihilator(f);
      if (!apply_apolar(h, f).is_zero())
        throw internal_error("real_rank_search: completion escaped the ideal");
      if (!is_hyperbolic(h)) throw internal_error("real_rank_search: completion not hyperbolic");
      dec.has_hyperbolic = true;
      dec.witness = h.canonicalized();
    }
    if (dec.has_hyperbolic) {
      cert.rank = e;
      cert.witness = dec.witness;
      cert.witness_cert = hyperbolicity_certificate(dec.witness);
      break;
    }
    cert.lower.push_back(std::move(dec.evidence));
  }
  // Absence at a higher degree implies absence below it: a lower-degree
  // hyperbolic form times fresh distinct linear factors is again hyperbolic
  // and stays in the ideal.  Upgrade empirical records under the highest exact
  // one; the implication is a checked theorem step, so the result is labeled
  // THEOREM_BACKED (EXACT stays reserved for dimension <= 2 decisions).
  int best_exact = -1;
  for (const auto& ev : cert.lower)
    if (ev.rigor == Rigor::EXACT && ev.degree > best_exact) best_exact = ev.degree;
  for (auto& ev : cert.lower)
    if (ev.rigor == Rigor::EMPIRICAL && ev.degree < best_exact) {
      ev.payload = ImpliedEvidence{best_exact};
      ev.rigor = Rigor::THEOREM_BACKED;
    }
  cert.rigor = Rigor::EXACT;
  for (const auto& ev : cert.lower) cert.rigor = weaker_of(cert.rigor, ev.rigor);
  return cert;
}

struct TypicalityCertificate {
  BinaryForm subject;
  std::pair<int, int> generator_degrees{0, 0};  // equal to the generic pair
  int middle_catalecticant_rank = 0;            // full rank proves generic degrees
  RankCertificate rank_cert;
  LowerBoundEvidence top_evidence;  // absence record at degree rank-1
  bool typical = false;
  Rigor level = Rigor::EXACT;  // rigor of the degree-(rank-1) absence
};

inline TypicalityCertificate typicality_certificate(const BinaryForm& f, RankCertificate rc) {
  if (f.is_zero()) throw domain_error("typicality_certificate: zero form");
  if (!is_generic_degrees(f))
    throw domain_error(
        "typicality_certificate: apolar ideal not generated in generic degrees; "
        "perturb the form first");
  TypicalityCertificate out;
  out.subject = f;
  out.rank_cert = std::move(rc);
  const int d = f.degree();
  out.generator_degrees = generic_degrees(d);
  out.middle_catalecticant_rank = catalecticant(f, d / 2).rank();
  if (out.middle_catalecticant_rank != d / 2 + 1)
    throw internal_error("typicality_certificate: middle catalecticant unexpectedly degenerate");
  const int m = out.rank_cert.rank;
  if (!out.rank_cert.lower.empty() && out.rank_cert.lower.back().degree == m - 1) {
    out.top_evidence = out.rank_cert.lower.back();
  } else {
    // m is the first generator degree; the piece below it is zero.
    if (apolar_piece_dim(f, m - 1) != 0)
      throw internal_error("typicality_certificate: missing evidence at rank-1");
    out.top_evidence = LowerBoundEvidence{m - 1, 0, LowerVerdict::NO_HYPERBOLIC_FORM,
                                          Rigor::EXACT, EmptyPieceEvidence{}};
  }
  out.typical = out.top_evidence.verdict == LowerVerdict::NO_HYPERBOLIC_FORM;
  out.level = out.top_evidence.rigor;
  return out;
}

inline TypicalityCertificate typicality_certificate(const BinaryForm& f) {
  return typicality_certificate(f, real_rank_search(f));
}

struct PerturbationTrial {
  int index = 0;
  BinaryForm form;
  int rank = 0;
  Rigor rigor = Rigor::EXACT;
};

struct PerturbationReport {
  BinaryForm subject;
  Rat radius;
  int trials = 0;
  std::uint64_t seed = 0;
  std::optional<BinaryForm> hint;  // hyperbolic apolar member carried across trials
  std::vector<PerturbationTrial> samples;
  std::map<int, int> histogram;  // rank -> count
  bool all_same_rank = true;
};

// Coordinates of a member in the canonical basis of the degree-e apolar piece,
// or nullopt when it lies outside the piece.
inline std::optional<std::vector<Rat>> apolar_piece_coordinates(const BinaryForm& f,
                                                                const BinaryForm& member) {
  const int e = member.degree();
  const auto basis = apolar_piece(f, e);
  if (basis.empty()) return std::nullopt;
  QMatrix a(e + 1, static_cast<int>(basis.size()));
  for (int j = 0; j < static_cast<int>(basis.size()); ++j)
    for (int i = 0; i <= e; ++i) a.at(i, j) = basis[static_cast<std::size_t>(j)].coeff(i);
  std::vector<Rat> rhs(static_cast<std::size_t>(e + 1));
  for (int i = 0; i <= e; ++i) rhs[static_cast<std::size_t>(i)] = member.coeff(i);
  return solve_linear(a, rhs);
}

// Rank histogram under seeded rational perturbations.  With a hint (a known
// hyperbolic apolar member of the subject), each trial transports the hint's
// piece coordinates into the perturbed ideal; a hyperbolic form with distinct
// roots survives small perturbations, so the transported member is usually an
// exact witness at the same degree and the trial never depends on the
// enumeration finding a tall rational combination.
inline PerturbationReport perturbation_stability_test(
    const BinaryForm& f, const Rat& radius, int trials, std::uint64_t seed,
    const std::optional<BinaryForm>& hint = std::nullopt) {
  if (f.is_zero()) throw domain_error("perturbation_stability_test: zero form");
  if (radius < 0) throw domain_error("perturbation_stability_test: negative radius");
  std::optional<std::vector<Rat>> coords;
  if (hint) {
    if (hint->is_zero() || !in_apolar_ideal(*hint, f))
      throw domain_error("perturbation_stability_test: hint is not an apolar member");
    if (!is_hyperbolic(*hint))
      throw domain_error("perturbation_stability_test: hint is not hyperbolic");
    coords = apolar_piece_coordinates(f, *hint);
    if (!coords) throw internal_error("perturbation_stability_test: member outside its piece");
  }
  PerturbationReport rep;
  rep.subject = f;
  rep.radius = radius;
  rep.trials = trials;
  rep.seed = seed;
  rep.hint = hint;
  const Rng root(seed);
  for (int i = 0; i < trials; ++i) {
    Rng r = root.derive(static_cast<std::uint64_t>(i) + 1);
    BinaryForm g = f;
    for (int j = 0; j <= f.degree(); ++j) g.set_coeff(j, f.coeff(j) + r.next_rat_in_ball(radius));
    if (g.is_zero()) g = f;  // a perturbation cancelling everything falls back to the subject
    std::optional<BinaryForm> carried;
    if (coords) {
      const auto basis = apolar_piece(g, hint->degree());
      if (basis.size() == coords->size()) {
        BinaryForm cand(hint->degree());
        for (std::size_t j = 0; j < basis.size(); ++j) cand = cand + (*coords)[j] * basis[j];
        if (!cand.is_zero() && is_hyperbolic(cand)) carried = cand;
      }
    }
    const RankCertificate c = real_rank_search(g, carried);
    rep.samples.push_back({i, g, c.rank, c.rigor});
    ++rep.histogram[c.rank];
  }
  rep.all_same_rank = rep.histogram.size() <= 1;
  return rep;
}

}  // namespace waring

#endif  // WARING_RANK_HPP
