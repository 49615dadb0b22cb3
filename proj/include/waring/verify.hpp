#ifndef WARING_VERIFY_HPP
#define WARING_VERIFY_HPP

// Replay verification of certificate documents.  Every claim is re-checked
// from the serialized data:
//   - exact claims (memberships, identities, resultants, piece decisions of
//     dimension <= 2, root isolations) are recomputed and compared;
//   - theorem-backed claims have their hypotheses re-checked (the hyperbolic
//     maximal-rank fact, the containment-chain transport, the fresh-factor
//     implication between degrees);
//   - empirical claims are replayed only as far as their deterministic
//     enumeration log: the direction stream is re-enumerated and the digest
//     compared, with no re-testing of candidates;
//   - seeded constructions replay the single recorded accepted draw, never the
//     surrounding search;
//   - perturbation reports and decompositions are deterministic ends-to-end
//     and are recomputed wholesale and compared field for field.
//
// The first failing check is reported by a stable kebab-case name.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json_io.hpp"

namespace waring {

struct VerificationReport {
  bool ok = false;
  std::string failed_check;  // stable name of the first failing check
  std::string detail;        // human-readable context for the failure
  std::string summary;       // one-line description of what was verified
};

namespace verifyd {

struct check_failure {
  std::string check;
  std::string detail;
};

[[noreturn]] inline void fail(const std::string& check, const std::string& detail) {
  throw check_failure{check, detail};
}

inline void req(bool cond, const char* check, const std::string& detail) {
  if (!cond) fail(check, detail);
}

inline std::string at_degree(int e) { return "at degree " + std::to_string(e); }

// Re-enumerate the recorded direction stream and compare the digest; the
// candidates themselves are never re-tested.
inline void check_sampling_log(int dim, const SamplingLog& log, int degree) {
  Digest64 dg;
  long count = 0;
  if (dim == 1) {
    dg.feed(1);
    count = 1;
  } else {
    DirectionEnumerator en(dim);
    std::vector<long> v;
    while (count < log.tested && en.next(v, log.max_height)) {
      for (long c : v) dg.feed(static_cast<std::uint64_t>(c));
      ++count;
    }
  }
  req(count == log.tested, "sampling-count",
      "enumeration yields " + std::to_string(count) + " candidates, log claims " +
          std::to_string(log.tested) + " " + at_degree(degree));
  req(finish_sampling_digest(dg, log.max_height, log.tested) == log.digest, "sampling-digest",
      "direction-stream digest mismatch " + at_degree(degree));
}

// Hypotheses for transport evidence, supplied by the chain verifier: pieces of
// the final ideal at degree rank-1 are contained in the base ideal and the
// base certificate covers that degree.
struct TransportContext {
  bool available = false;
};

inline void check_rank_certificate(const RankCertificate& rc,
                                   const TransportContext& transport = {}) {
  const BinaryForm& f = rc.subject;
  req(!f.is_zero(), "subject-nonzero", "certificate subject is the zero form");
  const int d = f.degree();
  req(d >= 1, "subject-degree", "certificate subject must have positive degree");
  req(rc.rank >= 1 && rc.rank <= d + 1, "rank-range",
      "claimed rank " + std::to_string(rc.rank) + " outside [1, degree+1]");
  req(rc.witness.degree() == rc.rank, "witness-degree",
      "witness degree differs from the claimed rank");
  req(in_apolar_ideal(rc.witness, f), "witness-membership",
      "witness is not in the subject's apolar ideal");
  {
    const HyperbolicityCertificate re = hyperbolicity_certificate(rc.witness);
    req(re.hyperbolic, "witness-hyperbolicity", "rank witness is not hyperbolic");
    req(hyperbolicity_to_json(re) == hyperbolicity_to_json(rc.witness_cert),
        "witness-certificate-replay", "recorded hyperbolicity record does not replay");
  }

  // the absence evidence must cover exactly the degrees between the first
  // nonzero piece and the rank
  const int e1 = min_apolar_degree(f);
  {
    std::size_t want = 0;
    for (int e = e1; e < rc.rank; ++e) ++want;
    req(rc.lower.size() == want, "lower-coverage",
        "expected absence evidence at each degree in [" + std::to_string(e1) + ", " +
            std::to_string(rc.rank - 1) + "]");
  }
  Rigor fold = Rigor::EXACT;
  for (std::size_t i = 0; i < rc.lower.size(); ++i) {
    const LowerBoundEvidence& ev = rc.lower[i];
    const int e = e1 + static_cast<int>(i);
    req(ev.degree == e, "lower-degrees", "absence evidence out of order " + at_degree(e));
    req(ev.verdict == LowerVerdict::NO_HYPERBOLIC_FORM, "lower-verdict",
        "undecided verdict proves nothing " + at_degree(e));
    const int dim = apolar_piece_dim(f, e);
    req(ev.piece_dim == dim, "piece-dimension",
        "recorded piece dimension differs from the catalecticant kernel " + at_degree(e));
    if (dim <= 2) {
      const PieceDecision dec = decide_piece(f, e);
      req(!dec.has_hyperbolic, "piece-absence",
          "the piece contains a hyperbolic member " + at_degree(e));
      req(lower_evidence_to_json(dec.evidence) == lower_evidence_to_json(ev),
          "evidence-replay", "exact piece decision does not replay " + at_degree(e));
    } else if (const auto* se = std::get_if<SearchEvidence>(&ev.payload)) {
      req(ev.rigor == Rigor::EMPIRICAL, "evidence-rigor",
          "sampling evidence must be marked empirical " + at_degree(e));
      check_sampling_log(dim, se->log, e);
    } else if (const auto* ie = std::get_if<ImpliedEvidence>(&ev.payload)) {
      req(ie->source_degree > e && ie->source_degree < rc.rank, "implied-source",
          "implication source must lie strictly between the degree and the rank " +
              at_degree(e));
      const std::size_t si = static_cast<std::size_t>(ie->source_degree - e1);
      req(si < rc.lower.size() && rc.lower[si].degree == ie->source_degree &&
              rc.lower[si].verdict == LowerVerdict::NO_HYPERBOLIC_FORM,
          "implied-source", "implication source record missing " + at_degree(e));
      req(ev.rigor == weaker_of(Rigor::THEOREM_BACKED, rc.lower[si].rigor), "implied-rigor",
          "implied absence cannot be stronger than theorem-backed " + at_degree(e));
    } else if (const auto* te = std::get_if<TheoremEvidence>(&ev.payload)) {
      req(ev.rigor == Rigor::THEOREM_BACKED, "evidence-rigor",
          "theorem evidence must be marked theorem-backed " + at_degree(e));
      if (te->fact_id == kFactHyperbolicMaxRank) {
        req(rc.rank == d, "theorem-rank-equals-degree",
            "the maximal-rank fact needs rank equal to degree " + at_degree(e));
        req(is_hyperbolic(f), "theorem-hyperbolic-subject",
            "the maximal-rank fact needs a hyperbolic subject " + at_degree(e));
      } else if (te->fact_id == kFactChainTransport) {
        req(transport.available, "theorem-transport-context",
            "containment-chain transport is only valid inside a verified chain " +
                at_degree(e));
        req(e == rc.rank - 1, "theorem-transport-degree",
            "transport evidence applies only to the top degree " + at_degree(e));
      } else {
        fail("theorem-unknown-fact", "unrecognized fact id '" + te->fact_id + "'");
      }
    } else {
      // empty-piece / single-member / pencil payloads with dim >= 3 cannot
      // happen: those are exactly the dim <= 2 decisions replayed above
      fail("evidence-shape", "exact evidence recorded for a piece of dimension >= 3 " +
                                 at_degree(e));
    }
    fold = weaker_of(fold, ev.rigor);
  }
  req(rc.rigor == fold, "rigor-fold",
      "certificate rigor must be the weakest evidence level");
}

inline void check_typicality(const TypicalityCertificate& t) {
  const BinaryForm& f = t.subject;
  req(!f.is_zero(), "subject-nonzero", "typicality subject is the zero form");
  const int d = f.degree();
  req(t.generator_degrees == generic_degrees(d), "typicality-generator-degrees",
      "recorded generator degrees are not the generic pair");
  req(is_generic_degrees(f), "typicality-generic",
      "subject's apolar ideal is not generated in generic degrees");
  const int mcr = catalecticant(f, d / 2).rank();
  req(t.middle_catalecticant_rank == mcr && mcr == d / 2 + 1, "typicality-catalecticant",
      "middle catalecticant rank mismatch");
  req(t.rank_cert.subject == f, "typicality-rank-subject",
      "nested rank certificate is about a different form");
  const int m = t.rank_cert.rank;
  if (!t.rank_cert.lower.empty() && t.rank_cert.lower.back().degree == m - 1) {
    req(lower_evidence_to_json(t.top_evidence) ==
            lower_evidence_to_json(t.rank_cert.lower.back()),
        "typicality-top-evidence", "top evidence differs from the rank certificate's");
  } else {
    req(apolar_piece_dim(f, m - 1) == 0, "typicality-top-evidence",
        "no evidence at degree rank-1 and the piece there is nonzero");
    req(t.top_evidence.degree == m - 1 && t.top_evidence.piece_dim == 0 &&
            t.top_evidence.verdict == LowerVerdict::NO_HYPERBOLIC_FORM &&
            t.top_evidence.rigor == Rigor::EXACT &&
            std::holds_alternative<EmptyPieceEvidence>(t.top_evidence.payload),
        "typicality-top-evidence", "synthesized empty-piece record malformed");
  }
  req(t.typical == (t.top_evidence.verdict == LowerVerdict::NO_HYPERBOLIC_FORM),
      "typicality-flag", "typicality flag contradicts the top evidence");
  req(t.level == t.top_evidence.rigor, "typicality-level",
      "typicality level must equal the top evidence rigor");
}

inline void check_base(const WitnessBase& base, int m, std::uint64_t chain_seed) {
  req(base.form.degree() == base.degree, "base-form-degree",
      "base form degree differs from the recorded degree");
  if (base.kind == BaseKind::MINIMAL_EXACT) {
    req(base.degree == 2 * m - 2, "base-degree-policy",
        "sampled bases sit at degree 2m-2");
    req(base.seed == chain_seed, "base-seed", "base seed differs from the chain seed");
    const auto draw = detail::power_sum_attempt(m, base.degree, base.seed, base.attempt);
    req(draw.has_value() && draw->form == base.form, "base-replay",
        "recorded seed and attempt do not regenerate the base form");
    req(base.cert.rigor == Rigor::EXACT, "base-rigor-exact",
        "sampled bases must carry fully exact certificates");
  } else {
    req(base.degree == m, "base-degree-policy",
        "hyperbolic-product bases sit at degree m");
    req(is_hyperbolic(base.form), "base-hyperbolic",
        "hyperbolic-product base form is not hyperbolic");
  }
  req(base.cert.subject == base.form, "base-subject",
      "base certificate is about a different form");
  req(base.cert.rank == m, "base-rank", "base certificate rank differs from the chain rank");
  check_rank_certificate(base.cert);
}

// One induction step: all identities, point conditions, and the containment
// records are re-checked exactly against the serialized data.
inline void check_step(const WitnessStep& st, const BinaryForm& prev_form,
                       const BinaryForm& prev_g1, const BinaryForm& prev_g2,
                       const BinaryForm& prev_s, int m, int index) {
  const std::string where = " in step " + std::to_string(index);
  req(st.m == m, "step-m", "step rank differs from the chain rank" + where);
  req(st.input == prev_form, "step-input",
      "step input differs from the preceding form" + where);
  req((st.in_g1 == prev_g1 && st.in_g2 == prev_g2) ||
          (st.in_g1 == prev_g2 && st.in_g2 == prev_g1),
      "step-generators", "step generators are not the preceding pair" + where);
  const int D = st.input.degree();
  switch (st.kind) {
    case StepCase::EVEN_MINIMAL:
      req(D % 2 == 0 && m == D / 2 + 1, "step-case",
          "even-minimal applies to even degree at the minimal rank" + where);
      break;
    case StepCase::EVEN_GENERAL:
      req(D % 2 == 0 && m > D / 2 + 1, "step-case",
          "even-general applies to even degree above the minimal rank" + where);
      break;
    case StepCase::ODD:
      req(D % 2 == 1 && m >= (D - 1) / 2 + 2, "step-case",
          "odd case applies to odd degree" + where);
      break;
  }

  // witness carried into the step (the odd case may nudge it)
  if (st.kind == StepCase::ODD && st.escape_eps != 0) {
    const int k = (D - 1) / 2;
    req(m - k - 2 >= 0, "step-escape-degree", "escape bump degree negative" + where);
    const BinaryForm bump = BinaryForm::monomial(m - k - 2, m - k - 2) * st.in_g2;
    req(st.s == prev_s + st.escape_eps * bump, "step-escape",
        "escaped witness is not the recorded nudge of the carried witness" + where);
  } else {
    req(st.s == prev_s, "step-witness-carry",
        "step witness differs from the carried witness" + where);
  }
  req(st.s.degree() == m, "step-witness-degree", "carried witness degree is not m" + where);
  req(is_hyperbolic(st.s), "step-witness-hyperbolic",
      "carried witness is not hyperbolic" + where);

  // unique syzygy representation over the input pair
  req(in_apolar_ideal(st.s, st.input), "step-witness-input-membership",
      "carried witness left the input ideal" + where);
  {
    const auto [q1, q2] = express_in_ideal(st.s, st.in_g1, st.in_g2);
    req(q1 == st.q1 && q2 == st.q2, "step-syzygy",
        "recorded multipliers are not the unique representation" + where);
  }

  const Rat pa = Rat(st.point.a), pb = Rat(st.point.b);
  req(st.point.b > 0 || (st.point.b == 0 && st.point.a == 1), "step-point-normal",
      "projective point must be (a, b > 0) or (1, 0)" + where);
  req(gcd(st.point.a, st.point.b) == 1, "step-point-primitive",
      "projective point coordinates share a factor" + where);
  req(st.ell == linear_from_root(st.point), "step-ell",
      "recorded linear factor is not the canonical form vanishing at the point" + where);

  switch (st.kind) {
    case StepCase::EVEN_MINIMAL: {
      req(st.s.eval(pa, pb) != 0, "step-point-witness",
          "the witness vanishes at the chosen point" + where);
      req(st.out_g1 == st.s, "step-output-generator",
          "even-minimal re-generates the ideal with the witness itself" + where);
      const BinaryForm& partner = st.q2.is_zero() ? st.in_g2 : st.in_g1;
      req(st.out_g2 == st.ell * partner, "step-output-generator",
          "second output generator is not the recorded multiple of the partner" + where);
      break;
    }
    case StepCase::EVEN_GENERAL: {
      // alpha is pinned against the serialized out_g1; the point only needs
      // to be a root of the adjusted multiplier away from the adjusted
      // generator's zero locus
      const BinaryForm p1p = st.alpha == 0 ? st.in_g1 : st.in_g1 + st.alpha * st.in_g2;
      req(st.out_g1 == p1p, "step-output-generator",
          "adjusted generator mismatch" + where);
      req(p1p.eval(pa, pb) != 0, "step-nonvanishing",
          "adjusted generator vanishes at the point" + where);
      const BinaryForm r = st.alpha == 0 ? st.q2 : st.q2 - st.alpha * st.q1;
      req(r.eval(pa, pb) == 0, "step-root",
          "adjusted multiplier does not vanish at the point" + where);
      req(st.ell * st.q == r, "step-factorization",
          "recorded cofactor does not reproduce the adjusted multiplier" + where);
      req(st.out_g2 == st.ell * st.in_g2, "step-output-generator",
          "second output generator is not ell times the second input generator" + where);
      req(st.s_u == st.q1 && st.s_v == st.q, "step-witness-multipliers",
          "witness multipliers are not the step's (q1, q)" + where);
      break;
    }
    case StepCase::ODD: {
      req(st.s.eval(pa, pb) != 0, "step-point-witness",
          "the witness vanishes at the chosen point" + where);
      const Rat q2v = st.q2.eval(pa, pb);
      req(q2v != 0, "step-point-multiplier", "q2 vanishes at the chosen point" + where);
      const Rat v = st.q1.eval(pa, pb) / q2v;
      const BinaryForm want_hat = st.point.a != 0 ? BinaryForm(1, {Rat(0), v / pa})
                                                  : BinaryForm(1, {v / pb, Rat(0)});
      req(st.ell_hat == want_hat, "step-adjuster",
          "recorded linear adjuster is not the canonical choice" + where);
      const BinaryForm p2p =
          st.ell_hat.is_zero() ? st.in_g2 : st.in_g2 + st.ell_hat * st.in_g1;
      req(st.out_g2 == p2p, "step-output-generator", "adjusted generator mismatch" + where);
      req(p2p.eval(pa, pb) != 0, "step-nonvanishing",
          "adjusted generator vanishes at the point" + where);
      const BinaryForm r = st.ell_hat.is_zero() ? st.q1 : st.q1 - st.ell_hat * st.q2;
      req(r.eval(pa, pb) == 0, "step-root",
          "adjusted multiplier does not vanish at the point" + where);
      req(st.ell * st.q == r, "step-factorization",
          "recorded cofactor does not reproduce the adjusted multiplier" + where);
      req(st.out_g1 == st.ell * st.in_g1, "step-output-generator",
          "first output generator is not ell times the first input generator" + where);
      req(st.s_u == st.q && st.s_v == st.q2, "step-witness-multipliers",
          "witness multipliers are not the step's (q, q2)" + where);
      break;
    }
  }

  // shared output checks
  const auto want = generic_degrees(D + 1);
  req(st.out_g1.degree() == want.first && st.out_g2.degree() == want.second,
      "step-output-degrees", "output generator degrees are not the generic pair" + where);
  const Rat res = resultant(st.out_g1, st.out_g2);
  req(res == st.out_res && res != 0, "step-resultant",
      "output pair resultant mismatch" + where);
  req(in_apolar_ideal(st.out_g1, st.input) && in_apolar_ideal(st.out_g2, st.input),
      "step-output-membership", "output generators left the input ideal" + where);
  req(st.output == form_from_apolar(st.out_g1, st.out_g2), "step-output-form",
      "output form is not the form annihilated by the output pair" + where);
  req(st.output.degree() == D + 1, "step-output-degree",
      "output degree must grow by one" + where);
  req(is_generic_degrees(st.output), "step-output-generic",
      "output form lost generic generator degrees" + where);
  req(combination_equals(st.s, st.s_u, st.out_g1, st.s_v, st.out_g2),
      "step-witness-reproduction",
      "witness multipliers do not reproduce the witness over the output pair" + where);
  req(in_apolar_ideal(st.s, st.output), "step-witness-membership",
      "witness left the output ideal" + where);

  // containment of the output ideal's degree-(m-1) piece over the input pair
  const auto basis = apolar_piece(st.output, m - 1);
  req(basis.size() == st.containment.size(), "step-containment-count",
      "containment record count differs from the piece dimension" + where);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ContainmentRecord& rec = st.containment[i];
    req(rec.member == basis[i], "step-containment-member",
        "containment member is not the canonical piece basis" + where);
    req(combination_equals(rec.member, rec.u, st.in_g1, rec.v, st.in_g2),
        "step-containment-identity",
        "containment multipliers do not reproduce the member" + where);
  }
}

inline void check_chain(const CertificateChain& ch, const BinaryForm& subject) {
  req(admissible_pair(ch.target_degree, ch.rank), "admissible-pair",
      "the (degree, rank) pair is outside the admissible range");
  req(ch.final_form == subject, "subject-match",
      "document subject differs from the chain's final form");
  req(ch.final_form.degree() == ch.target_degree, "final-degree",
      "final form degree differs from the target degree");
  const int m = ch.rank;
  const bool want_minimal = ch.target_degree >= 2 * m - 2;
  req((ch.base.kind == BaseKind::MINIMAL_EXACT) == want_minimal, "base-kind-policy",
      "base kind does not match the degree policy");
  check_base(ch.base, m, ch.seed);
  req(static_cast<int>(ch.steps.size()) == ch.target_degree - ch.base.degree, "chain-length",
      "step count differs from the degree climb");

  BinaryForm cur = ch.base.form;
  ApolarGenerators gens = apolar_generators(cur);
  req(gens.generic, "base-generic", "base form is not generated in generic degrees");
  BinaryForm g1 = gens.g1, g2 = gens.g2;
  BinaryForm s = ch.base.cert.witness;
  for (std::size_t i = 0; i < ch.steps.size(); ++i) {
    const WitnessStep& st = ch.steps[i];
    check_step(st, cur, g1, g2, s, m, static_cast<int>(i));
    cur = st.output;
    g1 = st.out_g1;
    g2 = st.out_g2;
    s = st.s;
  }
  req(cur == ch.final_form, "chain-final-form",
      "the steps do not arrive at the recorded final form");
  req(ch.final_cert.subject == ch.final_form, "final-cert-subject",
      "final certificate is about a different form");
  req(ch.final_cert.rank == m, "final-cert-rank",
      "final certificate rank differs from the chain rank");
  req(ch.final_cert.witness == s, "final-cert-witness",
      "final certificate witness differs from the carried witness");

  TransportContext transport;
  if (!ch.steps.empty()) {
    // the per-step containments verified above carry the top piece down to the
    // base; the base must cover degree rank-1 with a no-hyperbolic-form verdict
    bool base_covers = apolar_piece_dim(ch.base.form, m - 1) == 0;
    for (const auto& ev : ch.base.cert.lower)
      base_covers = base_covers || (ev.degree == m - 1 &&
                                    ev.verdict == LowerVerdict::NO_HYPERBOLIC_FORM);
    req(base_covers, "transport-base-coverage",
        "the base certificate does not cover degree rank-1");
    transport.available = true;
  } else {
    req(rank_certificate_to_json(ch.final_cert) == rank_certificate_to_json(ch.base.cert),
        "final-cert-base-match",
        "a chain with no steps must reuse the base certificate");
  }
  check_rank_certificate(ch.final_cert, transport);

  req(rank_certificate_to_json(ch.typicality.rank_cert) ==
          rank_certificate_to_json(ch.final_cert),
      "typicality-rank-cert-match",
      "typicality analysis nests a different rank certificate");
  req(ch.typicality.subject == ch.final_form, "typicality-subject",
      "typicality analysis is about a different form");
  check_typicality(ch.typicality);
  req(ch.overall == ch.final_cert.rigor, "chain-overall",
      "chain rigor must equal the final certificate's rigor");
}

}  // namespace verifyd

inline VerificationReport verify_document(const CertificateDocument& doc) {
  VerificationReport rep;
  try {
    if (const auto* rc = std::get_if<RankCertificate>(&doc.payload)) {
      verifyd::req(rc->subject == doc.subject, "subject-match",
                   "document subject differs from the certificate subject");
      verifyd::check_rank_certificate(*rc);
      rep.summary = "rank certificate: degree " + std::to_string(doc.subject.degree()) +
                    ", real rank " + std::to_string(rc->rank) + ", rigor " +
                    rigor_name(rc->rigor);
    } else if (const auto* ch = std::get_if<CertificateChain>(&doc.payload)) {
      verifyd::check_chain(*ch, doc.subject);
      rep.summary = "witness chain: degree " + std::to_string(ch->target_degree) +
                    ", rank " + std::to_string(ch->rank) + ", " +
                    std::to_string(ch->steps.size()) + " steps, rigor " +
                    rigor_name(ch->overall);
    } else if (const auto* ty = std::get_if<TypicalityCertificate>(&doc.payload)) {
      verifyd::req(ty->subject == doc.subject, "subject-match",
                   "document subject differs from the analysis subject");
      verifyd::check_rank_certificate(ty->rank_cert);
      verifyd::check_typicality(*ty);
      rep.summary = std::string("typicality analysis: ") +
                    (ty->typical ? "typical" : "not typical") + " at rank " +
                    std::to_string(ty->rank_cert.rank) + ", level " + rigor_name(ty->level);
    } else if (const auto* pr = std::get_if<PerturbationReport>(&doc.payload)) {
      verifyd::req(pr->subject == doc.subject, "subject-match",
                   "document subject differs from the report subject");
      const PerturbationReport replay =
          perturbation_stability_test(pr->subject, pr->radius, pr->trials, pr->seed, pr->hint);
      verifyd::req(perturbation_report_to_json(replay) == perturbation_report_to_json(*pr),
                   "perturbation-replay",
                   "the seeded perturbation run does not reproduce the report");
      rep.summary = "perturbation report: " + std::to_string(pr->trials) + " trials, " +
                    std::to_string(pr->histogram.size()) + " distinct ranks";
    } else if (const auto* dc = std::get_if<Decomposition>(&doc.payload)) {
      verifyd::req(dc->subject == doc.subject, "subject-match",
                   "document subject differs from the decomposition subject");
      const Decomposition replay =
          dc->kind == DecompositionKind::EXACT
              ? decompose_rational(dc->witness, dc->subject)
              : decompose_numeric(dc->witness, dc->subject, dc->precision);
      verifyd::req(decomposition_to_json(replay) == decomposition_to_json(*dc),
                   "decomposition-replay",
                   "the deterministic decomposition does not reproduce the document");
      rep.summary = std::string("decomposition: ") + decomposition_kind_name(dc->kind) +
                    ", " + std::to_string(dc->terms.size()) + " terms";
    }
    rep.ok = true;
  } catch (const verifyd::check_failure& cf) {
    rep.ok = false;
    rep.failed_check = cf.check;
    rep.detail = cf.detail;
  } catch (const domain_error& e) {
    rep.ok = false;
    rep.failed_check = "library-invariant";
    rep.detail = e.what();
  } catch (const internal_error& e) {
    rep.ok = false;
    rep.failed_check = "library-invariant";
    rep.detail = e.what();
  }
  return rep;
}

}  // namespace waring

#endif  // WARING_VERIFY_HPP
