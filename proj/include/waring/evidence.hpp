#ifndef WARING_EVIDENCE_HPP
#define WARING_EVIDENCE_HPP

// Rigor taxonomy and lower-bound evidence records for rank certificates.
//
// Each claim "the degree-e piece of the apolar ideal contains no hyperbolic
// form" is recorded together with how it was established:
//
//   EmptyPieceEvidence     the piece is zero-dimensional            (EXACT)
//   SingleMemberEvidence   dim 1; the spanning member is tested     (EXACT)
//   PencilEvidence         dim 2; full pencil decision trace        (EXACT)
//   ImpliedEvidence        absence at a recorded higher degree e'
//                          implies absence here: a hyperbolic form
//                          times fresh distinct linear factors stays
//                          hyperbolic, so witnesses propagate upward (inherits)
//   TheoremEvidence        a named structural fact with checkable
//                          hypotheses (including absence transported
//                          through a recorded ideal containment
//                          chain from a base form)                  (THEOREM_BACKED)
//   SearchEvidence         exhausted deterministic direction search (EMPIRICAL)

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "binary_form.hpp"
#include "hyperbolic.hpp"
#include "pencil.hpp"

namespace waring {

enum class Rigor { EXACT, THEOREM_BACKED, EMPIRICAL };

inline const char* rigor_name(Rigor r) {
  switch (r) {
    case Rigor::EXACT: return "exact";
    case Rigor::THEOREM_BACKED: return "theorem-backed";
    case Rigor::EMPIRICAL: return "empirical";
  }
  return "?";
}

// EXACT is the strongest level, EMPIRICAL the weakest.
inline Rigor weaker_of(Rigor a, Rigor b) {
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

// Replayable fingerprint of an exhausted deterministic search.
struct SamplingLog {
  int max_height = 0;       // direction-vector height cap that was exhausted
  long tested = 0;          // number of candidate members tested
  std::uint64_t digest = 0; // FNV-1a over the direction stream
};

struct EmptyPieceEvidence {};

struct SingleMemberEvidence {
  BinaryForm member;               // canonical spanning member of the piece
  HyperbolicityCertificate cert;   // member's failing hyperbolicity record
};

struct PencilEvidence {
  PencilTrace trace;               // verdict false: every sample non-hyperbolic
};

struct ImpliedEvidence {
  int source_degree = 0;           // recorded higher degree whose absence implies this one
};

struct TheoremEvidence {
  std::string fact_id;             // names a fact below; verifiers check its hypotheses
};

// A real-rooted form with distinct roots has real rank equal to its degree,
// so no element of its apolar ideal below that degree is hyperbolic.
// Hypotheses checked by the verifier: the subject form is hyperbolic and the
// claimed rank equals its degree.
inline constexpr const char* kFactHyperbolicMaxRank = "hyperbolic-form-rank-equals-degree";

// The degree-e piece of the final form's apolar ideal is contained in the base
// form's piece through the recorded chain of ideal containments, and the base
// piece contains no hyperbolic form.  Hypotheses checked by the verifier: the
// per-step containment records multiply out exactly and the base certificate
// covers the degree.
inline constexpr const char* kFactChainTransport = "absence-inherited-through-containment-chain";

struct SearchEvidence {
  SamplingLog log;
};

using LowerBoundPayload = std::variant<EmptyPieceEvidence, SingleMemberEvidence, PencilEvidence,
                                       ImpliedEvidence, TheoremEvidence, SearchEvidence>;

enum class LowerVerdict { NO_HYPERBOLIC_FORM, UNDECIDED };

struct LowerBoundEvidence {
  int degree = 0;       // piece degree e the claim is about
  int piece_dim = 0;    // dim of the degree-e piece of the apolar ideal
  LowerVerdict verdict = LowerVerdict::NO_HYPERBOLIC_FORM;
  Rigor rigor = Rigor::EXACT;
  LowerBoundPayload payload;
};

}  // namespace waring

#endif  // WARING_EVIDENCE_HPP
