#ifndef WARING_JSON_IO_HPP
#define WARING_JSON_IO_HPP

// JSON encoding of forms, certificates, chains, reports, and decompositions.
//
// Conventions:
//   - rationals are strings "numerator/denominator", reduced, never floats;
//   - big integers, seeds, attempts, and digests are decimal strings;
//   - every serialized field is load-bearing for the verifier: fields that a
//     given variant does not use are omitted rather than defaulted, and keys
//     are checked strictly in both directions (unknown or missing keys are
//     parse errors);
//   - documents carry a schema version ("major.minor"); readers reject
//     unknown majors.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "decompose.hpp"
#include "evidence.hpp"
#include "rank.hpp"
#include "witness.hpp"

namespace waring {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kGeneratorVersion = "waring 1.0.0";

// Malformed document (bad JSON handled by the caller; bad shape/values here).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

namespace jsond {

[[noreturn]] inline void fail(const std::string& ctx, const std::string& what) {
  throw parse_error(ctx + ": " + what);
}

inline void check_keys(const Json& j, const std::string& ctx,
                       const std::set<std::string>& required,
                       const std::set<std::string>& optional = {}) {
  if (!j.is_object()) fail(ctx, "expected an object");
  for (const auto& item : j.items()) {
    const std::string& k = item.key();
    if (!required.count(k) && !optional.count(k)) fail(ctx, "unknown key '" + k + "'");
  }
  for (const auto& k : required)
    if (!j.contains(k)) fail(ctx, "missing key '" + k + "'");
}

inline const Json& field(const Json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) fail(ctx, std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::string get_string(const Json& j, const char* key, const std::string& ctx) {
  const Json& v = field(j, key, ctx);
  if (!v.is_string()) fail(ctx, std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

inline long get_integer(const Json& j, const char* key, const std::string& ctx) {
  const Json& v = field(j, key, ctx);
  if (!v.is_number_integer()) fail(ctx, std::string("key '") + key + "' must be an integer");
  return v.get<long>();
}

inline bool get_bool(const Json& j, const char* key, const std::string& ctx) {
  const Json& v = field(j, key, ctx);
  if (!v.is_boolean()) fail(ctx, std::string("key '") + key + "' must be a boolean");
  return v.get<bool>();
}

inline const Json& get_array(const Json& j, const char* key, const std::string& ctx) {
  const Json& v = field(j, key, ctx);
  if (!v.is_array()) fail(ctx, std::string("key '") + key + "' must be an array");
  return v;
}

inline bool all_digits(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace jsond

// ---------------------------------------------------------------------------
// primitives

inline Json rat_to_json(const Rat& r) { return rat_to_string(r); }

inline Rat rat_from_json(const Json& j, const std::string& ctx) {
  if (!j.is_string()) jsond::fail(ctx, "rational must be a string");
  const std::string s = j.get<std::string>();
  Rat r;
  try {
    r = rat_from_string(s);
  } catch (const domain_error& e) {
    jsond::fail(ctx, e.what());
  }
  if (rat_to_string(r) != s) jsond::fail(ctx, "rational not in reduced num/den form: " + s);
  return r;
}

inline Json int_to_json(const Int& v) { return v.get_str(); }

inline Int int_from_json(const Json& j, const std::string& ctx) {
  if (!j.is_string()) jsond::fail(ctx, "integer must be a decimal string");
  const std::string s = j.get<std::string>();
  if (!jsond::all_digits(s)) jsond::fail(ctx, "malformed integer literal: " + s);
  return Int(s);
}

inline Json u64_to_json(std::uint64_t v) { return std::to_string(v); }

inline std::uint64_t u64_from_json(const Json& j, const std::string& ctx) {
  if (!j.is_string()) jsond::fail(ctx, "expected a decimal string");
  const std::string s = j.get<std::string>();
  if (s.empty() || s.size() > 20 || s[0] == '-' || !jsond::all_digits(s))
    jsond::fail(ctx, "malformed unsigned literal: " + s);
  std::uint64_t v = 0;
  for (char c : s) {
    const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (v > (UINT64_MAX - digit) / 10) jsond::fail(ctx, "unsigned literal overflows: " + s);
    v = v * 10 + digit;
  }
  return v;
}

// ---------------------------------------------------------------------------
// forms and univariate polynomials

inline Json form_to_json(const BinaryForm& f) {
  Json coeffs = Json::array();
  for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(rat_to_json(f.coeff(i)));
  return Json{{"degree", f.degree()}, {"coefficients", std::move(coeffs)}};
}

inline BinaryForm form_from_json(const Json& j, const std::string& ctx) {
  jsond::check_keys(j, ctx, {"degree", "coefficients"}, {"provenance"});
  const long d = jsond::get_integer(j, "degree", ctx);
  if (d < 0 || d > 1000) jsond::fail(ctx, "degree out of range");
  const Json& arr = jsond::get_array(j, "coefficients", ctx);
  if (static_cast<long>(arr.size()) != d + 1)
    jsond::fail(ctx, "coefficient array length must be degree + 1");
  BinaryForm f(static_cast<int>(d));
  for (long i = 0; i <= d; ++i)
    f.set_coeff(static_cast<int>(i),
                rat_from_json(arr[static_cast<std::size_t>(i)], ctx + ".coefficients"));
  return f;
}

inline Json zpoly_to_json(const ZPoly& p) {
  Json arr = Json::array();
  for (const Int& c : p.coeffs()) arr.push_back(int_to_json(c));
  return arr;
}

inline ZPoly zpoly_from_json(const Json& j, const std::string& ctx) {
  if (!j.is_array()) jsond::fail(ctx, "expected a coefficient array");
  std::vector<Int> c;
  for (const auto& v : j) c.push_back(int_from_json(v, ctx));
  ZPoly p(c);
  if (p.deg() + 1 != static_cast<int>(c.size()))
    jsond::fail(ctx, "leading coefficient must be nonzero");
  return p;
}

// ---------------------------------------------------------------------------
// root isolation and hyperbolicity

inline Json interval_to_json(const IsolatingInterval& iv) {
  return Json{{"lo", rat_to_json(iv.lo)}, {"hi", rat_to_json(iv.hi)}};
}

inline IsolatingInterval interval_from_json(const Json& j, const std::string& ctx) {
  jsond::check_keys(j, ctx, {"lo", "hi"});
  return {rat_from_json(j.at("lo"), ctx + ".lo"), rat_from_json(j.at("hi"), ctx + ".hi")};
}

inline Json root_isolation_to_json(const RootIsolation& r) {
  Json finite = Json::array();
  for (const auto& iv : r.finite) finite.push_back(interval_to_json(iv));
  return Json{{"finite", std::move(finite)},
              {"inf_multiplicity", r.inf_multiplicity},
              {"multiplicity_free", r.multiplicity_free}};
}

inline RootIsolation root_isolation_from_json(const Json& j, const std::string& ctx) {
  jsond::check_keys(j, ctx, {"finite", "inf_multiplicity", "multiplicity_free"});
  RootIsolation r;
  for (const auto& v : jsond::get_array(j, "finite", ctx))
    r.finite.push_back(interval_from_json(v, ctx + ".finite"));
  const long im = jsond::get_integer(j, "inf_multiplicity", ctx);
  if (im < 0) jsond::fail(ctx, "inf_multiplicity must be nonnegative");
  r.inf_multiplicity = static_cast<int>(im);
  r.multiplicity_free = jsond::get_bool(j, "multiplicity_free", ctx);
  return r;
}

inline Json hyperbolicity_to_json(const HyperbolicityCertificate& c) {
  Json j{{"subject", form_to_json(c.subject)},
         {"hyperbolic", c.hyperbolic},
         {"real_root_count", c.real_root_count}};
  if (c.hyperbolic)
    j["roots"] = root_isolation_to_json(c.roots);
  else
    j["failure"] = c.failure;
  return j;
}

inline HyperbolicityCertificate hyperbolicity_from_json(const Json& j, const std::string& ctx) {
  HyperbolicityCertificate c;
  if (!j.is_object() || !j.contains("hyperbolic"))
    jsond::fail(ctx, "expected a hyperbolicity record");
  c.hyperbolic = jsond::get_bool(j, "hyperbolic", ctx);
  if (c.hyperbolic)
    jsond::check_keys(j, ctx, {"subject", "hyperbolic", "real_root_count", "roots"});
  else
    jsond::check_keys(j, ctx, {"subject", "hyperbolic", "real_root_count", "failure"});
  c.subject = form_from_json(j.at("subject"), ctx + ".subject");
  const long n = jsond::get_integer(j, "real_root_count", ctx);
  if (n < 0) jsond::fail(ctx, "real_root_count must be nonnegative");
  c.real_root_count = static_cast<int>(n);
  if (c.hyperbolic)
    c.roots = root_isolation_from_json(j.at("roots"), ctx + ".roots");
  else
    c.failure = jsond::get_string(j, "failure", ctx);
  return c;
}

// ---------------------------------------------------------------------------
// pencil traces

inline Json pencil_sample_to_json(const PencilSample& s) {
  Json j{{"hyperbolic", s.hyperbolic}, {"real_root_count", s.real_root_count}};
  if (s.at_infinity)
    j["at_infinity"] = true;
  else
    j["t"] = rat_to_json(s.t);
  return j;
}

inline PencilSample pencil_sample_from_json(const Json& j, const std::string& ctx) {
  PencilSample s;
  if (!j.is_object()) jsond::fail(ctx, "expected a pencil sample");
  if (j.contains("at_infinity")) {
    jsond::check_keys(j, ctx, {"at_infinity", "hyperbolic", "real_root_count"});
    if (!jsond::get_bool(j, "at_infinity", ctx)) jsond::fail(ctx, "at_infinity must be true");
    s.at_infinity = true;
  } else {
    jsond::check_keys(j, ctx, {"t", "hyperbolic", "real_root_count"});
    s.t = rat_from_json(j.at("t"), ctx + ".t");
  }
  s.hyperbolic = jsond::get_bool(j, "hyperbolic", ctx);
  const long n = jsond::get_integer(j, "real_root_count", ctx);
  if (n < 0) jsond::fail(ctx, "real_root_count must be nonnegative");
  s.real_root_count = static_cast<int>(n);
  return s;
}

inline Json pencil_trace_to_json(const PencilTrace& t) {
  Json roots = Json::array();
  for (const auto& iv : t.disc_roots) roots.push_back(interval_to_json(iv));
  Json samples = Json::array();
  for (const auto& s : t.samples) samples.push_back(pencil_sample_to_json(s));
  return Json{{"a", form_to_json(t.a)},
              {"b", form_to_json(t.b)},
              {"discriminant", zpoly_to_json(t.disc)},
              {"disc_zero", t.disc_zero},
              {"disc_roots", std::move(roots)},
              {"samples", std::move(samples)}};
}

inline PencilTrace pencil_trace_from_json(const Json& j, const std::string& ctx) {
  jsond::check_keys(j, ctx, {"a", "b", "discriminant", "disc_zero", "disc_roots", "samples"});
  PencilTrace t;
  t.a = form_from_json(j.at("a"), ctx + ".a");
  t.b = form_from_json(j.at("b"), ctx + ".b");
  t.disc = zpoly_from_json(j.at("discriminant"), ctx + ".discriminant");
  t.disc_zero = jsond::get_bool(j, "disc_zero", ctx);
  for (const auto& v : jsond::get_array(j, "disc_roots", ctx))
    t.disc_roots.push_back(interval_from_json(v, ctx + ".disc_roots"));
  for (const auto& v : jsond::get_array(j, "samples", ctx))
    t.samples.push_back(pencil_sample_from_json(v, ctx + ".samples"));
  return t;
}

// ---------------------------------------------------------------------------
// lower-bound evidence

inline const char* verdict_name(LowerVerdict v) {
  return v == LowerVerdict::NO_HYPERBOLIC_FORM ? "no-hyperbolic-form" : "undecided";
}

inline LowerVerdict verdict_from_name(const std::string& s, const std::string& ctx) {
  if (s == "no-hyperbolic-form") return LowerVerdict::NO_HYPERBOLIC_FORM;
  if (s == "undecided") return LowerVerdict::UNDECIDED;
  jsond::fail(ctx, "unknown verdict '" + s + "'");
}

inline Rigor rigor_from_name(const std::string& s, const std::string& ctx) {
  if (s == "exact") return Rigor::EXACT;
  if (s == "theorem-backed") return Rigor::THEOREM_BACKED;
  if (s == "empirical") return Rigor::EMPIRICAL;
  jsond::fail(ctx, "unknown rigor level '" + s + "'");
}

inline Json sampling_log_to_json(const SamplingLog& l) {
  return Json{{"max_height", l.max_height},
              {"tested", l.tested},
              {"digest", u64_to_json(l.digest)}};
}

inline SamplingLog sampling_log_from_json(const Json& j, const std::string& ctx) {
  jsond::check_keys(j, ctx, {"max_height", "tested", "digest"});
  SamplingLog l;
  const long mh = jsond::get_integer(j, "max_height", ctx);
  if (mh < 1) jsond::fail(ctx, "max_height must be positive");
  l.max_height = static_cast<int>(mh);
  l.tested = jsond::get_integer(j, "tested", ctx);
  if (l.tested < 0) jsond::fail(ctx, "tested must be nonnegative");
  l.digest = u64_from_json(j.at("digest"), ctx + ".digest");
  return l;
}

inline Json evidence_payload_to_json(const LowerBoundPayload& p) {
  if (std::holds_alternative<EmptyPieceEvidence>(p)) return Json{{"kind", "empty-piece"}};
  if (const auto* sm = std::get_if<SingleMemberEvidence>(&p))
    return Json{{"kind", "single-member"},
                {"member", form_to_json(sm->member)},
                {"certificate", hyperbolicity_to_json(sm->cert)}};
  if (const auto* pe = std::get_if<PencilEvidence>(&p))
    return Json{{"kind", "pencil"}, {"trace", pencil_trace_to_json(pe->trace)}};
  if (const auto* ie = std::get_if<ImpliedEvidence>(&p))
    return Json{{"kind", "implied"}, {"source_degree", ie->source_degree}};
  if (const auto* te = std::get_if<TheoremEvidence>(&p))
    return Json{{"kind", "theorem"}, {"fact", te->fact_id}};
  const auto& se = std::get<SearchEvidence>(p);
  return Json{{"kind", "search"}, {"log", sampling_log_to_json(se.log)}};
}

inline LowerBoundPayload evidence_payload_from_json(const Json& j, const std::string& ctx) {
  const std::string kind = jsond::get_string(j, "kind", ctx);
  if (kind == "empty-piece") {
    jsond::check_keys(j, ctx, {"kind"});
    return EmptyPieceEvidence{};
  }
  if (kind == "single-member") {
    jsond::check_keys(j, ctx, {"kind", "member", "certificate"});
    SingleMemberEvidence sm;
    sm.member = form_from_json(j.at("member"), ctx + ".member");
    sm.cert = hyperbolicity_from_json(j.at("certificate"), ctx + ".certificate");
    return sm;
  }
  if (kind == "pencil") {
    jsond::check_keys(j, ctx, {"kind", "trace"});
    return PencilEvidence{pencil_trace_from_json(j.at("trace"), ctx + ".trace")};
  }
  if (kind == "implied") {
    jsond::check_keys(j, ctx, {"kind", "source_degree"});
    const long sd = jsond::get_integer(j, "source_degree", ctx);
    if (sd < 1) jsond::fail(ctx, "source_degree must be positive");
    return ImpliedEvidence{static_cast<int>(sd)};
  }
  if (kind == "theorem") {
    jsond::check_keys(j, ctx, {"kind", "fact"});
    return TheoremEvidence{jsond::get_string(j, "fact", ctx)};
  }
  if (kind == "search") {
    jsond::check_keys(j, ctx, {"kind", "log"});
    return SearchEvidence{sampling_log_from_json(j.at("log"), ctx + ".log")};
  }
  jsond::fail(ctx, "unknown evidence kind '" + kind + "'");
}

inline Json lower_evidence_to_json(const LowerBoundEvidence& e) {
  return Json{{"degree", e.degree},
              {"piece_dim", e.piece_dim},
              {"verdict", verdict_name(e.verdict)},
              {"rigor", rigor_name(e.rigor)},
              {"evidence", evidence_payload_to_json(e.payload)}};
}

inline LowerBoundEvidence lower_evidence_from_json(const Json& j, const std::string& ctx) {
  jsond::check_keys(j, ctx, {"degree", "piece_dim", "verdict", "rigor", "evidence"});
  LowerBoundEvidence e;
  const long deg = jsond::get_integer(j, "degree", ctx);
  const long dim = jsond::get_integer(j, "piece_dim", ctx);
  if (deg < 0 || dim < 0) jsond::fail(ctx, "degree and piece_dim must be nonnegative");
  e.degree = static_cast<int>(deg);
  e.piece_dim = static_cast<int>(dim);
  e.verdict = verdict_from_name(jsond::get_string(j, "verdict", ctx), ctx);
  e.rigor = rigor_from_name(jsond::get_string(j, "rigor", ctx), ctx);
  e.payload = evidence_payload_from_json(jsond::field(j, "evidence", ctx), ctx + ".evidence");
  return e;
}

// ---------------------------------------------------------------------------
// rank / typicality / perturbation

inline Json rank_certificate_to_json(const RankCertificate& c) {
  Json lower = Json::array();
  for (const auto& e : c.lower) lower.push_back(lower_evidence_to_json(e));
  return Json{{"subject", form_to_json(c.subject)},
              {"rank", c.rank},
              {"witness", form_to_json(c.witness)},
              {"witness_certificate", hyperbolicity_to_json(c.witness_cert)},
              {"lower", std::move(lower)},
              {"rigor", rigor_name(c.rigor)}};
}

inline RankCertificate rank_certificate_from_json(const Json& j, const std::string& ctx) {
  jsond::check_keys(j, ctx, {"subject", "rank", "witness", "witness_certificate", "lower", "rigor"});
  RankCertificate c;
  c.subject = form_from_json(j.at("subject"), ctx + ".subject");
  const long r = jsond::get_integer(j, "rank", ctx);
  if (r < 1) jsond::fail(ctx, "rank must be positive");
  c.rank = static_cast<int>(r);
  c.witness = form_from_json(j.at("witness"), ctx + ".witness");
  c.witness_cert = hyperbolicity_from_json(j.at("witness_certificate"), ctx + ".witness_certificate");
  for (const auto& v : jsond::get_array(j, "lower", ctx))
    c.lower.push_back(lower_evidence_from_json(v, ctx + ".lower"));
  c.rigor = rigor_from_name(jsond::get_string(j, "rigor", ctx), ctx);
  return c;
}

inline Json typicality_to_json(const TypicalityCertificate& t) {
  return Json{{"subject", form_to_json(t.subject)},
              {"generator_degrees", Json::array({t.generator_degrees.first,
                                                 t.generator_degrees.second})},
              {"middle_catalecticant_rank", t.middle_catalecticant_rank},
              {"rank_certificate", rank_certificate_to_json(t.rank_cert)},
              {"top_evidence", lower_evidence_to_json(t.top_evidence)},
              {"typical", t.typical},
              {"level", rigor_name(t.level)}};
}

inline TypicalityCertificate typicality_from_json(const Json& j, const std::string& ctx) {
  jsond::check_keys(j, ctx,
                    {"subject", "generator_degrees", "middle_catalecticant_rank",
                     "rank_certificate", "top_evidence", "typical", "level"});
  TypicalityCertificate t;
  t.subject = form_from_json(j.at("subject"), ctx + ".subject");
  const Json& gd = jsond::get_array(j, "generator_degrees", ctx);
  if (gd.size() != 2 || !gd[0].is_number_integer() || !gd[1].is_number_integer())
    jsond::fail(ctx, "generator_degrees must be a pair of integers");
  t.generator_degrees = {gd[0].get<int>(), gd[1].get<int>()};
  const long mcr = jsond::get_integer(j, "middle_catalecticant_rank", ctx);
  if (mcr < 0) jsond::fail(ctx, "middle_catalecticant_rank must be nonnegative");
  t.middle_catalecticant_rank = static_cast<int>(mcr);
  t.rank_cert = rank_certificate_from_json(j.at("rank_certificate"), ctx + ".rank_certificate");
  t.top_evidence = lower_evidence_from_json(j.at("top_evidence"), ctx + ".top_evidence");
  t.typical = jsond::get_bool(j, "typical", ctx);
  t.level = rigor_from_name(jsond::get_string(j, "level", ctx), ctx);
  return t;
}

inline Json perturbation_report_to_json(const PerturbationReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back(Json{{"index", s.index},
                           {"form", form_to_json(s.form)},
                           {"rank", s.rank},
                           {"rigor", rigor_name(s.rigor)}});
  Json hist = Json::object();
  for (const auto& [rank, count] : r.histogram) hist[std::to_string(rank)] = count;
  Json out{{"subject", form_to_json(r.subject)},
           {"radius", rat_to_json(r.radius)},
           {"trials", r.trials},
           {"seed", u64_to_json(r.seed)},
           {"samples", std::move(samples)},
           {"histogram", std::move(hist)},
           {"all_same_rank", r.all_same_rank}};
  if (r.hint) out["hint"] = form_to_json(*r.hint);
  return out;
}

inline PerturbationReport perturbation_report_from_json(const Json& j, const std::string& ctx) {
  jsond::check_keys(j, ctx,
                    {"subject", "radius", "trials", "seed", "samples", "histogram",
                     "all_same_rank"},
                    {"hint"});
  PerturbationReport r;
  r.subject = form_from_json(j.at("subject"), ctx + ".subject");
  if (j.contains("hint")) r.hint = form_from_json(j.at("hint"), ctx + ".hint");
  r.radius = rat_from_json(j.at("radius"), ctx + ".radius");
  const long trials = jsond::get_integer(j, "trials", ctx);
  if (trials < 0) jsond::fail(ctx, "trials must be nonnegative");
  r.trials = static_cast<int>(trials);
  r.seed = u64_from_json(j.at("seed"), ctx + ".seed");
  for (const auto& v : jsond::get_array(j, "samples", ctx)) {
    const std::string sctx = ctx + ".samples";
    jsond::check_keys(v, sctx, {"index", "form", "rank", "rigor"});
    PerturbationTrial s;
    s.index = static_cast<int>(jsond::get_integer(v, "index", sctx));
    s.form = form_from_json(v.at("form"), sctx + ".form");
    s.rank = static_cast<int>(jsond::get_integer(v, "rank", sctx));
    s.rigor = rigor_from_name(jsond::get_string(v, "rigor", sctx), sctx);
    r.samples.push_back(std::move(s));
  }
  const Json& hist = jsond::field(j, "histogram", ctx);
  if (!hist.is_object()) jsond::fail(ctx, "histogram must be an object");
  for (const auto& item : hist.items()) {
    if (!jsond::all_digits(item.key()) || !item.value().is_number_integer())
      jsond::fail(ctx, "histogram entries must map rank to count");
    r.histogram[std::stoi(item.key())] = item.value().get<int>();
  }
  r.all_same_rank = jsond::get_bool(j, "all_same_rank", ctx);
  return r;
}

// ---------------------------------------------------------------------------
// witness chains

inline BaseKind base_kind_from_name(const std::string& s, const std::string& ctx) {
  if (s == "minimal-exact") return BaseKind::MINIMAL_EXACT;
  if (s == "maximal-hyperbolic") return BaseKind::MAXIMAL_HYPERBOLIC;
  jsond::fail(ctx, "unknown base kind '" + s + "'");
}

inline StepCase step_case_from_name(const std::string& s, const std::string& ctx) {
  if (s == "even-minimal") return StepCase::EVEN_MINIMAL;
  if (s == "even-general") return StepCase::EVEN_GENERAL;
  if (s == "odd") return StepCase::ODD;
  jsond::fail(ctx, "unknown step case '" + s + "'");
}

// Seeds are serialized only for the sampled base; the hyperbolic-product base
// is seed-independent, so a seed field there would not be verifiable.
inline Json witness_base_to_json(const WitnessBase& b) {
  Json j{{"kind", base_kind_name(b.kind)},
         {"degree", b.degree},
         {"form", form_to_json(b.form)},
         {"certificate", rank_certificate_to_json(b.cert)}};
  if (b.kind == BaseKind::MINIMAL_EXACT) {
    j["seed"] = u64_to_json(b.seed);
    j["attempt"] = u64_to_json(b.attempt);
  }
  return j;
}

inline WitnessBase witness_base_from_json(const Json& j, const std::string& ctx) {
  WitnessBase b;
  b.kind = base_kind_from_name(jsond::get_string(j, "kind", ctx), ctx);
  if (b.kind == BaseKind::MINIMAL_EXACT) {
    jsond::check_keys(j, ctx, {"kind", "degree", "form", "certificate", "seed", "attempt"});
    b.seed = u64_from_json(j.at("seed"), ctx + ".seed");
    b.attempt = u64_from_json(j.at("attempt"), ctx + ".attempt");
  } else {
    jsond::check_keys(j, ctx, {"kind", "degree", "form", "certificate"});
  }
  const long deg = jsond::get_integer(j, "degree", ctx);
  if (deg < 1) jsond::fail(ctx, "degree must be positive");
  b.degree = static_cast<int>(deg);
  b.form = form_from_json(j.at("form"), ctx + ".form");
  b.cert = rank_certificate_from_json(j.at("certificate"), ctx + ".certificate");
  return b;
}

inline Json projpoint_to_json(const ProjPoint& p) {
  return Json{{"a", int_to_json(p.a)}, {"b", int_to_json(p.b)}};
}

inline ProjPoint projpoint_from_json(const Json& j, const std::string& ctx) {
  jsond::check_keys(j, ctx, {"a", "b"});
  return {int_from_json(j.at("a"), ctx + ".a"), int_from_json(j.at("b"), ctx + ".b")};
}

inline Json witness_step_to_json(const WitnessStep& st) {
  Json containment = Json::array();
  for (const auto& rec : st.containment)
    containment.push_back(Json{{"member", form_to_json(rec.member)},
                               {"u", form_to_json(rec.u)},
                               {"v", form_to_json(rec.v)}});
  Json j{{"case", step_case_name(st.kind)},
         {"m", st.m},
         {"input", form_to_json(st.input)},
         {"in_g1", form_to_json(st.in_g1)},
         {"in_g2", form_to_json(st.in_g2)},
         {"s", form_to_json(st.s)},
         {"q1", form_to_json(st.q1)},
         {"q2", form_to_json(st.q2)},
         {"point", projpoint_to_json(st.point)},
         {"ell", form_to_json(st.ell)},
         {"out_g1", form_to_json(st.out_g1)},
         {"out_g2", form_to_json(st.out_g2)},
         {"out_res", rat_to_json(st.out_res)},
         {"output", form_to_json(st.output)},
         {"s_u", form_to_json(st.s_u)},
         {"s_v", form_to_json(st.s_v)},
         {"containment", std::move(containment)}};
  switch (st.kind) {
    case StepCase::EVEN_MINIMAL:
      break;
    case StepCase::EVEN_GENERAL:
      j["alpha"] = rat_to_json(st.alpha);
      j["q"] = form_to_json(st.q);
      break;
    case StepCase::ODD:
      j["ell_hat"] = form_to_json(st.ell_hat);
      j["q"] = form_to_json(st.q);
      if (st.escape_eps != 0) j["escape_eps"] = rat_to_json(st.escape_eps);
      break;
  }
  return j;
}

inline WitnessStep witness_step_from_json(const Json& j, const std::string& ctx) {
  WitnessStep st;
  st.kind = step_case_from_name(jsond::get_string(j, "case", ctx), ctx);
  const std::set<std::string> common = {"case",   "m",      "input", "in_g1",   "in_g2",
                                        "s",      "q1",     "q2",    "point",   "ell",
                                        "out_g1", "out_g2", "out_res", "output", "s_u",
                                        "s_v",    "containment"};
  std::set<std::string> required = common, optional;
  switch (st.kind) {
    case StepCase::EVEN_MINIMAL:
      break;
    case StepCase::EVEN_GENERAL:
      required.insert("alpha");
      required.insert("q");
      break;
    case StepCase::ODD:
      required.insert("ell_hat");
      required.insert("q");
      optional.insert("escape_eps");
      break;
  }
  jsond::check_keys(j, ctx, required, optional);
  const long m = jsond::get_integer(j, "m", ctx);
  if (m < 2) jsond::fail(ctx, "m must be at least 2");
  st.m = static_cast<int>(m);
  st.input = form_from_json(j.at("input"), ctx + ".input");
  st.in_g1 = form_from_json(j.at("in_g1"), ctx + ".in_g1");
  st.in_g2 = form_from_json(j.at("in_g2"), ctx + ".in_g2");
  st.s = form_from_json(j.at("s"), ctx + ".s");
  st.q1 = form_from_json(j.at("q1"), ctx + ".q1");
  st.q2 = form_from_json(j.at("q2"), ctx + ".q2");
  st.point = projpoint_from_json(j.at("point"), ctx + ".point");
  st.ell = form_from_json(j.at("ell"), ctx + ".ell");
  st.out_g1 = form_from_json(j.at("out_g1"), ctx + ".out_g1");
  st.out_g2 = form_from_json(j.at("out_g2"), ctx + ".out_g2");
  st.out_res = rat_from_json(j.at("out_res"), ctx + ".out_res");
  st.output = form_from_json(j.at("output"), ctx + ".output");
  st.s_u = form_from_json(j.at("s_u"), ctx + ".s_u");
  st.s_v = form_from_json(j.at("s_v"), ctx + ".s_v");
  for (const auto& v : jsond::get_array(j, "containment", ctx)) {
    const std::string cctx = ctx + ".containment";
    jsond::check_keys(v, cctx, {"member", "u", "v"});
    ContainmentRecord rec;
    rec.member = form_from_json(v.at("member"), cctx + ".member");
    rec.u = form_from_json(v.at("u"), cctx + ".u");
    rec.v = form_from_json(v.at("v"), cctx + ".v");
    st.containment.push_back(std::move(rec));
  }
  st.escape_eps = Rat(0);
  st.alpha = Rat(0);
  st.ell_hat = BinaryForm(1);
  switch (st.kind) {
    case StepCase::EVEN_MINIMAL:
      st.q = BinaryForm(0, {Rat(0)});
      break;
    case StepCase::EVEN_GENERAL:
      st.alpha = rat_from_json(j.at("alpha"), ctx + ".alpha");
      st.q = form_from_json(j.at("q"), ctx + ".q");
      break;
    case StepCase::ODD:
      st.ell_hat = form_from_json(j.at("ell_hat"), ctx + ".ell_hat");
      st.q = form_from_json(j.at("q"), ctx + ".q");
      if (j.contains("escape_eps")) {
        st.escape_eps = rat_from_json(j.at("escape_eps"), ctx + ".escape_eps");
        if (st.escape_eps == 0) jsond::fail(ctx, "escape_eps must be nonzero when present");
      }
      break;
  }
  return st;
}

inline Json chain_to_json(const CertificateChain& ch) {
  Json steps = Json::array();
  for (const auto& st : ch.steps) steps.push_back(witness_step_to_json(st));
  Json j{{"target_degree", ch.target_degree},
         {"rank", ch.rank},
         {"base", witness_base_to_json(ch.base)},
         {"steps", std::move(steps)},
         {"final_form", form_to_json(ch.final_form)},
         {"final_certificate", rank_certificate_to_json(ch.final_cert)},
         {"typicality", typicality_to_json(ch.typicality)},
         {"overall", rigor_name(ch.overall)}};
  if (ch.base.kind == BaseKind::MINIMAL_EXACT) j["seed"] = u64_to_json(ch.seed);
  return j;
}

inline CertificateChain chain_from_json(const Json& j, const std::string& ctx) {
  CertificateChain ch;
  ch.base = witness_base_from_json(jsond::field(j, "base", ctx), ctx + ".base");
  const std::set<std::string> common = {"target_degree", "rank",       "base",
                                        "steps",         "final_form", "final_certificate",
                                        "typicality",    "overall"};
  if (ch.base.kind == BaseKind::MINIMAL_EXACT) {
    auto required = common;
    required.insert("seed");
    jsond::check_keys(j, ctx, required);
    ch.seed = u64_from_json(j.at("seed"), ctx + ".seed");
  } else {
    jsond::check_keys(j, ctx, common);
  }
  const long d = jsond::get_integer(j, "target_degree", ctx);
  const long m = jsond::get_integer(j, "rank", ctx);
  if (d < 1 || m < 1) jsond::fail(ctx, "target_degree and rank must be positive");
  ch.target_degree = static_cast<int>(d);
  ch.rank = static_cast<int>(m);
  for (const auto& v : jsond::get_array(j, "steps", ctx))
    ch.steps.push_back(witness_step_from_json(v, ctx + ".steps"));
  ch.final_form = form_from_json(j.at("final_form"), ctx + ".final_form");
  ch.final_cert = rank_certificate_from_json(j.at("final_certificate"), ctx + ".final_certificate");
  ch.typicality = typicality_from_json(j.at("typicality"), ctx + ".typicality");
  ch.overall = rigor_from_name(jsond::get_string(j, "overall", ctx), ctx);
  return ch;
}

// ---------------------------------------------------------------------------
// decompositions

inline Json decomposition_to_json(const Decomposition& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms)
    terms.push_back(Json{{"c", rat_to_json(t.c)}, {"a", rat_to_json(t.a)},
                         {"b", rat_to_json(t.b)}});
  Json j{{"mode", decomposition_kind_name(d.kind)},
         {"witness", form_to_json(d.witness)},
         {"terms", std::move(terms)},
         {"residual_bound", rat_to_json(d.residual_bound)},
         {"resummation", form_to_json(d.resummation)},
         {"resummation_check", true}};
  if (d.kind == DecompositionKind::NUMERIC) j["precision"] = d.precision;
  return j;
}

inline Decomposition decomposition_from_json(const Json& j, const BinaryForm& subject,
                                             const std::string& ctx) {
  Decomposition d;
  const std::string mode = jsond::get_string(j, "mode", ctx);
  if (mode == "exact") {
    d.kind = DecompositionKind::EXACT;
    jsond::check_keys(j, ctx, {"mode", "witness", "terms", "residual_bound", "resummation",
                               "resummation_check"});
  } else if (mode == "numeric") {
    d.kind = DecompositionKind::NUMERIC;
    jsond::check_keys(j, ctx, {"mode", "witness", "terms", "residual_bound", "resummation",
                               "resummation_check", "precision"});
    const long p = jsond::get_integer(j, "precision", ctx);
    if (p < 1) jsond::fail(ctx, "precision must be positive");
    d.precision = static_cast<int>(p);
  } else {
    jsond::fail(ctx, "unknown decomposition mode '" + mode + "'");
  }
  d.subject = subject;
  d.witness = form_from_json(j.at("witness"), ctx + ".witness");
  for (const auto& v : jsond::get_array(j, "terms", ctx)) {
    const std::string tctx = ctx + ".terms";
    jsond::check_keys(v, tctx, {"c", "a", "b"});
    d.terms.push_back({rat_from_json(v.at("c"), tctx + ".c"),
                       rat_from_json(v.at("a"), tctx + ".a"),
                       rat_from_json(v.at("b"), tctx + ".b")});
  }
  d.residual_bound = rat_from_json(j.at("residual_bound"), ctx + ".residual_bound");
  d.resummation = form_from_json(j.at("resummation"), ctx + ".resummation");
  if (!jsond::get_bool(j, "resummation_check", ctx))
    jsond::fail(ctx, "resummation_check must be true");
  return d;
}

// ---------------------------------------------------------------------------
// certificate documents

using CertificatePayload = std::variant<RankCertificate, CertificateChain, TypicalityCertificate,
                                        PerturbationReport, Decomposition>;

struct CertificateDocument {
  std::string schema = kSchemaVersion;
  std::string generator = kGeneratorVersion;
  BinaryForm subject{0};
  CertificatePayload payload;
};

inline const char* payload_kind_name(const CertificatePayload& p) {
  if (std::holds_alternative<RankCertificate>(p)) return "rank";
  if (std::holds_alternative<CertificateChain>(p)) return "chain";
  if (std::holds_alternative<TypicalityCertificate>(p)) return "typicality";
  if (std::holds_alternative<PerturbationReport>(p)) return "perturbation";
  return "decomposition";
}

inline Json document_to_json(const CertificateDocument& doc) {
  Json payload = std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, RankCertificate>)
          return rank_certificate_to_json(p);
        else if constexpr (std::is_same_v<T, CertificateChain>)
          return chain_to_json(p);
        else if constexpr (std::is_same_v<T, TypicalityCertificate>)
          return typicality_to_json(p);
        else if constexpr (std::is_same_v<T, PerturbationReport>)
          return perturbation_report_to_json(p);
        else
          return decomposition_to_json(p);
      },
      doc.payload);
  payload["kind"] = payload_kind_name(doc.payload);
  return Json{{"schema", doc.schema},
              {"generator", doc.generator},
              {"subject", form_to_json(doc.subject)},
              {"payload", std::move(payload)}};
}

// Accepts any minor under the supported major; rejects everything else.
inline void check_schema_version(const std::string& v, const std::string& ctx) {
  const auto dot = v.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= v.size())
    jsond::fail(ctx, "malformed schema version '" + v + "'");
  const std::string major = v.substr(0, dot), minor = v.substr(dot + 1);
  if (!jsond::all_digits(major) || major[0] == '-' || !jsond::all_digits(minor) ||
      minor[0] == '-')
    jsond::fail(ctx, "malformed schema version '" + v + "'");
  const std::string want(kSchemaVersion);
  if (major != want.substr(0, want.find('.')))
    jsond::fail(ctx, "unsupported schema major version '" + v + "'");
}

inline CertificateDocument document_from_json(const Json& j) {
  const std::string ctx = "document";
  jsond::check_keys(j, ctx, {"schema", "subject", "payload"}, {"generator"});
  CertificateDocument doc;
  doc.schema = jsond::get_string(j, "schema", ctx);
  check_schema_version(doc.schema, ctx);
  doc.generator = j.contains("generator") ? jsond::get_string(j, "generator", ctx) : "";
  doc.subject = form_from_json(j.at("subject"), ctx + ".subject");
  const Json& payload = jsond::field(j, "payload", ctx);
  const std::string kind = jsond::get_string(payload, "kind", ctx + ".payload");
  Json body = payload;
  body.erase("kind");
  const std::string pctx = ctx + ".payload";
  if (kind == "rank")
    doc.payload = rank_certificate_from_json(body, pctx);
  else if (kind == "chain")
    doc.payload = chain_from_json(body, pctx);
  else if (kind == "typicality")
    doc.payload = typicality_from_json(body, pctx);
  else if (kind == "perturbation")
    doc.payload = perturbation_report_from_json(body, pctx);
  else if (kind == "decomposition")
    doc.payload = decomposition_from_json(body, doc.subject, pctx);
  else
    jsond::fail(pctx, "unknown payload kind '" + kind + "'");
  return doc;
}

inline CertificateDocument make_document(const BinaryForm& subject, CertificatePayload payload) {
  CertificateDocument doc;
  doc.subject = subject;
  doc.payload = std::move(payload);
  return doc;
}

}  // namespace waring

#endif  // WARING_JSON_IO_HPP
