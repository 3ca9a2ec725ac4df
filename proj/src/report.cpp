#include "zcoarse/report.hpp"

namespace zcoarse::report {

json integer(const BigInt& v) { return to_decimal(v); }
json integer(std::int64_t v) { return std::to_string(v); }
json integer(std::uint64_t v) { return std::to_string(v); }

json integers(const std::vector<std::int64_t>& vs) {
  json out = json::array();
  for (const auto v : vs) out.push_back(integer(v));
  return out;
}

json integers(const std::vector<BigInt>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(integer(v));
  return out;
}

namespace {

json interval(Interval w) { return {{"lo", integer(w.lo)}, {"hi", integer(w.hi)}}; }

json lengths(const std::vector<WordLength>& ls) {
  json out = json::array();
  for (const auto l : ls) out.push_back(integer(l));
  return out;
}

}  // namespace

json to_json(const SpecialRep& r) {
  return {{"base", integer(r.base.value())}, {"digits", integers(r.digits)}, {"length", integer(r.weight())}};
}

json to_json(const OracleResult& r) {
  json out{{"length", r.length ? json(integer(*r.length)) : json("INCONCLUSIVE")},
           {"witness", integers(r.witness)},
           {"generators_used", integers(r.generators_used)},
           {"search_bound", integer(r.search_bound)},
           {"warnings", r.warnings}};
  return out;
}

json to_json(const FormulaReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"k", integer(m.k)}, {"formula", integer(m.formula)}, {"oracle", integer(m.oracle)}});
  }
  return {{"base", integer(r.base.value())},
          {"range", interval(r.range)},
          {"search_bound", integer(r.search_bound)},
          {"max_terms", integer(std::uint64_t{r.max_terms})},
          {"matches", integer(r.matches)},
          {"mismatches", mismatches},
          {"inconclusive", integers(r.inconclusive)},
          {"all_match", r.all_match()}};
}

json to_json(const DefectResult& r) {
  return {{"defect", integer(r.defect)},
          {"worst_pair", {integer(r.worst_a), integer(r.worst_b)}},
          {"pairs_checked", integer(r.pairs_checked)}};
}

json to_json(const GadicApprox& x) {
  return {{"base", integer(x.base.value())},
          {"precision", integer(std::uint64_t{x.precision})},
          {"residue", integer(x.residue)},
          {"modulus", integer(x.modulus())}};
}

json to_json(const WitnessSequence& w) {
  json terms = json::array();
  for (const auto& t : w.terms) {
    terms.push_back({{"i", integer(t.index)},
                     {"x", integer(t.value)},
                     {"length", integer(t.length)},
                     {"boundary_length", integer(t.boundary_length)}});
  }
  return {{"base", integer(w.base.value())},
          {"prime", integer(w.prime)},
          {"terms", terms},
          {"lengths", lengths(w.lengths())},
          {"nondecreasing_from", integer(std::uint64_t{w.nondecreasing_from()})}};
}

json to_json(const StabilizationReport& r) {
  return {{"base", integer(r.base.value())},
          {"precision", integer(std::uint64_t{r.precision})},
          {"residues", integers(r.residues)},
          {"stabilizes", r.stabilizes()},
          {"stable_from", r.stable_from ? json(integer(std::uint64_t{*r.stable_from})) : json(nullptr)},
          {"limit_residue", integer(r.limit_residue)},
          {"digit_prefix", integers(r.digit_prefix)},
          {"bounded_integer", r.bounded_integer ? json(integer(*r.bounded_integer)) : json(nullptr)},
          {"magnitude_checked", integer(r.magnitude_checked)},
          {"lengths", lengths(r.lengths)},
          {"trend", to_string(r.trend)}};
}

json to_json(const PairSampling& s) {
  return {{"exhaustive", interval(s.exhaustive)},
          {"random_pairs", integer(s.random_pairs)},
          {"random_bits", integer(std::uint64_t{s.random_bits})},
          {"seed", integer(s.seed)}};
}

json to_json(const ContractionCertificate& c) {
  return {{"base", integer(c.base)},
          {"prime", integer(c.prime)},
          {"sampling", to_json(c.sampling)},
          {"pairs_checked", integer(c.pairs_checked)},
          {"points_checked", integer(c.points_checked)},
          {"max_pair_distance", integer(c.max_pair_distance)},
          {"rounding_bound", integer(c.rounding_bound)},
          {"rounding_max_seen", integer(c.rounding_max_seen)},
          {"inverse_bound", integer(c.inverse_bound)},
          {"inverse_max_seen", integer(c.inverse_max_seen)},
          {"lipschitz_constant", integer(c.lipschitz_constant)},
          {"violations", integer(c.violations)}};
}

json to_json(const ContinuityCertificate& c) {
  return {{"primes", integers(c.primes)},
          {"prime", integer(c.prime)},
          {"window", interval(c.window)},
          {"random_pairs", integer(c.random_pairs)},
          {"seed", integer(c.seed)},
          {"pairs_checked", integer(c.pairs_checked)},
          {"congruent_pairs", integer(c.congruent_pairs)},
          {"max_exponent_seen", integer(std::uint64_t{c.max_exponent_seen})},
          {"covering_checks", integer(c.covering_checks)},
          {"violations", integer(c.violations)}};
}

json to_json(const NonproperReport& r) {
  return {{"primes", integers(r.primes)},
          {"prime", integer(r.prime)},
          {"n_max", integer(std::uint64_t{r.n_max})},
          {"moduli", integers(r.moduli)},
          {"sequence", integers(r.sequence)},
          {"balanced", integers(r.balanced)},
          {"image_converges", r.image_converges},
          {"cauchy", r.cauchy},
          {"eventually_constant", r.eventually_constant},
          {"max_abs", integer(r.max_abs)},
          {"integer_limit_bound", integer(r.integer_limit_bound)}};
}

json to_json(const Evidence& e) {
  json parameters = json::object();
  for (const auto& [name, value] : e.parameters) parameters[name] = value;
  parameters["warrant"] = e.warrant;
  json data = std::visit([](const auto& payload) { return to_json(payload); }, e.data);
  return {{"kind", to_string(e.kind)}, {"parameters", parameters}, {"data", data}};
}

json to_json(const PrimeVerdict& v) {
  return {{"prime", integer(v.prime)}, {"verdict", to_string(v.verdict)}, {"note", v.note}};
}

json to_json(const SpectrumReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  json out{{"space", r.descriptor},
           {"verdicts", verdicts},
           {"sp", integers(r.invertible_primes())},
           {"bound", integer(r.bound)},
           {"sp_natural", integers(r.sp_natural)},
           {"sp_integer", integers(r.sp_integer)},
           {"unclassified", integers(r.unclassified)},
           {"sp_rational_generators", integers(r.sp_rational_generators)},
           {"decided", r.decided()}};
  if (r.space == SpectrumReport::Space::word_metric) {
    out["base"] = integer(r.base);
  } else {
    out["prime_set"] = integers(r.prime_set);
    out["restriction"] = "finite prime set";
  }
  return out;
}

json evidence_of(const SpectrumReport& r) {
  json out = json::array();
  for (const auto& v : r.verdicts) {
    json e = to_json(v.evidence);
    e["parameters"]["prime"] = integer(v.prime);
    e["parameters"]["space"] = r.descriptor;
    out.push_back(std::move(e));
  }
  return out;
}

json to_json(const ComparisonReport& c) {
  return {{"outcome", to_string(c.outcome)},
          {"common_primes", integers(c.common_primes)},
          {"differing_primes", integers(c.differing_primes)},
          {"principle", c.principle}};
}

json to_json(const QadicApprox& x) {
  json components = json::array();
  for (std::size_t i = 0; i < x.residues.size(); ++i) {
    components.push_back({{"prime", integer(x.primes.primes()[i])},
                          {"exponent", integer(std::uint64_t{x.exponents[i]})},
                          {"residue", integer(x.residues[i])}});
  }
  return {{"components", components}, {"modulus", integer(x.modulus())}, {"combined", integer(x.combined())}};
}

json to_json(const QStarModulus& m) {
  json factors = json::array();
  for (const auto& [p, e] : m.factorization) factors.push_back({integer(p), integer(std::uint64_t{e})});
  return {{"m", integer(m.value)}, {"factorization", factors}};
}

json to_json(const FloorCongruence& c) {
  return {{"same_class", c.same_class},
          {"exponent", integer(std::uint64_t{c.exponent})},
          {"cofactor", integer(c.cofactor)},
          {"floor_difference", integer(c.floor_difference)},
          {"holds", c.holds}};
}

json to_json(const PartitionCover& c) {
  json blocks = json::array();
  for (const auto& [n, members] : c.blocks) blocks.push_back({{"n", integer(n)}, {"members", integers(members)}});
  return {{"base", integer(c.base.value())}, {"window", interval(c.window)}, {"blocks", blocks}};
}

json to_json(const Table& t) {
  json out = json::array();
  for (const auto& [x, y] : t) out.push_back({integer(x), integer(y)});
  return out;
}

json to_json(const CsbResult& r) {
  return {{"h", to_json(r.h)},
          {"from_forward", integer(r.from_forward)},
          {"from_backward", integer(r.from_backward)},
          {"fallback", integer(r.fallback)},
          {"fallback_bottleneck", r.fallback_bottleneck ? json(integer(*r.fallback_bottleneck)) : json(nullptr)}};
}

json to_json(const AuditResult& a) {
  return {{"max_displacement", integer(a.max_displacement)}, {"worst_point", integer(a.worst_point)}};
}

json to_json(const RectifyReport& r) {
  return {{"domain", interval(r.domain)},
          {"codomain", interval(r.codomain)},
          {"forward_window", interval(r.forward_window)},
          {"backward_window", interval(r.backward_window)},
          {"g_fwd", to_json(r.g_fwd)},
          {"g_bwd", to_json(r.g_bwd)},
          {"csb", to_json(r.csb)},
          {"audit", to_json(r.audit)}};
}

json envelope(const std::string& command, json config, json results, json evidence, std::int64_t duration_ms) {
  return {{"command", command},
          {"config", std::move(config)},
          {"results", std::move(results)},
          {"evidence", std::move(evidence)},
          {"version", version()},
          {"duration_ms", duration_ms}};
}

const char* version() { return ZCOARSE_VERSION; }

}  // namespace zcoarse::report
