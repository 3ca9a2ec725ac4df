#include "zcoarse/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "zcoarse/errors.hpp"
#include "zcoarse/gadic_core.hpp"
#include "zcoarse/gadic_limits.hpp"
#include "zcoarse/oracle.hpp"
#include "zcoarse/profinite.hpp"
#include "zcoarse/rectify.hpp"
#include "zcoarse/report.hpp"
#include "zcoarse/spectra.hpp"

namespace zcoarse::cli {

namespace {

using report::integer;
using report::integers;
using report::json;

struct Options {
  std::string g;
  std::vector<std::string> q;
  std::vector<std::string> k;
  std::string primes;
  std::uint64_t imax = 40;
  std::optional<std::uint64_t> threshold;
  std::optional<std::string> window;
  std::optional<unsigned> precision;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  std::string map;
  std::string inverse;
  std::int64_t bound = 20;
  unsigned max_terms = 40;
  std::uint64_t random_pairs = 1000;
};

struct Outcome {
  json config = json::object();
  json results = json::object();
  json evidence = json::array();
  int exit = ok;
  /// Header and rows for --format csv; empty when the command has no CSV form.
  std::vector<std::string> csv;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<std::int64_t> int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(text, ',')) {
    const BigInt v = parse_bigint(part);
    if (!fits_fast_path(v)) throw PreconditionError(std::string(what) + " entry out of range: " + part);
    out.push_back(v.convert_to<std::int64_t>());
  }
  if (out.empty()) throw PreconditionError(std::string("missing ") + what);
  return out;
}

std::vector<BigInt> big_list(const std::vector<std::string>& texts) {
  std::vector<BigInt> out;
  for (const auto& t : texts) {
    for (const auto& part : split(t, ',')) out.push_back(parse_bigint(part));
  }
  return out;
}

Base base_of(const Options& o) {
  const auto gs = int_list(o.g, "--g");
  if (gs.size() != 1) throw PreconditionError("expected a single base in --g");
  return Base(gs.front());
}

PrimeSet prime_set(const std::string& text) { return PrimeSet(int_list(text, "--Q")); }

PrimeSet single_q(const Options& o) {
  if (o.q.size() != 1) throw PreconditionError("expected exactly one --Q prime set");
  return prime_set(o.q.front());
}

Interval window_or(const Options& o, Interval fallback) { return o.window ? parse_interval(*o.window) : fallback; }

json interval_json(Interval w) { return integer(w.lo).get<std::string>() + ":" + integer(w.hi).get<std::string>(); }

std::string join_digits(const std::vector<std::int64_t>& ds) {
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) out += (i ? " " : "") + std::to_string(ds[i]);
  return out;
}

/// Integer maps accepted by --map / --inverse.
struct MapSpec {
  std::string kind = "identity";
  std::int64_t n = 0;

  static MapSpec parse(const std::string& text) {
    MapSpec m;
    const auto colon = text.find(':');
    m.kind = text.substr(0, colon);
    if (m.kind == "identity") return m;
    if (colon == std::string::npos) throw PreconditionError("map '" + text + "' needs a parameter");
    m.n = int_list(text.substr(colon + 1), "map parameter").front();
    if (m.kind != "mul" && m.kind != "floor" && m.kind != "shift") throw PreconditionError("unknown map '" + text + "'");
    if (m.kind == "floor" && m.n <= 0) throw PreconditionError("floor:N needs N > 0");
    return m;
  }

  BigInt operator()(const BigInt& x) const {
    if (kind == "mul") return mu_apply(BigInt(n), x);
    if (kind == "floor") return floor_div(x, BigInt(n));
    if (kind == "shift") return x + n;
    return x;
  }

  MapSpec inverse() const {
    if (kind == "mul") return {"floor", n};
    if (kind == "floor") return {"mul", n};
    if (kind == "shift") return {"shift", -n};
    return {};
  }

  std::string str() const { return kind == "identity" ? kind : kind + ":" + std::to_string(n); }
};

std::int64_t small(const BigInt& v) {
  if (!fits_fast_path(v)) throw PreconditionError("map value out of range: " + to_decimal(v));
  return v.convert_to<std::int64_t>();
}

std::vector<BigInt> targets(const Options& o) {
  if (!o.k.empty()) return big_list(o.k);
  if (o.window) {
    const Interval w = parse_interval(*o.window);
    std::vector<BigInt> out;
    for (std::int64_t x = w.lo; x <= w.hi; ++x) out.push_back(x);
    return out;
  }
  throw PreconditionError("give --k or --window");
}

Outcome cmd_rep(const Options& o) {
  Outcome r;
  const Base g = base_of(o);
  r.config = {{"g", integer(g.value())}};
  json items = json::array();
  r.csv.push_back("k,digits,length");
  for (const auto& k : targets(o)) {
    const SpecialRep rep = special_rep(g, k);
    items.push_back({{"k", integer(k)}, {"digits", integers(rep.digits)}, {"length", integer(rep.weight())}});
    r.csv.push_back(to_decimal(k) + "," + join_digits(rep.digits) + "," + std::to_string(rep.weight()));
  }
  r.results = {{"items", items}};
  return r;
}

Outcome cmd_len(const Options& o) {
  Outcome r;
  const Base g = base_of(o);
  r.config = {{"g", integer(g.value())}};
  json items = json::array();
  r.csv.push_back("k,length");
  for (const auto& k : targets(o)) {
    const WordLength len = word_length(g, k);
    items.push_back({{"k", integer(k)}, {"length", integer(len)}});
    r.csv.push_back(to_decimal(k) + "," + std::to_string(len));
  }
  r.results = {{"items", items}};
  return r;
}

Outcome cmd_dist(const Options& o) {
  Outcome r;
  const Base g = base_of(o);
  const auto ks = big_list(o.k);
  if (ks.empty() || ks.size() % 2 != 0) throw PreconditionError("dist takes pairs: --k a,b[,c,d...]");
  r.config = {{"g", integer(g.value())}};
  json items = json::array();
  r.csv.push_back("k,k_prime,distance");
  for (std::size_t i = 0; i < ks.size(); i += 2) {
    const WordLength d = distance(g, ks[i], ks[i + 1]);
    items.push_back({{"k", integer(ks[i])}, {"k_prime", integer(ks[i + 1])}, {"distance", integer(d)}});
    r.csv.push_back(to_decimal(ks[i]) + "," + to_decimal(ks[i + 1]) + "," + std::to_string(d));
  }
  r.results = {{"items", items}};
  return r;
}

Outcome cmd_oracle_check(const Options& o) {
  Outcome r;
  const Base g = base_of(o);
  r.config = {{"g", integer(g.value())}, {"max_terms", integer(std::uint64_t{o.max_terms})}};
  if (!o.k.empty()) {
    json items = json::array();
    for (const auto& k : big_list(o.k)) {
      if (!fits_fast_path(k)) throw PreconditionError("oracle targets must fit in 62 bits");
      const auto kk = k.convert_to<std::int64_t>();
      const OracleResult res = oracle_length(GeneratorSet::geometric(g), kk, o.max_terms);
      json item = report::to_json(res);
      item["k"] = integer(kk);
      item["formula_length"] = integer(word_length(g, kk));
      if (res.inconclusive()) r.exit = undecided;
      else if (*res.length != word_length(g, kk)) r.exit = failure;
      items.push_back(std::move(item));
    }
    r.results = {{"items", items}};
    return r;
  }
  const Interval w = window_or(o, {-200, 200});
  r.config["window"] = interval_json(w);
  const FormulaReport rep = validate_formula(g, w, o.max_terms);
  r.results = report::to_json(rep);
  if (!rep.mismatches.empty()) r.exit = failure;
  else if (!rep.inconclusive.empty()) r.exit = undecided;
  return r;
}

Outcome cmd_defect(const Options& o) {
  Outcome r;
  const Base g = base_of(o);
  const Interval w = window_or(o, {-50, 50});
  const MapSpec f = MapSpec::parse(o.map.empty() ? "floor:" + std::to_string(g.value()) : o.map);
  r.config = {{"g", integer(g.value())}, {"window", interval_json(w)}, {"map", f.str()}};
  const auto table = WindowTable::tabulate(w, [&](std::int64_t x) { return f(BigInt(x)); });
  r.results = report::to_json(quasimorphism_defect(table, g));
  return r;
}

Outcome cmd_gadic(const Options& o) {
  Outcome r;
  const Base g = base_of(o);
  const unsigned n = o.precision.value_or(8);
  r.config = {{"g", integer(g.value())}, {"precision", integer(std::uint64_t{n})}};
  json items = json::array();
  for (const auto& k : big_list(o.k)) {
    const GadicApprox x = approx_from_int(g, n, k);
    json item = report::to_json(x);
    item["k"] = integer(k);
    if (n >= 2) item["digit_prefix"] = integers(approx_digits(x));
    items.push_back(std::move(item));
  }
  r.results = {{"items", items}};
  return r;
}

Outcome cmd_inverse(const Options& o) {
  Outcome r;
  const Base g = base_of(o);
  const unsigned n = o.precision.value_or(8);
  r.config = {{"g", integer(g.value())}, {"precision", integer(std::uint64_t{n})}, {"primes", o.primes}};
  json items = json::array();
  for (const auto p : int_list(o.primes, "--primes")) {
    json item = report::to_json(mod_inverse(p, g, n));
    item["p"] = integer(p);
    items.push_back(std::move(item));
  }
  r.results = {{"items", items}};
  return r;
}

Outcome cmd_stabilize(const Options& o) {
  Outcome r;
  const Base g = base_of(o);
  const unsigned n = o.precision.value_or(8);
  r.config = {{"g", integer(g.value())}, {"precision", integer(std::uint64_t{n})}};
  const auto xs = big_list(o.k);
  r.results = report::to_json(stabilization_check(xs, g, n));
  return r;
}

Outcome cmd_witness(const Options& o) {
  Outcome r;
  const Base g = base_of(o);
  r.config = {{"g", integer(g.value())}, {"imax", integer(o.imax)}, {"primes", o.primes}};
  json items = json::array();
  for (const auto p : int_list(o.primes, "--primes")) {
    const WitnessSequence w = divergence_witness(g, p, o.imax);
    json item = report::to_json(w);
    if (o.precision) {
      std::vector<BigInt> xs;
      for (const auto& t : w.terms) xs.push_back(t.value);
      item["stabilization"] = report::to_json(stabilization_check(xs, g, *o.precision));
    }
    items.push_back(std::move(item));
  }
  r.results = {{"items", items}};
  return r;
}

ClassifyParams classify_params(const Options& o) {
  ClassifyParams p;
  p.i_max = o.imax;
  p.threshold = o.threshold.value_or(20);
  p.sampling.exhaustive = window_or(o, {-300, 300});
  p.sampling.random_pairs = o.random_pairs;
  p.sampling.seed = o.seed;
  p.bound = o.bound;
  return p;
}

json classify_config(const ClassifyParams& p) {
  return {{"imax", integer(p.i_max)},
          {"threshold", integer(p.threshold)},
          {"window", interval_json(p.sampling.exhaustive)},
          {"random_pairs", integer(p.sampling.random_pairs)},
          {"seed", integer(p.sampling.seed)},
          {"bound", integer(p.bound)}};
}

ProfiniteParams profinite_params(const Options& o) {
  ProfiniteParams p;
  p.n_max = o.precision.value_or(30);
  p.magnitude_bits = static_cast<unsigned>(o.threshold.value_or(20));
  p.sampling.window = window_or(o, {-50, 50});
  p.sampling.random_pairs = o.random_pairs;
  p.sampling.seed = o.seed;
  p.bound = o.bound;
  return p;
}

json profinite_config(const ProfiniteParams& p) {
  return {{"precision", integer(std::uint64_t{p.n_max})},
          {"threshold", integer(std::uint64_t{p.magnitude_bits})},
          {"window", interval_json(p.sampling.window)},
          {"random_pairs", integer(p.sampling.random_pairs)},
          {"seed", integer(p.sampling.seed)},
          {"bound", integer(p.bound)}};
}

Outcome cmd_spectrum(const Options& o) {
  Outcome r;
  const Base g = base_of(o);
  const ClassifyParams params = classify_params(o);
  r.config = classify_config(params);
  r.config["g"] = integer(g.value());
  r.config["primes"] = integers(int_list(o.primes, "--primes"));
  const SpectrumReport rep = spectrum(g, int_list(o.primes, "--primes"), params);
  r.results = report::to_json(rep);
  r.evidence = report::evidence_of(rep);
  if (!rep.decided()) r.exit = undecided;
  return r;
}

Outcome cmd_profinite_spectrum(const Options& o) {
  Outcome r;
  const PrimeSet q = single_q(o);
  const ProfiniteParams params = profinite_params(o);
  r.config = profinite_config(params);
  r.config["Q"] = integers(q.primes());
  r.config["primes"] = integers(int_list(o.primes, "--primes"));
  const SpectrumReport rep = spectrum_profinite(q, int_list(o.primes, "--primes"), params);
  r.results = report::to_json(rep);
  r.evidence = report::evidence_of(rep);
  if (!rep.decided()) r.exit = undecided;
  return r;
}

Outcome cmd_compare(const Options& o) {
  Outcome r;
  const auto primes = int_list(o.primes.empty() ? "2,3,5,7,11,13" : o.primes, "--primes");
  std::vector<SpectrumReport> reports;
  if (!o.g.empty()) {
    const auto gs = int_list(o.g, "--g");
    if (gs.size() != 2) throw PreconditionError("compare takes two bases: --g a,b");
    const ClassifyParams params = classify_params(o);
    r.config = classify_config(params);
    r.config["g"] = integers(gs);
    for (const auto g : gs) reports.push_back(spectrum(Base(g), primes, params));
  } else {
    if (o.q.size() != 2) throw PreconditionError("compare takes --g a,b or two --Q sets");
    const ProfiniteParams params = profinite_params(o);
    r.config = profinite_config(params);
    r.config["Q"] = json::array({integers(prime_set(o.q[0]).primes()), integers(prime_set(o.q[1]).primes())});
    for (const auto& text : o.q) reports.push_back(spectrum_profinite(prime_set(text), primes, params));
  }
  r.config["primes"] = integers(primes);
  const ComparisonReport cmp = compare_spectra(reports[0], reports[1]);
  r.results = report::to_json(cmp);
  r.results["spectra"] = json::array({report::to_json(reports[0]), report::to_json(reports[1])});
  for (const auto& rep : reports) {
    for (auto& e : report::evidence_of(rep)) r.evidence.push_back(std::move(e));
  }
  if (cmp.outcome == Comparison::undecided) r.exit = undecided;
  return r;
}

Outcome cmd_qstar(const Options& o) {
  Outcome r;
  const PrimeSet q = single_q(o);
  r.config = {{"Q", integers(q.primes())}, {"bound", integer(o.bound)}};
  json items = json::array();
  for (const auto& m : q_star_members(q, o.bound)) items.push_back(report::to_json(m));
  r.results = {{"members", items}};
  return r;
}

std::int64_t single_prime(const Options& o) {
  const auto ps = int_list(o.primes, "--primes");
  if (ps.size() != 1) throw PreconditionError("expected a single prime in --primes");
  return ps.front();
}

Outcome cmd_inverse_seq(const Options& o) {
  Outcome r;
  const PrimeSet q = single_q(o);
  const std::int64_t p = single_prime(o);
  const unsigned n = o.precision.value_or(10);
  r.config = {{"Q", integers(q.primes())}, {"p", integer(p)}, {"precision", integer(std::uint64_t{n})}};
  r.results = {{"sequence", integers(qadic_inverse_sequence(q, p, n))}};
  return r;
}

Outcome cmd_nonproper(const Options& o) {
  Outcome r;
  const PrimeSet q = single_q(o);
  const std::int64_t p = single_prime(o);
  const unsigned n = o.precision.value_or(30);
  r.config = {{"Q", integers(q.primes())}, {"p", integer(p)}, {"precision", integer(std::uint64_t{n})}};
  r.results = report::to_json(nonproper_witness(q, p, n));
  return r;
}

Outcome cmd_continuity(const Options& o) {
  Outcome r;
  const PrimeSet q = single_q(o);
  const std::int64_t p = single_prime(o);
  if (!o.k.empty()) {
    const auto ks = big_list(o.k);
    if (ks.size() != 2) throw PreconditionError("continuity --k takes one pair x,y");
    r.config = {{"Q", integers(q.primes())}, {"p", integer(p)}};
    r.results = report::to_json(check_floor_congruence(q, p, ks[0], ks[1]));
    r.results["x"] = integer(ks[0]);
    r.results["y"] = integer(ks[1]);
    if (!r.results["holds"].get<bool>()) r.exit = failure;
    return r;
  }
  ContinuitySampling s;
  s.window = window_or(o, {-50, 50});
  s.random_pairs = o.random_pairs;
  s.seed = o.seed;
  r.config = {{"Q", integers(q.primes())},
              {"p", integer(p)},
              {"window", interval_json(s.window)},
              {"random_pairs", integer(s.random_pairs)},
              {"seed", integer(s.seed)}};
  Evidence e{EvidenceKind::continuity_certificate, floor_div_continuity_check(q, p, s), {}, "exact floor congruence"};
  r.results = {{"violations", "0"}};
  r.evidence.push_back(report::to_json(e));
  return r;
}

Outcome cmd_partition(const Options& o) {
  Outcome r;
  const Base g = base_of(o);
  const Interval w = window_or(o, {0, 20});
  r.config = {{"g", integer(g.value())}, {"window", interval_json(w)}};
  r.results = report::to_json(build_partition(g, w));
  return r;
}

Outcome cmd_rectify(const Options& o) {
  Outcome r;
  const Base g = base_of(o);
  const Interval w = window_or(o, {0, 255});
  const MapSpec f = MapSpec::parse(o.map.empty() ? "mul:" + std::to_string(g.value()) : o.map);
  const MapSpec finv = o.inverse.empty() ? f.inverse() : MapSpec::parse(o.inverse);
  r.config = {{"g", integer(g.value())}, {"window", interval_json(w)}, {"map", f.str()}, {"inverse", finv.str()}};
  const auto table = FiniteCoarseMap::tabulate(w, [&](std::int64_t x) { return small(f(BigInt(x))); });
  const auto back = FiniteCoarseMap::tabulate(w, [&](std::int64_t x) { return small(finv(BigInt(x))); });
  const RectifyReport rep = rectify(table, back, g, g);
  r.results = report::to_json(rep);
  return r;
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    out << prefix << ":";
    for (const auto& e : j) out << " " << (e.is_string() ? e.get<std::string>() : e.dump());
    out << "\n";
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

using Handler = Outcome (*)(const Options&);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word metrics, g-adic and pro-Q residues, and power-invertibility spectra on Z", "zcoarse"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    Handler handler;
    const char* flags;
  };
  // Flags each command accepts, as single letters: g Q k p(rimes) i(max) t(hreshold)
  // w(indow) n (precision) s(eed) m(ap) v (inverse) b(ound) x (max-terms) r(andom pairs)
  const std::vector<Command> commands = {
      {"rep", "special g-adic representation of each k", cmd_rep, "gkw"},
      {"len", "word length of each k", cmd_len, "gkw"},
      {"dist", "d_g for pairs --k a,b", cmd_dist, "gk"},
      {"oracle-check", "compare the length formula with brute-force search", cmd_oracle_check, "gkwx"},
      {"defect", "quasimorphism defect of a map on a window", cmd_defect, "gwm"},
      {"gadic", "g-adic approximation and stable digit prefix of each k", cmd_gadic, "gkn"},
      {"inverse", "inverse of each prime modulo g^precision", cmd_inverse, "gpn"},
      {"stabilize", "stabilization of a sequence --k x1,x2,... in Z_g", cmd_stabilize, "gkn"},
      {"witness", "divergence witnesses (g^((p-1)i) - 1)/p", cmd_witness, "gpin"},
      {"spectrum", "classify primes for (Z, d_g)", cmd_spectrum, "gpitwsbr"},
      {"compare", "compare two spectra (--g a,b or --Q A --Q B)", cmd_compare, "gQpitwnsbr"},
      {"qstar", "members of Q* up to --bound", cmd_qstar, "Qb"},
      {"inverse-seq", "a_n = p^-1 mod prod q^n", cmd_inverse_seq, "Qpn"},
      {"nonproper", "non-properness witness for mu_p on (Z, E_Q)", cmd_nonproper, "Qpn"},
      {"continuity", "floor(-/p) congruence check for p in Q", cmd_continuity, "Qpkwsr"},
      {"profinite-spectrum", "classify primes for (Z, E_Q)", cmd_profinite_spectrum, "Qpntwsbr"},
      {"partition", "blocks B_n of the window", cmd_partition, "gw"},
      {"rectify", "bijection close to a map via greedy injection and CSB", cmd_rectify, "gwmv"},
  };

  std::map<CLI::App*, Handler> handlers;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    handlers[sub] = c.handler;
    const std::string flags = c.flags;
    auto has = [&](char f) { return flags.find(f) != std::string::npos; };
    if (has('g')) sub->add_option("--g", o.g, "base g (or a,b for compare)");
    if (has('Q')) sub->add_option("--Q", o.q, "prime set, comma separated (repeat for compare)");
    if (has('k')) sub->add_option("--k", o.k, "integers, comma separated")->delimiter('\0');
    if (has('p')) sub->add_option("--primes", o.primes, "primes, comma separated");
    if (has('i')) sub->add_option("--imax", o.imax, "witness length i_max");
    if (has('t')) sub->add_option("--threshold", o.threshold, "witness length threshold / magnitude bits");
    if (has('w')) sub->add_option("--window", o.window, "interval lo:hi");
    if (has('n')) sub->add_option("--precision", o.precision, "precision N / sequence length n_max");
    if (has('s')) sub->add_option("--seed", o.seed, "seed for sampled certificates");
    if (has('m')) sub->add_option("--map", o.map, "identity | mul:N | floor:N | shift:N");
    if (has('v')) sub->add_option("--inverse", o.inverse, "coarse inverse map (default derived from --map)");
    if (has('b')) sub->add_option("--bound", o.bound, "bound for derived sets");
    if (has('x')) sub->add_option("--max-terms", o.max_terms, "oracle term limit");
    if (has('r')) sub->add_option("--random-pairs", o.random_pairs, "random pairs for certificates");
    sub->add_option("--format", o.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out, "write the report to this path");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return failure;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    outcome = handlers.at(chosen)(o);
  } catch (const std::exception& e) {
    // PreconditionError, MalformedInput, WindowTooSmall, CertificateViolation, parse errors.
    err << "error: " << e.what() << "\n";
    return failure;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return failure;
    }
    sink = &file;
  }
  if (o.format == "csv") {
    if (outcome.csv.empty()) {
      err << "error: csv output is available for rep, len and dist only\n";
      return failure;
    }
    for (const auto& line : outcome.csv) *sink << line << "\n";
  } else if (o.format == "text") {
    *sink << "command: " << command << "\n";
    flatten(outcome.config, "config", *sink);
    flatten(outcome.results, "results", *sink);
    *sink << "evidence: " << outcome.evidence.size() << " entries\n";
  } else {
    *sink << report::envelope(command, outcome.config, outcome.results, outcome.evidence, elapsed).dump(2) << "\n";
  }
  if (outcome.exit == undecided) err << "note: at least one verdict is UNDECIDED\n";
  return outcome.exit;
}

}  // namespace zcoarse::cli
