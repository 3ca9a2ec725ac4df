#include "zcoarse/spectra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sampling.hpp"
#include "zcoarse/errors.hpp"

namespace zcoarse {

std::string to_string(EvidenceKind kind) {
  switch (kind) {
    case EvidenceKind::contraction_certificate: return "ContractionCertificate";
    case EvidenceKind::divergence_witness: return "DivergenceWitness";
    case EvidenceKind::continuity_certificate: return "ContinuityCertificate";
    case EvidenceKind::nonproper_witness: return "NonproperWitness";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::invertible: return "INVERTIBLE";
    case Verdict::not_invertible: return "NOT_INVERTIBLE";
    case Verdict::undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::distinguished: return "DISTINGUISHED";
    case Comparison::not_distinguished: return "NOT_DISTINGUISHED";
    case Comparison::undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

BigInt mu_apply(const BigInt& n, const BigInt& k) { return n * k; }

namespace {

std::string describe_pair(const BigInt& k, const BigInt& kp) {
  return "(" + to_decimal(k) + ", " + to_decimal(kp) + ")";
}

class ContractionChecker {
 public:
  ContractionChecker(Base g, std::int64_t prime, ContractionCertificate& cert)
      : g_(g), cofactor_(prime == 0 ? 1 : g.value() / prime), cert_(cert) {}

  void point(const BigInt& k) {
    const BigInt q = floor_div_image(g_, k);
    const WordLength rounding = distance(g_, BigInt(q * g_.value()), k);
    cert_.rounding_max_seen = std::max(cert_.rounding_max_seen, rounding);
    if (rounding > cert_.rounding_bound) fail("d_g(g floor(k/g), k) exceeds bound at k = " + to_decimal(k));
    if (cofactor_ > 1 || cert_.prime != 0) {
      // psi(p k) = (g/p) floor(p k / g) must stay near k.
      const BigInt back = BigInt(cofactor_) * floor_div(BigInt(k * cert_.prime), BigInt(g_.value()));
      const WordLength err = distance(g_, back, k);
      cert_.inverse_max_seen = std::max(cert_.inverse_max_seen, err);
      if (err > cert_.inverse_bound) fail("d_g(psi(p k), k) exceeds bound at k = " + to_decimal(k));
    }
    ++cert_.points_checked;
  }

  void pair(const BigInt& k, const BigInt& kp) {
    const WordLength before = distance(g_, k, kp);
    const BigInt qk = floor_div_image(g_, k);
    const BigInt qkp = floor_div_image(g_, kp);
    const WordLength after = distance(g_, qk, qkp);
    cert_.max_pair_distance = std::max(cert_.max_pair_distance, before);
    if (after > before) fail("floor(-/g) expands the pair " + describe_pair(k, kp));
    if (cofactor_ > 1) {
      const WordLength psi = distance(g_, BigInt(qk * cofactor_), BigInt(qkp * cofactor_));
      if (psi > cert_.lipschitz_constant * before) fail("psi is not Lipschitz on the pair " + describe_pair(k, kp));
    }
    ++cert_.pairs_checked;
  }

  void pair(std::int64_t k, std::int64_t kp) {
    const WordLength before = distance(g_, k, kp);
    const std::int64_t qk = floor_div(k, g_.value());
    const std::int64_t qkp = floor_div(kp, g_.value());
    const WordLength after = distance(g_, qk, qkp);
    cert_.max_pair_distance = std::max(cert_.max_pair_distance, before);
    if (after > before) fail("floor(-/g) expands the pair " + describe_pair(k, kp));
    if (cofactor_ > 1) {
      const WordLength psi = distance(g_, qk * cofactor_, qkp * cofactor_);
      if (psi > cert_.lipschitz_constant * before) fail("psi is not Lipschitz on the pair " + describe_pair(k, kp));
    }
    ++cert_.pairs_checked;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    ++cert_.violations;
    throw CertificateViolation("contraction certificate (g = " + std::to_string(g_.value()) + "): " + what);
  }

  Base g_;
  std::int64_t cofactor_;
  ContractionCertificate& cert_;
};

WordLength max_length_below(Base g, std::int64_t n) {
  WordLength best = 0;
  for (std::int64_t r = 0; r < n; ++r) best = std::max(best, word_length(g, r));
  return best;
}

}  // namespace

ContractionCertificate contraction_certificate(Base g, const PairSampling& sampling, std::int64_t prime) {
  if (prime != 0 && (prime < 2 || g.value() % prime != 0)) {
    throw PreconditionError(std::to_string(prime) + " does not divide " + std::to_string(g.value()));
  }
  ContractionCertificate cert;
  cert.base = g.value();
  cert.prime = prime;
  cert.sampling = sampling;
  cert.rounding_bound = max_length_below(g, g.value());
  const std::int64_t cofactor = prime == 0 ? 1 : g.value() / prime;
  cert.inverse_bound = max_length_below(g, cofactor);
  cert.lipschitz_constant = word_length(g, cofactor);

  ContractionChecker check(g, prime, cert);
  const Interval w = sampling.exhaustive;
  for (std::int64_t k = w.lo; k <= w.hi; ++k) {
    check.point(BigInt(k));
    for (std::int64_t kp = w.lo; kp <= w.hi; ++kp) check.pair(k, kp);
  }
  std::mt19937_64 rng(sampling.seed);
  for (std::uint64_t i = 0; i < sampling.random_pairs; ++i) {
    const BigInt k = detail::random_bigint(rng, sampling.random_bits);
    // Alternate independent pairs with nearby ones so small distances are exercised too.
    const BigInt kp = (i % 2 == 0) ? detail::random_bigint(rng, sampling.random_bits)
                                   : BigInt(k + detail::random_bigint(rng, sampling.random_bits / 4 + 1));
    check.point(k);
    check.pair(k, kp);
  }
  return cert;
}

PrimeVerdict classify_prime(Base g, std::int64_t p, const ClassifyParams& params) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  PrimeVerdict out;
  out.prime = p;
  if (g.value() % p == 0) {
    out.evidence.kind = EvidenceKind::contraction_certificate;
    out.evidence.data = contraction_certificate(g, params.sampling, p);
    const auto& s = params.sampling;
    out.evidence.parameters = {{"exhaustive_window", std::to_string(s.exhaustive.lo) + ":" + std::to_string(s.exhaustive.hi)},
                               {"random_pairs", std::to_string(s.random_pairs)},
                               {"random_bits", std::to_string(s.random_bits)},
                               {"seed", std::to_string(s.seed)}};
    out.evidence.warrant =
        "floor(-/g) is a contraction and a coarse inverse of mu_g; mu_g = mu_p o mu_{g/p}, and the invertible "
        "power maps are closed under division";
    out.verdict = Verdict::invertible;
    return out;
  }
  WitnessSequence witness = divergence_witness(g, p, params.i_max);
  const std::size_t tail = static_cast<std::size_t>((params.i_max + 1) / 2);
  const bool increasing = witness.strictly_increasing_tail(tail);
  const WordLength reached = witness.terms.empty() ? 0 : witness.terms.back().length;
  const bool bounded_image = std::all_of(witness.terms.begin(), witness.terms.end(),
                                         [](const WitnessTerm& t) { return t.boundary_length <= 2; });
  out.evidence.kind = EvidenceKind::divergence_witness;
  out.evidence.parameters = {{"i_max", std::to_string(params.i_max)},
                             {"threshold", std::to_string(params.threshold)},
                             {"tail", std::to_string(tail)}};
  out.evidence.warrant =
      "p x_i = g^((p-1) i) - 1 lies within distance 2 of 0 while the lengths of x_i diverge, so mu_p is not "
      "proper";
  out.evidence.data = std::move(witness);
  if (increasing && reached >= params.threshold && bounded_image) {
    out.verdict = Verdict::not_invertible;
  } else {
    out.verdict = Verdict::undecided;
    std::ostringstream note;
    note << "witness below thresholds: strictly increasing tail " << (increasing ? "yes" : "no")
         << ", max length " << reached << " (threshold " << params.threshold << ")";
    out.note = note.str();
  }
  return out;
}

namespace {

std::vector<std::int64_t> normalized_primes(std::vector<std::int64_t> primes) {
  if (primes.empty()) throw PreconditionError("prime list is empty");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto p : primes) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  }
  return primes;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

SpectrumReport spectrum(Base g, std::vector<std::int64_t> primes, const ClassifyParams& params) {
  primes = normalized_primes(std::move(primes));
  SpectrumReport report;
  report.space = SpectrumReport::Space::word_metric;
  report.base = g.value();
  report.descriptor = "(Z, d_" + std::to_string(g.value()) + ")";
  report.bound = params.bound;
  for (const auto p : primes) report.verdicts.push_back(classify_prime(g, p, params));
  derive_closure(report);
  return report;
}

std::vector<std::int64_t> SpectrumReport::invertible_primes() const {
  std::vector<std::int64_t> out;
  for (const auto& v : verdicts) {
    if (v.verdict == Verdict::invertible) out.push_back(v.prime);
  }
  return out;
}

bool SpectrumReport::decided() const {
  return std::none_of(verdicts.begin(), verdicts.end(),
                      [](const PrimeVerdict& v) { return v.verdict == Verdict::undecided; });
}

Verdict SpectrumReport::verdict_for(std::int64_t n) const {
  if (n == 0) return Verdict::not_invertible;
  if (n < 0) n = -n;
  if (n == 1) return Verdict::invertible;
  bool unknown = false;
  for (const auto p : prime_factors(n)) {
    auto it = std::find_if(verdicts.begin(), verdicts.end(), [&](const PrimeVerdict& v) { return v.prime == p; });
    if (it == verdicts.end() || it->verdict == Verdict::undecided) {
      unknown = true;
    } else if (it->verdict == Verdict::not_invertible) {
      return Verdict::not_invertible;
    }
  }
  return unknown ? Verdict::undecided : Verdict::invertible;
}

void derive_closure(SpectrumReport& report) {
  const std::int64_t bound = report.bound;
  if (bound < 1) throw PreconditionError("closure bound must be >= 1");
  const auto generators = report.invertible_primes();

  // Route 1: multiplicative closure of the invertible primes and 1.
  std::set<std::int64_t> closure{1};
  std::vector<std::int64_t> frontier{1};
  while (!frontier.empty()) {
    const std::int64_t n = frontier.back();
    frontier.pop_back();
    for (const auto p : generators) {
      if (n <= bound / p && closure.insert(n * p).second) frontier.push_back(n * p);
    }
  }

  // Route 2: factor every n in range.
  std::vector<std::int64_t> by_factoring;
  report.unclassified.clear();
  for (std::int64_t n = 1; n <= bound; ++n) {
    switch (report.verdict_for(n)) {
      case Verdict::invertible: by_factoring.push_back(n); break;
      case Verdict::undecided: report.unclassified.push_back(n); break;
      case Verdict::not_invertible: break;
    }
  }
  if (!std::equal(closure.begin(), closure.end(), by_factoring.begin(), by_factoring.end())) {
    throw std::logic_error("closure and factorization disagree on Sp_N");
  }
  report.sp_natural = std::move(by_factoring);
  report.sp_integer.clear();
  for (auto it = report.sp_natural.rbegin(); it != report.sp_natural.rend(); ++it) report.sp_integer.push_back(-*it);
  report.sp_integer.insert(report.sp_integer.end(), report.sp_natural.begin(), report.sp_natural.end());
  report.sp_rational_generators = generators;
}

ComparisonReport compare_spectra(const SpectrumReport& a, const SpectrumReport& b) {
  ComparisonReport out;
  out.principle = "power-invertibility spectra are invariant under coarse isomorphism";
  std::map<std::int64_t, Verdict> left;
  for (const auto& v : a.verdicts) left[v.prime] = v.verdict;
  bool undecided = false;
  for (const auto& v : b.verdicts) {
    auto it = left.find(v.prime);
    if (it == left.end()) continue;
    out.common_primes.push_back(v.prime);
    if (it->second == Verdict::undecided || v.verdict == Verdict::undecided) {
      undecided = true;
    } else if (it->second != v.verdict) {
      out.differing_primes.push_back(v.prime);
    }
  }
  if (!out.differing_primes.empty()) {
    out.outcome = Comparison::distinguished;
  } else if (undecided) {
    out.outcome = Comparison::undecided;
  } else {
    out.outcome = Comparison::not_distinguished;
  }
  return out;
}

}  // namespace zcoarse
