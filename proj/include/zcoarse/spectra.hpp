#pragma once

// Power maps mu_n : k -> n k on (Z, +) and the spectrum of primes p for which mu_p is
// a coarse equivalence.

#include <cstdint>
#include <string>
#include <vector>

#include "zcoarse/evidence.hpp"
#include "zcoarse/gadic_core.hpp"

namespace zcoarse {

enum class Verdict { invertible, not_invertible, undecided };

std::string to_string(Verdict v);

struct PrimeVerdict {
  std::int64_t prime = 0;
  Verdict verdict = Verdict::undecided;
  Evidence evidence;
  std::string note;
};

struct ClassifyParams {
  std::uint64_t i_max = 40;
  WordLength threshold = 20;
  PairSampling sampling;
  /// Derived sets are listed on [1, bound].
  std::int64_t bound = 20;
};

struct SpectrumReport {
  enum class Space { word_metric, profinite };

  Space space = Space::word_metric;
  std::int64_t base = 0;                  ///< g, word-metric spaces only
  std::vector<std::int64_t> prime_set;    ///< Q, profinite spaces only
  std::string descriptor;
  std::vector<PrimeVerdict> verdicts;     ///< ascending by prime
  std::int64_t bound = 0;
  std::vector<std::int64_t> sp_natural;   ///< Sp_N on [1, bound]
  std::vector<std::int64_t> sp_integer;   ///< Sp_Z on [-bound, bound]
  /// n <= bound whose verdict depends on an untested or undecided prime.
  std::vector<std::int64_t> unclassified;
  /// mu_{a/b} is invertible for a, b in the multiplicative closure of these.
  std::vector<std::int64_t> sp_rational_generators;

  std::vector<std::int64_t> invertible_primes() const;
  bool decided() const;
  /// Verdict for mu_n from the prime verdicts: n = 0 is never invertible, +-1 always,
  /// otherwise invertible iff every prime factor is.
  Verdict verdict_for(std::int64_t n) const;
};

BigInt mu_apply(const BigInt& n, const BigInt& k);

/// Throws CertificateViolation with the counterexample if any check fails.
/// prime = 0 checks floor(-/g) alone; otherwise prime must divide g.
ContractionCertificate contraction_certificate(Base g, const PairSampling& sampling, std::int64_t prime = 0);

PrimeVerdict classify_prime(Base g, std::int64_t p, const ClassifyParams& params = {});

SpectrumReport spectrum(Base g, std::vector<std::int64_t> primes, const ClassifyParams& params = {});

/// Fills sp_natural, sp_integer, unclassified and sp_rational_generators from the
/// verdicts. Computes Sp_N both as a multiplicative closure and by factoring each
/// n <= bound; throws std::logic_error if the two disagree.
void derive_closure(SpectrumReport& report);

enum class Comparison { distinguished, not_distinguished, undecided };

std::string to_string(Comparison c);

struct ComparisonReport {
  Comparison outcome = Comparison::undecided;
  std::vector<std::int64_t> common_primes;
  std::vector<std::int64_t> differing_primes;
  std::string principle;
};

/// Coarsely isomorphic coarse groups have equal spectra, so a difference on any
/// commonly tested prime separates them. Equal spectra decide nothing.
ComparisonReport compare_spectra(const SpectrumReport& a, const SpectrumReport& b);

}  // namespace zcoarse
