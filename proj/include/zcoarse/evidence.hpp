#pragma once

// Machine-checkable evidence attached to invertibility verdicts.

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zcoarse/gadic_limits.hpp"
#include "zcoarse/interval.hpp"

namespace zcoarse {

/// How pairs are drawn for sampled certificates: every pair in `exhaustive` squared,
/// plus `random_pairs` pairs of roughly `random_bits`-bit integers.
struct PairSampling {
  Interval exhaustive{-300, 300};
  std::uint64_t random_pairs = 1000;
  unsigned random_bits = 128;
  std::uint64_t seed = 1;
};

/// Sampled check that floor(-/g) contracts d_g and that, for p | g,
/// psi = mu_{g/p} o floor(-/g) is a coarse inverse of mu_p.
struct ContractionCertificate {
  std::int64_t base = 2;
  std::int64_t prime = 0;
  PairSampling sampling;
  std::uint64_t pairs_checked = 0;
  std::uint64_t points_checked = 0;
  /// Largest d_g(k, k') among sampled pairs.
  WordLength max_pair_distance = 0;
  /// d_g(g floor(k/g), k) is at most this: max word length over {0, .., g-1}.
  WordLength rounding_bound = 0;
  WordLength rounding_max_seen = 0;
  /// d_g(psi(p k), k) is at most this: max word length over {0, .., g/p - 1}.
  WordLength inverse_bound = 0;
  WordLength inverse_max_seen = 0;
  /// psi is Lipschitz with this constant: word length of g/p.
  WordLength lipschitz_constant = 0;
  std::uint64_t violations = 0;
};

/// Sampled check that floor(-/p) is continuous for the pro-Q topology, in the exact
/// form p^n m | floor(x/p) - floor(y/p) whenever x = y mod p^(n+1) m, and of the
/// covering inclusion floor((k+K)/p) in floor(k/p) + (floor(K/p) u floor(K/p)+1).
struct ContinuityCertificate {
  std::vector<std::int64_t> primes;
  std::int64_t prime = 0;
  Interval window;
  std::uint64_t random_pairs = 0;
  std::uint64_t seed = 1;
  std::uint64_t pairs_checked = 0;
  std::uint64_t congruent_pairs = 0;
  unsigned max_exponent_seen = 0;
  std::uint64_t covering_checks = 0;
  std::uint64_t violations = 0;
};

/// A sequence a_n -> p^-1 in Z_Q with p a_n -> 1: the preimage of the relatively
/// compact set { p a_n } u { 1 } under mu_p has no integer accumulation point.
struct NonproperReport {
  std::vector<std::int64_t> primes;
  std::int64_t prime = 0;
  unsigned n_max = 0;
  std::vector<BigInt> moduli;      ///< m_n = prod_{q in Q} q^n
  std::vector<BigInt> sequence;    ///< a_n, least nonnegative
  std::vector<BigInt> balanced;    ///< a_n reduced into (-m_n/2, m_n/2]
  bool image_converges = false;    ///< p a_j = 1 mod m_n for all j >= n
  bool cauchy = false;             ///< a_{n+1} = a_n mod m_n
  bool eventually_constant = false;
  BigInt max_abs;
  /// Any integer limit z of (a_n) would need |z| >= this.
  BigInt integer_limit_bound;
};

enum class EvidenceKind { contraction_certificate, divergence_witness, continuity_certificate, nonproper_witness };

std::string to_string(EvidenceKind kind);

struct Evidence {
  EvidenceKind kind;
  std::variant<ContractionCertificate, WitnessSequence, ContinuityCertificate, NonproperReport> data;
  /// Parameters and thresholds used, as ordered (name, value) pairs.
  std::vector<std::pair<std::string, std::string>> parameters;
  /// The mathematical fact the sampled check stands in for.
  std::string warrant;
};

}  // namespace zcoarse
