#pragma once

// Residue arithmetic in the pro-Q completion Z_Q = prod_{p in Q} Z_p for a finite
// prime set Q, and the spectrum of the coarse group (Z, E_Q).

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zcoarse/evidence.hpp"
#include "zcoarse/spectra.hpp"

namespace zcoarse {

/// A finite, nonempty, sorted set of distinct primes.
class PrimeSet {
 public:
  explicit PrimeSet(std::vector<std::int64_t> primes);

  const std::vector<std::int64_t>& primes() const { return primes_; }
  bool contains(std::int64_t p) const;
  std::size_t size() const { return primes_.size(); }
  /// prod_{q in Q} q^n
  BigInt tower_modulus(unsigned n) const;
  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::int64_t> primes_;
};

/// Element of Z_Q known modulo prod p^(e_p), one residue per prime.
struct QadicApprox {
  PrimeSet primes;
  std::vector<unsigned> exponents;
  std::vector<BigInt> residues;

  BigInt modulus() const;
  /// The single residue modulo modulus() that corresponds to the components (CRT).
  BigInt combined() const;
  QadicApprox reduce(const std::vector<unsigned>& lower) const;
};

QadicApprox qadic_from_int(const PrimeSet& q, std::vector<unsigned> exponents, const BigInt& k);

/// A member of Q*: a positive integer all of whose prime factors lie in Q.
struct QStarModulus {
  std::int64_t value = 1;
  std::vector<std::pair<std::int64_t, unsigned>> factorization;

  friend bool operator==(const QStarModulus&, const QStarModulus&) = default;
};

std::vector<QStarModulus> q_star_members(const PrimeSet& q, std::int64_t bound);

/// a_n = p^-1 mod m_n with m_n = prod_{q in Q} q^n, n = 1 .. n_max.
/// Throws PreconditionError when p is in Q or not prime.
std::vector<BigInt> qadic_inverse_sequence(const PrimeSet& q, std::int64_t p, unsigned n_max);

NonproperReport nonproper_witness(const PrimeSet& q, std::int64_t p, unsigned n_max);

/// The exact form of continuity for floor(-/p), p in Q, on one pair.
struct FloorCongruence {
  bool same_class = false;    ///< x = y mod p
  unsigned exponent = 0;      ///< n, with x = y mod p^(n+1) m
  BigInt cofactor = 1;        ///< m, the part of x - y over Q \ {p}
  BigInt floor_difference;    ///< floor(x/p) - floor(y/p)
  bool holds = true;          ///< p^n m divides floor_difference
};

FloorCongruence check_floor_congruence(const PrimeSet& q, std::int64_t p, const BigInt& x, const BigInt& y);

/// True when every element of floor((k + K)/p) lies in floor(k/p) + (floor(K/p) u (floor(K/p) + 1)).
bool covering_inclusion_holds(std::int64_t p, const BigInt& k, std::span<const BigInt> ks);

struct ContinuitySampling {
  Interval window{-50, 50};
  std::uint64_t random_pairs = 1000;
  unsigned random_bits = 96;
  std::uint64_t seed = 1;
};

/// Exhaustive on window^2 plus random congruent pairs. Throws CertificateViolation on
/// the first counterexample.
ContinuityCertificate floor_div_continuity_check(const PrimeSet& q, std::int64_t p, const ContinuitySampling& sampling);

struct ProfiniteParams {
  unsigned n_max = 30;
  /// NOT_INVERTIBLE needs max |a_n| and the integer-limit bound to reach 2^magnitude_bits.
  unsigned magnitude_bits = 20;
  ContinuitySampling sampling;
  std::uint64_t covering_samples = 200;
  std::int64_t bound = 20;
};

SpectrumReport spectrum_profinite(const PrimeSet& q, std::vector<std::int64_t> primes, const ProfiniteParams& params = {});

}  // namespace zcoarse
