#pragma once

// Finite-precision g-adic integers and the sequences that separate Z from Z_g.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zcoarse/gadic_core.hpp"

namespace zcoarse {

/// A g-adic integer known modulo g^precision, stored as its least nonnegative residue.
struct GadicApprox {
  Base base;
  unsigned precision = 1;
  BigInt residue;

  BigInt modulus() const;
  /// The same element at a lower precision.
  GadicApprox reduce(unsigned lower_precision) const;
  /// True when the higher-precision approximation reduces to the lower one.
  bool compatible_with(const GadicApprox& other) const;

  friend bool operator==(const GadicApprox&, const GadicApprox&) = default;
};

GadicApprox approx_from_int(Base g, unsigned precision, const BigInt& k);

/// The inverse of p modulo g^precision. Throws PreconditionError when gcd(p, g) != 1.
GadicApprox mod_inverse(std::int64_t p, Base g, unsigned precision);

/// Special digits 0 .. precision-2 shared by every integer in the residue class.
/// Throws PreconditionError when precision < 2.
std::vector<std::int64_t> approx_digits(const GadicApprox& x);

struct WitnessTerm {
  std::uint64_t index;
  BigInt value;                 ///< (g^((p-1) i) - 1) / p
  WordLength length;            ///< word length of value
  WordLength boundary_length;   ///< word length of g^((p-1) i) - 1, at most 2
};

/// Integers whose p-multiples stay within distance 2 of the generators while their own
/// lengths grow: evidence that multiplication by p is not proper.
struct WitnessSequence {
  Base base;
  std::int64_t prime;
  std::vector<WitnessTerm> terms;

  std::vector<WordLength> lengths() const;
  /// First position from which lengths never decrease.
  std::size_t nondecreasing_from() const;
  /// True when the last `count` lengths increase strictly.
  bool strictly_increasing_tail(std::size_t count) const;
};

WitnessSequence divergence_witness(Base g, std::int64_t p, std::uint64_t i_max);

enum class Trend { constant, strictly_increasing, nondecreasing, strictly_decreasing, nonincreasing, mixed };

std::string to_string(Trend t);
Trend classify_trend(std::span<const WordLength> values);

struct StabilizationReport {
  Base base;
  unsigned precision = 1;
  std::vector<BigInt> residues;
  /// The residues are constant from this position to the end (at least two terms).
  std::optional<std::size_t> stable_from;
  BigInt limit_residue;
  std::vector<std::int64_t> digit_prefix;  ///< empty when precision < 2
  /// Smallest-magnitude integer in the limiting class, if it is no larger than max|x|.
  std::optional<BigInt> bounded_integer;
  BigInt magnitude_checked;
  std::vector<WordLength> lengths;
  Trend trend = Trend::constant;

  bool stabilizes() const { return stable_from.has_value(); }
};

/// Reports whether xs converges in Z_g at the given precision and what the limit looks
/// like. Findings only; nothing is asserted. Throws PreconditionError on an empty list.
StabilizationReport stabilization_check(std::span<const BigInt> xs, Base g, unsigned precision);

}  // namespace zcoarse
