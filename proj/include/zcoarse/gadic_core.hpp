#pragma once

// Special g-adic representations and the word metric d_g on the integers,
// where the generating set is S_g = { +-g^n : n >= 0 }.

#include <cstdint>
#include <functional>
#include <vector>

#include "zcoarse/bigint.hpp"
#include "zcoarse/interval.hpp"

namespace zcoarse {

/// Base g >= 2 of a geometric generating set.
class Base {
 public:
  explicit Base(std::int64_t g);

  std::int64_t value() const { return g_; }
  std::int64_t half() const { return g_ / 2; }
  bool is_even() const { return g_ % 2 == 0; }

  friend bool operator==(const Base&, const Base&) = default;

 private:
  std::int64_t g_;
};

using WordLength = std::uint64_t;

/// Signed digit expansion k = sum digits[i] * g^i, least significant digit first.
///
/// Canonical form: |digits[i]| <= floor(g/2); for even g a digit of magnitude g/2 is
/// followed by a digit of smaller magnitude with the same sign (or zero); the last
/// stored digit is nonzero. Zero is the empty vector.
struct SpecialRep {
  Base base;
  std::vector<std::int64_t> digits;

  /// Sum of |digits[i]|, i.e. the word length of the represented integer.
  WordLength weight() const;
  /// Digit at index i, zero beyond the stored range.
  std::int64_t digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }

  friend bool operator==(const SpecialRep&, const SpecialRep&) = default;
};

SpecialRep special_rep(Base g, const BigInt& k);

/// Throws MalformedInput if r violates any canonical-form condition.
void validate_rep(const SpecialRep& r);

/// Evaluates the digit vector; rejects malformed vectors.
BigInt rep_to_int(const SpecialRep& r);

WordLength word_length(Base g, const BigInt& k);
WordLength word_length(Base g, std::int64_t k);

/// d_g(k, k') = word_length(k - k').
WordLength distance(Base g, const BigInt& k, const BigInt& k_prime);
WordLength distance(Base g, std::int64_t k, std::int64_t k_prime);

/// floor(k / g), rounding toward negative infinity.
BigInt floor_div_image(Base g, const BigInt& k);

/// An integer map given by its values on a window.
struct WindowTable {
  Interval window;
  std::vector<BigInt> values;

  static WindowTable tabulate(Interval window, const std::function<BigInt(std::int64_t)>& f);
  const BigInt& at(std::int64_t x) const;
};

struct DefectResult {
  WordLength defect = 0;
  std::int64_t worst_a = 0;
  std::int64_t worst_b = 0;
  std::uint64_t pairs_checked = 0;
};

/// Largest d_g(f(a+b), f(a)+f(b)) over a, b, a+b in the table's window: the minimal
/// quasimorphism constant valid on that window. Throws PreconditionError when the
/// window admits no such pair.
DefectResult quasimorphism_defect(const WindowTable& f, Base target);

}  // namespace zcoarse
