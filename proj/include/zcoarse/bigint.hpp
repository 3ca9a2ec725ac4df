#pragma once

// Exact integer arithmetic shared by every module.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zcoarse {

using BigInt = boost::multiprecision::cpp_int;

/// Floor division toward negative infinity. Throws std::domain_error on b == 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

/// Least nonnegative residue of a modulo m (m > 0).
BigInt mod_floor(const BigInt& a, const BigInt& m);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

BigInt ipow(const BigInt& base, std::uint64_t exponent);

/// Parses an optionally signed decimal integer of any length.
BigInt parse_bigint(std::string_view text);

std::string to_decimal(const BigInt& value);

/// True when value fits in [-2^62, 2^62], the range the machine-word fast paths accept.
bool fits_fast_path(const BigInt& value);

/// Trial-division primality; intended for the small primes used here.
bool is_prime(std::int64_t n);

/// Multiplicity of prime p in n (n != 0).
unsigned valuation(BigInt n, std::int64_t p);

/// Returns (gcd, x, y) with a*x + b*y = gcd >= 0.
struct ExtendedGcd {
  BigInt gcd;
  BigInt x;
  BigInt y;
};
ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b);

}  // namespace zcoarse
