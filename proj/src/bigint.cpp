#include "zcoarse/bigint.hpp"

#include <cctype>
#include <stdexcept>

#include "zcoarse/interval.hpp"

namespace zcoarse {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw std::domain_error("mod_floor: modulus must be positive");
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  std::int64_t q = a / b;
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::domain_error("mod_floor: modulus must be positive");
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

bool fits_fast_path(const BigInt& value) {
  static const BigInt limit = BigInt(1) << 62;
  return value <= limit && value >= -limit;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

unsigned valuation(BigInt n, std::int64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Interval parse_interval(const std::string& text) {
  // Split on the first ':' that is not the leading sign of lo.
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw std::invalid_argument("interval must look like lo:hi, got '" + text + "'");
  const BigInt lo = parse_bigint(text.substr(0, colon));
  const BigInt hi = parse_bigint(text.substr(colon + 1));
  if (!fits_fast_path(lo) || !fits_fast_path(hi)) throw std::invalid_argument("interval bounds out of range");
  Interval result{lo.convert_to<std::int64_t>(), hi.convert_to<std::int64_t>()};
  if (result.empty()) throw std::invalid_argument("empty interval '" + text + "'");
  return result;
}

}  // namespace zcoarse
