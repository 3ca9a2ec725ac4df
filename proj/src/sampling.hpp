#pragma once

#include <random>

#include "zcoarse/bigint.hpp"

namespace zcoarse::detail {

/// Uniform signed integer with |value| < 2^bits.
inline BigInt random_bigint(std::mt19937_64& rng, unsigned bits) {
  BigInt value = 0;
  unsigned filled = 0;
  while (filled < bits) {
    value <<= 64;
    value += rng();
    filled += 64;
  }
  value >>= (filled - bits);
  return (rng() & 1U) ? BigInt(-value) : value;
}

}  // namespace zcoarse::detail
