#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zcoarse {

/// Closed integer interval [lo, hi].
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  constexpr bool empty() const { return hi < lo; }
  constexpr std::uint64_t size() const {
    return empty() ? 0 : static_cast<std::uint64_t>(hi - lo) + 1;
  }
  constexpr bool contains(std::int64_t x) const { return lo <= x && x <= hi; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

/// Parses "lo:hi".
Interval parse_interval(const std::string& text);

}  // namespace zcoarse
