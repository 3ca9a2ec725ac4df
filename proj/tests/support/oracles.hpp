#pragma once

// Independent reference computations for the tests. Nothing here calls into the
// library, so a bug there cannot hide behind the same bug here.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracles {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return a - m * floor_div(a, m); }

inline std::int64_t power(std::int64_t b, unsigned e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// The canonical-form rules, restated: |e_i| <= g/2 and, for even g, a digit of size
/// g/2 is followed by a digit of smaller size and the same sign (or zero).
inline bool canonical(std::int64_t g, const std::vector<std::int64_t>& d) {
  const std::int64_t h = g / 2;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::int64_t a = d[i] < 0 ? -d[i] : d[i];
    if (a > h) return false;
    if (g % 2 == 0 && a == h) {
      const std::int64_t next = i + 1 < d.size() ? d[i + 1] : 0;
      const std::int64_t b = next < 0 ? -next : next;
      if (b == h || d[i] * next < 0) return false;
    }
  }
  return true;
}

/// Number of canonical digit vectors of the given width evaluating to each value
/// with |value| <= limit.
inline std::map<std::int64_t, unsigned> count_representations(std::int64_t g, unsigned width, std::int64_t limit) {
  const std::int64_t h = g / 2;
  std::map<std::int64_t, unsigned> counts;
  std::vector<std::int64_t> d(width, -h);
  for (;;) {
    if (canonical(g, d)) {
      std::int64_t v = 0;
      for (std::size_t i = width; i-- > 0;) v = v * g + d[i];
      if (v >= -limit && v <= limit) ++counts[v];
    }
    std::size_t i = 0;
    while (i < width && d[i] == h) d[i++] = -h;
    if (i == width) break;
    ++d[i];
  }
  return counts;
}

/// Breadth-first distances from 0 in Cay(Z, S_g) restricted to [-radius, radius].
/// Exact for |k| well inside the radius, since a geodesic never needs to leave
/// [-g|k|, g|k|].
inline std::vector<int> bfs_lengths(std::int64_t g, std::int64_t radius) {
  std::vector<std::int64_t> gens;
  for (std::int64_t s = 1; s <= 2 * radius; s *= g) gens.push_back(s);
  std::vector<int> dist(static_cast<std::size_t>(2 * radius + 1), -1);
  std::deque<std::int64_t> queue{0};
  dist[static_cast<std::size_t>(radius)] = 0;
  while (!queue.empty()) {
    const std::int64_t v = queue.front();
    queue.pop_front();
    for (const std::int64_t s : gens) {
      for (const std::int64_t w : {v + s, v - s}) {
        if (w < -radius || w > radius) continue;
        int& slot = dist[static_cast<std::size_t>(w + radius)];
        if (slot < 0) {
          slot = dist[static_cast<std::size_t>(v + radius)] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

/// Least n >= 0 such that x - n is +-g^j, by direct search.
inline std::int64_t block_index(std::int64_t g, std::int64_t x) {
  for (std::int64_t n = 0;; ++n) {
    const std::int64_t y = x - n;
    const std::int64_t a = y < 0 ? -y : y;
    if (a == 0) continue;
    std::int64_t s = 1;
    while (s < a) s *= g;
    if (s == a) return n;
  }
}

/// p^-1 mod m by trial, for small m.
inline std::optional<std::int64_t> inverse_by_search(std::int64_t p, std::int64_t m) {
  for (std::int64_t a = 0; a < m; ++a) {
    if (mod(p * a, m) == 1 % m) return a;
  }
  return std::nullopt;
}

}  // namespace oracles
