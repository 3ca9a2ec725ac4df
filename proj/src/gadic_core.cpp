#include "zcoarse/gadic_core.hpp"

#include <cstdlib>
#include <string>

#include "zcoarse/errors.hpp"

namespace zcoarse {

Base::Base(std::int64_t g) : g_(g) {
  if (g < 2) throw PreconditionError("base must be >= 2, got " + std::to_string(g));
  // Keeps g^2 and the digit arithmetic inside 64 bits on the fast path.
  if (g > (std::int64_t{1} << 30)) throw PreconditionError("base too large: " + std::to_string(g));
}

WordLength SpecialRep::weight() const {
  WordLength total = 0;
  for (const auto d : digits) total += static_cast<WordLength>(d < 0 ? -d : d);
  return total;
}

namespace {

// Least significant digit first. The balanced residue lies in (-g/2, g/2]; a residue
// of exactly g/2 (even g) takes the sign that keeps the next digit below g/2 in
// magnitude and of matching sign: with q = (r - g/2) / g, +g/2 iff q mod g < g/2.
template <typename Int, typename Visit>
void for_each_digit(std::int64_t g, Int r, Visit&& visit) {
  const std::int64_t half = g / 2;
  const bool even = g % 2 == 0;
  while (r != 0) {
    Int rem = r % g;
    if (rem < 0) rem += g;
    auto e = static_cast<std::int64_t>(rem);
    if (e > half) e -= g;
    if (even && e == half) {
      Int q = (r - half) / g;  // exact
      Int qm = q % g;
      if (qm < 0) qm += g;
      if (static_cast<std::int64_t>(qm) >= half) e = -half;
    }
    visit(e);
    r = (r - e) / g;  // exact
  }
}

}  // namespace

SpecialRep special_rep(Base g, const BigInt& k) {
  SpecialRep rep{g, {}};
  auto push = [&](std::int64_t e) { rep.digits.push_back(e); };
  if (fits_fast_path(k)) {
    for_each_digit(g.value(), k.convert_to<std::int64_t>(), push);
  } else {
    for_each_digit(g.value(), k, push);
  }
  return rep;
}

void validate_rep(const SpecialRep& r) {
  const std::int64_t half = r.base.half();
  const bool even = r.base.is_even();
  for (std::size_t i = 0; i < r.digits.size(); ++i) {
    const std::int64_t e = r.digits[i];
    if (std::llabs(e) > half) {
      throw MalformedInput("digit " + std::to_string(i) + " = " + std::to_string(e) + " exceeds floor(g/2)");
    }
    if (even && std::llabs(e) == half) {
      const std::int64_t next = r.digit(i + 1);
      if (std::llabs(next) == half || e * next < 0) {
        throw MalformedInput("half-base digit rule violated at digits " + std::to_string(i) + "," +
                             std::to_string(i + 1));
      }
    }
  }
  if (!r.digits.empty() && r.digits.back() == 0) throw MalformedInput("trailing zero digit");
}

BigInt rep_to_int(const SpecialRep& r) {
  validate_rep(r);
  BigInt value = 0;
  for (auto it = r.digits.rbegin(); it != r.digits.rend(); ++it) value = value * r.base.value() + *it;
  return value;
}

WordLength word_length(Base g, const BigInt& k) {
  WordLength total = 0;
  auto add = [&](std::int64_t e) { total += static_cast<WordLength>(e < 0 ? -e : e); };
  if (fits_fast_path(k)) {
    for_each_digit(g.value(), k.convert_to<std::int64_t>(), add);
  } else {
    for_each_digit(g.value(), k, add);
  }
  return total;
}

WordLength word_length(Base g, std::int64_t k) {
  if (k > (std::int64_t{1} << 62) || k < -(std::int64_t{1} << 62)) return word_length(g, BigInt(k));
  WordLength total = 0;
  for_each_digit(g.value(), k, [&](std::int64_t e) { total += static_cast<WordLength>(e < 0 ? -e : e); });
  return total;
}

WordLength distance(Base g, const BigInt& k, const BigInt& k_prime) { return word_length(g, BigInt(k - k_prime)); }

WordLength distance(Base g, std::int64_t k, std::int64_t k_prime) {
  std::int64_t diff = 0;
  if (__builtin_sub_overflow(k, k_prime, &diff)) return word_length(g, BigInt(BigInt(k) - k_prime));
  return word_length(g, diff);
}

BigInt floor_div_image(Base g, const BigInt& k) { return floor_div(k, BigInt(g.value())); }

WindowTable WindowTable::tabulate(Interval window, const std::function<BigInt(std::int64_t)>& f) {
  WindowTable table{window, {}};
  table.values.reserve(window.size());
  for (std::int64_t x = window.lo; x <= window.hi; ++x) table.values.push_back(f(x));
  return table;
}

const BigInt& WindowTable::at(std::int64_t x) const {
  if (!window.contains(x)) throw PreconditionError("point " + std::to_string(x) + " outside the table window");
  return values[static_cast<std::size_t>(x - window.lo)];
}

DefectResult quasimorphism_defect(const WindowTable& f, Base target) {
  if (f.values.size() != f.window.size()) throw MalformedInput("table size does not match its window");
  DefectResult result;
  const Interval w = f.window;
  for (std::int64_t a = w.lo; a <= w.hi; ++a) {
    // b ranges so that a + b stays in the window.
    const std::int64_t b_lo = std::max(w.lo, w.lo - a);
    const std::int64_t b_hi = std::min(w.hi, w.hi - a);
    for (std::int64_t b = b_lo; b <= b_hi; ++b) {
      const BigInt lhs = f.at(a + b);
      const BigInt rhs = f.at(a) + f.at(b);
      const WordLength d = distance(target, lhs, rhs);
      if (result.pairs_checked == 0 || d > result.defect) {
        result.defect = d;
        result.worst_a = a;
        result.worst_b = b;
      }
      ++result.pairs_checked;
    }
  }
  if (result.pairs_checked == 0) throw PreconditionError("window admits no pair with a, b, a+b inside it");
  return result;
}

}  // namespace zcoarse
