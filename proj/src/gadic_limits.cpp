#include "zcoarse/gadic_limits.hpp"

#include <algorithm>

#include "zcoarse/errors.hpp"

namespace zcoarse {

BigInt GadicApprox::modulus() const { return ipow(BigInt(base.value()), precision); }

GadicApprox GadicApprox::reduce(unsigned lower_precision) const {
  if (lower_precision < 1 || lower_precision > precision) {
    throw PreconditionError("reduce: precision must be in [1, " + std::to_string(precision) + "]");
  }
  return approx_from_int(base, lower_precision, residue);
}

bool GadicApprox::compatible_with(const GadicApprox& other) const {
  if (!(base == other.base)) return false;
  const GadicApprox& high = precision >= other.precision ? *this : other;
  const GadicApprox& low = precision >= other.precision ? other : *this;
  return high.reduce(low.precision).residue == low.residue;
}

GadicApprox approx_from_int(Base g, unsigned precision, const BigInt& k) {
  if (precision < 1) throw PreconditionError("precision must be >= 1");
  GadicApprox x{g, precision, 0};
  x.residue = mod_floor(k, x.modulus());
  return x;
}

GadicApprox mod_inverse(std::int64_t p, Base g, unsigned precision) {
  if (precision < 1) throw PreconditionError("precision must be >= 1");
  GadicApprox x{g, precision, 0};
  const BigInt m = x.modulus();
  const ExtendedGcd e = extended_gcd(mod_floor(BigInt(p), m), m);
  if (e.gcd != 1) {
    throw PreconditionError(std::to_string(p) + " is not invertible modulo powers of " + std::to_string(g.value()));
  }
  x.residue = mod_floor(e.x, m);
  return x;
}

std::vector<std::int64_t> approx_digits(const GadicApprox& x) {
  if (x.precision < 2) throw PreconditionError("digit prefix needs precision >= 2");
  const SpecialRep rep = special_rep(x.base, x.residue);
  std::vector<std::int64_t> prefix(x.precision - 1);
  for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = rep.digit(i);
  return prefix;
}

std::vector<WordLength> WitnessSequence::lengths() const {
  std::vector<WordLength> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.length);
  return out;
}

std::size_t WitnessSequence::nondecreasing_from() const {
  std::size_t start = terms.size() == 0 ? 0 : terms.size() - 1;
  while (start > 0 && terms[start - 1].length <= terms[start].length) --start;
  return start;
}

bool WitnessSequence::strictly_increasing_tail(std::size_t count) const {
  if (count > terms.size()) return false;
  for (std::size_t i = terms.size() - count + 1; i < terms.size(); ++i) {
    if (terms[i - 1].length >= terms[i].length) return false;
  }
  return true;
}

WitnessSequence divergence_witness(Base g, std::int64_t p, std::uint64_t i_max) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (g.value() % p == 0) throw PreconditionError(std::to_string(p) + " divides the base " + std::to_string(g.value()));
  if (i_max < 1) throw PreconditionError("i_max must be >= 1");
  WitnessSequence seq{g, p, {}};
  const BigInt step = ipow(BigInt(g.value()), static_cast<std::uint64_t>(p - 1));
  BigInt power = 1;
  for (std::uint64_t i = 1; i <= i_max; ++i) {
    power *= step;
    const BigInt boundary = power - 1;
    if (boundary % p != 0) throw std::logic_error("witness term is not divisible by p");
    BigInt x = boundary / p;
    const WordLength len = word_length(g, x);
    seq.terms.push_back({i, std::move(x), len, word_length(g, boundary)});
  }
  return seq;
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::constant: return "constant";
    case Trend::strictly_increasing: return "strictly_increasing";
    case Trend::nondecreasing: return "nondecreasing";
    case Trend::strictly_decreasing: return "strictly_decreasing";
    case Trend::nonincreasing: return "nonincreasing";
    case Trend::mixed: return "mixed";
  }
  return "mixed";
}

Trend classify_trend(std::span<const WordLength> values) {
  bool up = false, down = false, flat = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1]) up = true;
    else if (values[i] < values[i - 1]) down = true;
    else flat = true;
  }
  if (up && down) return Trend::mixed;
  if (up) return flat ? Trend::nondecreasing : Trend::strictly_increasing;
  if (down) return flat ? Trend::nonincreasing : Trend::strictly_decreasing;
  return Trend::constant;
}

StabilizationReport stabilization_check(std::span<const BigInt> xs, Base g, unsigned precision) {
  if (xs.empty()) throw PreconditionError("stabilization_check needs a nonempty list");
  if (precision < 1) throw PreconditionError("precision must be >= 1");
  StabilizationReport report{g, precision, {}, std::nullopt, 0, {}, std::nullopt, 0, {}, Trend::constant};
  const BigInt m = ipow(BigInt(g.value()), precision);
  BigInt widest = 0;
  for (const auto& x : xs) {
    report.residues.push_back(mod_floor(x, m));
    report.lengths.push_back(word_length(g, x));
    widest = std::max(widest, BigInt(abs(x)));
  }
  std::size_t start = report.residues.size() - 1;
  while (start > 0 && report.residues[start - 1] == report.residues.back()) --start;
  if (start + 1 < report.residues.size()) report.stable_from = start;
  report.limit_residue = report.residues.back();
  if (precision >= 2) report.digit_prefix = approx_digits(GadicApprox{g, precision, report.limit_residue});
  // The class representative closest to zero.
  BigInt candidate = report.limit_residue;
  if (2 * candidate > m) candidate -= m;
  report.magnitude_checked = widest;
  if (abs(candidate) <= widest) report.bounded_integer = candidate;
  report.trend = classify_trend(report.lengths);
  return report;
}

}  // namespace zcoarse
