// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../support/oracles.hpp"
#include "zcoarse/oracle.hpp"
#include "zcoarse/profinite.hpp"
#include "zcoarse/rectify.hpp"
#include "zcoarse/spectra.hpp"

using namespace zcoarse;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail.str("");
    ok = false;
    detail << why << "; ";
  }
};

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

void length_formula(Check& c) {
  std::uint64_t total = 0;
  for (std::int64_t g : {2, 3, 4, 5, 6}) {
    const FormulaReport r = validate_formula(Base(g), {-2000, 2000});
    total += r.matches;
    if (!r.mismatches.empty()) c.fail("g=" + std::to_string(g) + " mismatches=" + std::to_string(r.mismatches.size()));
    if (!r.inconclusive.empty()) c.fail("g=" + std::to_string(g) + " inconclusive=" + std::to_string(r.inconclusive.size()));
  }
  if (c.ok) c.detail << total << " lengths match the search oracle, 0 inconclusive";
}

void uniqueness(Check& c) {
  const std::int64_t limit = 500;
  for (std::int64_t g : {2, 3, 4, 5, 6}) {
    unsigned width = 1;
    while (oracles::power(g, width - 1) <= 3 * limit) ++width;
    const auto counts = oracles::count_representations(g, width, limit);
    for (std::int64_t k = -limit; k <= limit; ++k) {
      const auto it = counts.find(k);
      const unsigned n = it == counts.end() ? 0 : it->second;
      if (n != 1) {
        c.fail("g=" + std::to_string(g) + " k=" + std::to_string(k) + " has " + std::to_string(n) + " representations");
        return;
      }
      auto digits = special_rep(Base(g), k).digits;
      digits.resize(width, 0);
      if (!oracles::canonical(g, digits)) c.fail("special_rep not canonical at k=" + std::to_string(k));
    }
  }
  if (c.ok) c.detail << "exactly one canonical digit vector per |k| <= 500, g = 2..6";
}

void congruence_stability(Check& c) {
  std::mt19937_64 rng(2024);
  std::uint64_t pairs = 0;
  for (std::int64_t g : {2, 3, 4, 6}) {
    for (int t = 0; t < 10000; ++t) {
      const unsigned n = 2 + static_cast<unsigned>(rng() % 11);
      BigInt x = BigInt(rng()) * BigInt(rng() >> 1);
      if (rng() & 1) x = -x;
      BigInt step = BigInt(static_cast<std::int64_t>(rng() >> 20)) - (BigInt(1) << 43);
      if (step == 0) step = 1;
      const BigInt y = x + ipow(BigInt(g), n) * step;
      const SpecialRep rx = special_rep(Base(g), x);
      const SpecialRep ry = special_rep(Base(g), y);
      const auto prefix = approx_digits(approx_from_int(Base(g), n, x));
      for (std::size_t i = 0; i + 2 <= n; ++i) {
        if (rx.digit(i) != ry.digit(i) || rx.digit(i) != prefix[i]) {
          c.fail("g=" + std::to_string(g) + " digit " + std::to_string(i) + " differs for " + to_decimal(x) + ", " +
                 to_decimal(y));
          return;
        }
      }
      ++pairs;
    }
  }
  c.detail << pairs << " congruent pairs, digits 0..N-2 agree";
}

void contraction(Check& c) {
  std::uint64_t pairs = 0;
  for (std::int64_t g : {2, 3, 6}) {
    try {
      const ContractionCertificate cert = contraction_certificate(Base(g), PairSampling{{-300, 300}, 10000, 128, 7});
      pairs += cert.pairs_checked;
      if (cert.violations != 0) c.fail("g=" + std::to_string(g) + " violations");
    } catch (const std::exception& e) {
      c.fail(e.what());
    }
  }
  if (c.ok) c.detail << pairs << " pairs, 0 violations";
}

void word_metric_spectra(Check& c) {
  const std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13};
  for (std::int64_t g : {2, 3, 4, 5, 6, 10, 12}) {
    const SpectrumReport r = spectrum(Base(g), primes);
    std::vector<std::int64_t> expected;
    for (std::int64_t p : primes) {
      if (g % p == 0) expected.push_back(p);
    }
    if (!r.decided()) c.fail("g=" + std::to_string(g) + " has UNDECIDED verdicts");
    if (r.invertible_primes() != expected)
      c.fail("g=" + std::to_string(g) + " spectrum " + join(r.invertible_primes()) + " != " + join(expected));
    for (const PrimeVerdict& v : r.verdicts) {
      if (v.verdict != Verdict::not_invertible) continue;
      const auto* w = std::get_if<WitnessSequence>(&v.evidence.data);
      if (w == nullptr || w->terms.empty()) {
        c.fail("missing witness for g=" + std::to_string(g) + " p=" + std::to_string(v.prime));
        continue;
      }
      // Independent recomputation of the witness lengths.
      const BigInt gg = g;
      for (const WitnessTerm& t : w->terms) {
        const BigInt x = (ipow(gg, static_cast<unsigned>((v.prime - 1) * t.index)) - 1) / v.prime;
        if (x != t.value || word_length(Base(g), x) != t.length) c.fail("witness term mismatch");
      }
      const std::size_t tail = (w->terms.size() + 1) / 2;
      if (w->terms.size() > 40 || w->terms.back().length < 20 || !w->strictly_increasing_tail(tail))
        c.fail("weak witness g=" + std::to_string(g) + " p=" + std::to_string(v.prime));
    }
  }
  if (c.ok) c.detail << "Sp = prime divisors of g for all 7 bases; witnesses reach length >= 20 within 40 terms";
}

void desk_comparison(Check& c) {
  const std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13};
  const ComparisonReport a = compare_spectra(spectrum(Base(2), primes), spectrum(Base(3), primes));
  const ComparisonReport b = compare_spectra(spectrum(Base(6), primes), spectrum(Base(12), primes));
  if (a.outcome != Comparison::distinguished) c.fail("g=2 vs g=3: " + to_string(a.outcome));
  if (b.outcome != Comparison::not_distinguished) c.fail("g=6 vs g=12: " + to_string(b.outcome));
  if (c.ok) c.detail << "2 vs 3 " << to_string(a.outcome) << ", 6 vs 12 " << to_string(b.outcome);
}

void profinite_continuity(Check& c) {
  const std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> cases{{{2}, 2}, {{2, 3}, 3}, {{2, 5}, 5}};
  std::uint64_t congruent = 0;
  for (const auto& [qs, p] : cases) {
    const PrimeSet q(qs);
    const Interval window{-50, 49};  // 100 x 100 = 10^4 pairs
    try {
      const ContinuityCertificate cert = floor_div_continuity_check(q, p, ContinuitySampling{window, 0, 96, 1});
      if (cert.violations != 0) c.fail("certificate reports violations");
    } catch (const std::exception& e) {
      c.fail(e.what());
    }
    // The same divisibility, recomputed here.
    for (std::int64_t x = window.lo; x <= window.hi; ++x) {
      for (std::int64_t y = window.lo; y <= window.hi; ++y) {
        if (x == y || oracles::mod(x - y, p) != 0) continue;
        std::int64_t d = x - y < 0 ? y - x : x - y;
        std::int64_t pn = 1;
        d /= p;
        while (d % p == 0) {
          d /= p;
          pn *= p;
        }
        std::int64_t m = 1;
        for (std::int64_t r : qs) {
          if (r == p) continue;
          while (d % r == 0) {
            d /= r;
            m *= r;
          }
        }
        ++congruent;
        if ((oracles::floor_div(x, p) - oracles::floor_div(y, p)) % (pn * m) != 0) {
          c.fail("divisibility fails at " + std::to_string(x) + ", " + std::to_string(y));
          return;
        }
      }
    }
  }
  if (c.ok) c.detail << "3 x 10^4 pairs (" << congruent << " congruent), 0 violations";
}

void profinite_spectra(Check& c) {
  const std::vector<std::int64_t> primes{2, 3, 5, 7};
  std::vector<std::vector<std::int64_t>> sets;
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<std::int64_t> q;
    for (int i = 0; i < 3; ++i) {
      if (mask & (1 << i)) q.push_back(std::vector<std::int64_t>{2, 3, 5}[static_cast<std::size_t>(i)]);
    }
    sets.push_back(q);
  }
  std::vector<SpectrumReport> reports;
  for (const auto& q : sets) {
    reports.push_back(spectrum_profinite(PrimeSet(q), primes));
    if (!reports.back().decided() || reports.back().invertible_primes() != q)
      c.fail("Q=" + join(q) + " spectrum " + join(reports.back().invertible_primes()));
  }
  int distinguished = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (std::size_t j = i + 1; j < reports.size(); ++j) {
      if (compare_spectra(reports[i], reports[j]).outcome == Comparison::distinguished) ++distinguished;
      else c.fail(join(sets[i]) + " vs " + join(sets[j]) + " not distinguished");
    }
  }
  if (c.ok) c.detail << "Sp = Q for 7 sets, " << distinguished << "/21 pairs DISTINGUISHED";
}

void inverse_sequence(Check& c) {
  const auto seq = qadic_inverse_sequence(PrimeSet({2}), 3, 30);
  BigInt max_abs = 0;
  for (unsigned n = 1; n <= 30; ++n) {
    const BigInt m = BigInt(1) << n;
    const BigInt& a = seq[n - 1];
    if (mod_floor(3 * a, m) != 1 % m) c.fail("3 a_" + std::to_string(n) + " != 1 mod 2^n");
    if (n < 30 && mod_floor(seq[n] - a, m) != 0) c.fail("a_" + std::to_string(n + 1) + " incoherent");
    if (abs(a) > max_abs) max_abs = abs(a);
  }
  if (max_abs <= (BigInt(1) << 20)) c.fail("max |a_n| = " + to_decimal(max_abs));
  if (c.ok) c.detail << "coherent to n = 30, max |a_n| = " << to_decimal(max_abs);
}

void appendix(Check& c) {
  const Interval w{0, std::int64_t{1} << 14};
  const PartitionCover cover = build_partition(Base(2), w);
  std::vector<int> hits(static_cast<std::size_t>(w.size()), 0);
  for (const auto& [n, members] : cover.blocks) {
    for (std::int64_t x : members) {
      if (!w.contains(x)) c.fail("member outside window");
      else ++hits[static_cast<std::size_t>(x - w.lo)];
      if (oracles::block_index(2, x) != n) c.fail("x=" + std::to_string(x) + " in wrong block");
    }
  }
  for (int h : hits) {
    if (h != 1) {
      c.fail("cover is not exact");
      break;
    }
  }

  const auto f = FiniteCoarseMap::tabulate({0, 255}, [](std::int64_t x) { return 2 * x; });
  const auto finv = FiniteCoarseMap::tabulate({0, 255}, [](std::int64_t x) { return oracles::floor_div(x, 2); });
  const RectifyReport r = rectify(f, finv, Base(2), Base(2));
  std::set<std::int64_t> image;
  WordLength worst = 0;
  for (std::int64_t x = 0; x <= 255; ++x) {
    const auto it = r.csb.h.find(x);
    if (it == r.csb.h.end() || !r.codomain.contains(it->second)) {
      c.fail("h undefined or outside codomain at " + std::to_string(x));
      continue;
    }
    image.insert(it->second);
    worst = std::max(worst, distance(Base(2), it->second, f(x)));
  }
  if (image.size() != 256 || r.csb.h.size() != 256) c.fail("h is not a bijection");
  if (worst > 4) c.fail("closeness " + std::to_string(worst) + " > 4");
  if (worst != r.audit.max_displacement) c.fail("audit disagrees with recomputation");
  if (c.ok)
    c.detail << "2^14 + 1 points in " << cover.blocks.size() << " blocks; h bijective on [0,255], closeness " << worst
             << " <= 4";
}

void defect(Check& c) {
  const auto table = WindowTable::tabulate({-500, 500}, [](std::int64_t x) { return BigInt(oracles::floor_div(x, 2)); });
  const DefectResult r = quasimorphism_defect(table, Base(2));
  if (r.defect != 1) c.fail("defect " + std::to_string(r.defect));
  if (c.ok) c.detail << "defect 1 over " << r.pairs_checked << " pairs";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"length formula matches search oracle", length_formula},
      {"unique special representation", uniqueness},
      {"congruence stability of digits", congruence_stability},
      {"floor(-/g) is a contraction", contraction},
      {"word-metric spectra", word_metric_spectra},
      {"g=2 vs g=3 and g=6 vs g=12", desk_comparison},
      {"profinite continuity", profinite_continuity},
      {"profinite spectra and separation", profinite_spectra},
      {"inverse-sequence coherence", inverse_sequence},
      {"partition and CSB rectification", appendix},
      {"quasimorphism defect of floor(-/2)", defect},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!c.ok) ++failed;
    std::cout << "criterion " << (i + 1) << " [" << criteria[i].first << "]: " << (c.ok ? "PASS" : "FAIL") << " - "
              << c.detail.str() << " (" << secs << " s)" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
