#include "doctest.h"
#include "zcoarse/errors.hpp"
#include "zcoarse/spectra.hpp"

using namespace zcoarse;

namespace {

ClassifyParams quick() {
  ClassifyParams p;
  p.sampling.exhaustive = {-60, 60};
  p.sampling.random_pairs = 300;
  return p;
}

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("power map") {
    CHECK(mu_apply(3, -7) == -21);
    CHECK(mu_apply(0, 5) == 0);
  }

  TEST_CASE("contraction certificates") {
    const PairSampling s{{-80, 80}, 500, 128, 3};
    for (std::int64_t g : {2, 3, 4, 6, 10}) {
      const ContractionCertificate c = contraction_certificate(Base(g), s);
      CHECK(c.violations == 0);
      CHECK(c.pairs_checked >= 161 * 161);
    }
    const ContractionCertificate c = contraction_certificate(Base(6), s, 2);
    CHECK(c.violations == 0);
    CHECK_THROWS_AS(contraction_certificate(Base(6), s, 5), PreconditionError);
  }

  TEST_CASE("classification by divisibility") {
    for (std::int64_t g : {2, 3, 6, 12}) {
      for (std::int64_t p : {2, 3, 5, 7}) {
        const PrimeVerdict v = classify_prime(Base(g), p, quick());
        INFO("g=" << g << " p=" << p);
        CHECK(v.verdict == (g % p == 0 ? Verdict::invertible : Verdict::not_invertible));
        CHECK(v.evidence.kind ==
              (g % p == 0 ? EvidenceKind::contraction_certificate : EvidenceKind::divergence_witness));
      }
    }
  }

  TEST_CASE("a short witness budget leaves the verdict open") {
    ClassifyParams p = quick();
    p.i_max = 5;
    CHECK(classify_prime(Base(2), 3, p).verdict == Verdict::undecided);
    CHECK_THROWS_AS(classify_prime(Base(2), 4, p), PreconditionError);
  }

  TEST_CASE("derived sets") {
    const SpectrumReport r = spectrum(Base(6), {2, 3, 5}, quick());
    CHECK(r.invertible_primes() == std::vector<std::int64_t>{2, 3});
    CHECK(r.sp_natural == std::vector<std::int64_t>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18});
    CHECK(r.sp_rational_generators == std::vector<std::int64_t>{2, 3});
    CHECK(r.unclassified == std::vector<std::int64_t>{7, 11, 13, 14, 17, 19});
    CHECK(r.verdict_for(-12) == Verdict::invertible);
    CHECK(r.verdict_for(10) == Verdict::not_invertible);
    CHECK(r.verdict_for(0) == Verdict::not_invertible);
    CHECK(r.verdict_for(-1) == Verdict::invertible);
    CHECK(r.verdict_for(7) == Verdict::undecided);
    CHECK(r.decided());
  }

  TEST_CASE("comparisons") {
    const auto s2 = spectrum(Base(2), {2, 3, 5}, quick());
    const auto s3 = spectrum(Base(3), {2, 3, 5}, quick());
    const auto s4 = spectrum(Base(4), {2, 3, 5}, quick());
    const ComparisonReport d = compare_spectra(s2, s3);
    CHECK(d.outcome == Comparison::distinguished);
    CHECK(d.differing_primes == std::vector<std::int64_t>{2, 3});
    CHECK(compare_spectra(s2, s4).outcome == Comparison::not_distinguished);
    CHECK(to_string(Verdict::not_invertible) == "NOT_INVERTIBLE");
  }
}
