#include <numeric>

#include "doctest.h"
#include "support/oracles.hpp"
#include "zcoarse/errors.hpp"
#include "zcoarse/oracle.hpp"

using namespace zcoarse;

TEST_SUITE("oracle") {
  TEST_CASE("geometric generators") {
    const auto s = GeneratorSet::geometric(Base(3));
    CHECK(s.truncate(30) == std::vector<std::int64_t>{1, 3, 9, 27});
    CHECK(s.default_cap(5) == 81);  // D = 2
    CHECK(s.default_cap(0) == 9);
  }

  TEST_CASE("Q* generators") {
    const auto s = GeneratorSet::q_star({2, 3}, 20);
    CHECK(s.truncate(20) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18});
    CHECK(GeneratorSet::q_star({5}, 30).truncate(30) == std::vector<std::int64_t>{1, 5, 25});
    CHECK_THROWS_AS(GeneratorSet::q_star({4}, 10), PreconditionError);
  }

  TEST_CASE("witness sums to the target and has the reported length") {
    const auto s = GeneratorSet::geometric(Base(2));
    for (std::int64_t k : {0, 1, -1, 3, 15, 21, -77, 1000}) {
      const OracleResult r = oracle_length(s, k, 30);
      REQUIRE_FALSE(r.inconclusive());
      CHECK(std::accumulate(r.witness.begin(), r.witness.end(), std::int64_t{0}) == k);
      CHECK(r.witness.size() == *r.length);
    }
    CHECK(*oracle_length(s, 15, 10).length == 2);
    CHECK(*oracle_length(GeneratorSet::geometric(Base(3)), 5, 10).length == 3);
  }

  TEST_CASE("oracle matches breadth-first search for explicit generators") {
    const std::vector<std::int64_t> gens{1, 7, 19};
    GeodesicSearch search(gens);
    // BFS over the same generators on a wide interval.
    const std::int64_t radius = 4000;
    std::vector<int> dist(2 * radius + 1, -1);
    std::vector<std::int64_t> queue{0};
    dist[radius] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::int64_t s : gens) {
        for (std::int64_t w : {queue[i] + s, queue[i] - s}) {
          if (w < -radius || w > radius || dist[w + radius] >= 0) continue;
          dist[w + radius] = dist[queue[i] + radius] + 1;
          queue.push_back(w);
        }
      }
    }
    for (std::int64_t k = -300; k <= 300; ++k) {
      const OracleResult r = search.shortest(k, 40);
      REQUIRE_FALSE(r.inconclusive());
      REQUIRE(*r.length == static_cast<WordLength>(dist[k + radius]));
    }
  }

  TEST_CASE("term limit yields INCONCLUSIVE") {
    const OracleResult r = oracle_length(GeneratorSet::geometric(Base(2)), 0b1010101010101, 3);
    CHECK(r.inconclusive());
  }

  TEST_CASE("small cap warns") {
    const OracleResult r = oracle_length(GeneratorSet::geometric(Base(2)), 100, 40, 4);
    CHECK_FALSE(r.warnings.empty());
    REQUIRE_FALSE(r.inconclusive());
    CHECK(*r.length >= 3);
  }

  TEST_CASE("formula validation on a window") {
    for (std::int64_t g : {2, 3, 4, 5, 6, 10}) {
      const FormulaReport rep = validate_formula(Base(g), {-300, 300});
      CHECK(rep.all_match());
      CHECK(rep.matches == 601);
    }
  }
}
