#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "zcoarse/errors.hpp"
#include "zcoarse/rectify.hpp"

using namespace zcoarse;

TEST_SUITE("rectify") {
  TEST_CASE("block index matches direct search") {
    for (std::int64_t g : {2, 3, 5}) {
      for (std::int64_t x = -500; x <= 500; ++x) REQUIRE(block_index(Base(g), x) == oracles::block_index(g, x));
    }
  }

  TEST_CASE("small partitions") {
    const PartitionCover two = build_partition(Base(2), {0, 20});
    CHECK(two.blocks.at(0) == std::vector<std::int64_t>{1, 2, 4, 8, 16});
    CHECK(two.blocks.at(1) == std::vector<std::int64_t>{0, 3, 5, 9, 17});
    const PartitionCover three = build_partition(Base(3), {0, 30});
    CHECK(three.blocks.at(0) == std::vector<std::int64_t>{1, 3, 9, 27});
  }

  TEST_CASE("greedy injection stays in the block of f") {
    const auto f = FiniteCoarseMap::tabulate({0, 63}, [](std::int64_t x) { return 2 * x; });
    const PartitionCover cover = build_partition(Base(2), {-200, 300});
    const Table g = greedy_injection(f, cover);
    std::set<std::int64_t> seen;
    for (const auto& [x, y] : g) {
      CHECK(block_index(Base(2), y) == block_index(Base(2), f(x)));
      CHECK(seen.insert(y).second);
    }
    CHECK(g.size() == 64);
    CHECK_THROWS_AS(greedy_injection(f, build_partition(Base(2), {0, 63})), WindowTooSmall);
  }

  TEST_CASE("CSB on explicit injections") {
    // A = B = [0, 4]; g_fwd = x + 1 (partial), g_bwd = identity.
    const Table fwd{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    const Table bwd{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}};
    const CsbResult r = csb_bijection({0, 4}, {0, 4}, fwd, bwd);
    std::set<std::int64_t> image;
    for (const auto& [a, b] : r.h) image.insert(b);
    CHECK(r.h.size() == 5);
    CHECK(image.size() == 5);
    CHECK(r.from_forward + r.from_backward + r.fallback == 5);
    CHECK_THROWS_AS(csb_bijection({0, 4}, {0, 3}, fwd, bwd), PreconditionError);
    CHECK_THROWS_AS(csb_bijection({0, 1}, {0, 1}, Table{{0, 1}, {1, 1}}, Table{}), PreconditionError);
  }

  TEST_CASE("rectifying multiplication by two") {
    const auto f = FiniteCoarseMap::tabulate({0, 255}, [](std::int64_t x) { return 2 * x; });
    const auto finv = FiniteCoarseMap::tabulate({0, 255}, [](std::int64_t x) { return oracles::floor_div(x, 2); });
    const RectifyReport r = rectify(f, finv, Base(2), Base(2));
    std::set<std::int64_t> image;
    for (const auto& [a, b] : r.csb.h) {
      CHECK(r.codomain.contains(b));
      image.insert(b);
    }
    CHECK(image.size() == 256);
    WordLength worst = 0;
    for (std::int64_t x = 0; x <= 255; ++x) worst = std::max(worst, distance(Base(2), r.csb.h.at(x), f(x)));
    CHECK(worst == r.audit.max_displacement);
    CHECK(worst <= 4);
  }
}
