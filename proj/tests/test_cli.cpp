#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "zcoarse/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "zcoarse");
  std::ostringstream out, err;
  const int code = zcoarse::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("rep as csv") {
    const Run r = invoke({"rep", "--g", "2", "--k", "3,-7", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "k,digits,length\n3,-1 0 1,2\n-7,1 0 0 -1,2\n");
  }

  TEST_CASE("dist json envelope") {
    const Run r = invoke({"dist", "--g", "2", "--k", "15,0"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    for (const char* key : {"command", "config", "results", "evidence", "version", "duration_ms"}) CHECK(j.contains(key));
    CHECK(j["results"]["items"][0]["distance"] == "2");
  }

  TEST_CASE("output is deterministic apart from timing") {
    auto strip = [](const std::string& text) {
      json j = json::parse(text);
      j.erase("duration_ms");
      return j.dump();
    };
    const std::vector<std::string> args{"spectrum", "--g", "6", "--primes", "2,5", "--window", "-40:40"};
    CHECK(strip(invoke(args).out) == strip(invoke(args).out));
  }

  TEST_CASE("spectrum verdicts and evidence") {
    const Run r = invoke({"spectrum", "--g", "10", "--primes", "2,3,5", "--window", "-40:40"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["results"]["sp"] == json::array({"2", "5"}));
    CHECK(j["evidence"].size() == 3);
  }

  TEST_CASE("undecided exits with 2") {
    CHECK(invoke({"spectrum", "--g", "2", "--primes", "3", "--imax", "4", "--window", "-10:10"}).code == 2);
  }

  TEST_CASE("precondition failures exit with 1") {
    CHECK(invoke({"rep", "--g", "1", "--k", "3"}).code == 1);
    CHECK(invoke({"inverse-seq", "--Q", "2", "--primes", "2"}).code == 1);
    CHECK(invoke({"rep", "--g", "2", "--k", "abc"}).code == 1);
    CHECK(invoke({"nonsense"}).code == 1);
    CHECK(invoke({"spectrum", "--g", "2", "--primes", "3", "--format", "csv"}).code == 1);
  }

  TEST_CASE("profinite commands") {
    const Run seq = invoke({"inverse-seq", "--Q", "2", "--primes", "3", "--precision", "6"});
    REQUIRE(seq.code == 0);
    CHECK(json::parse(seq.out)["results"]["sequence"] == json::array({"1", "3", "3", "11", "11", "43"}));
    const Run cmp = invoke({"compare", "--Q", "2", "--Q", "3", "--primes", "2,3,5"});
    REQUIRE(cmp.code == 0);
    CHECK(json::parse(cmp.out)["results"]["outcome"] == "DISTINGUISHED");
  }

  TEST_CASE("text format") {
    const Run r = invoke({"len", "--g", "3", "--k", "5", "--format", "text"});
    CHECK(r.out.find("results.items[0].length: 3") != std::string::npos);
  }
}
