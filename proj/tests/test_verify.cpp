#include "doctest.h"

#include <algorithm>

#include "bibdopt/errors.hpp"
#include "bibdopt/verify.hpp"

using namespace bibdopt;

namespace {

VerifyOptions range(int lo, int hi) {
  VerifyOptions o;
  o.v_min = lo;
  o.v_max = hi;
  return o;
}

}  // namespace

TEST_CASE("suite names") {
  const auto& names = suite_names();
  CHECK(names.size() == 10);
  CHECK(names.front() == "oracle");
  CHECK(std::find(names.begin(), names.end(), "s3-lemma") != names.end());
  CHECK_THROWS_AS(run_suite("nope"), ValidationError);
}

TEST_CASE("small suite runs pass") {
  for (const auto& [name, options] :
       std::vector<std::pair<std::string, VerifyOptions>>{{"oracle", range(1, 5)},
                                                          {"path-prop", range(4, 6)},
                                                          {"cycle-prop", range(5, 7)},
                                                          {"power-sums", range(3, 6)},
                                                          {"eigen-bound", range(4, 5)}}) {
    const auto reports = run_suite(name, options);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].suite == name);
    CHECK(reports[0].ok());
    CHECK(reports[0].passed() == reports[0].checks.size());
    CHECK(reports[0].passed() > 0);
  }
}

TEST_CASE("cycle-prop reports the level-zero A winner") {
  VerifyOptions o = range(9, 9);
  o.ys = std::vector<unsigned long>{0};
  o.criterion = Criterion::A;
  const auto reports = run_suite("cycle-prop", o);
  REQUIRE(reports.size() == 1);
  REQUIRE(reports[0].checks.size() == 1);
  const auto& check = reports[0].checks[0];
  CHECK(check.status == CheckStatus::pass);
  CHECK(check.witness["winner_is_cycle"] == false);
}

TEST_CASE("s3-lemma witness margin") {
  const auto reports = run_suite("s3-lemma");
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].ok());
  bool found = false;
  for (const auto& c : reports[0].checks)
    if (c.witness.contains("margin")) {
      found = true;
      CHECK(c.witness["margin"] == "4");
    }
  CHECK(found);
}

TEST_CASE("report json") {
  const auto reports = run_suite("power-sums", range(3, 4));
  const auto j = to_json(reports[0]);
  CHECK(j["suite"] == "power-sums");
  CHECK(j["counts"]["pass"] == reports[0].passed());
  CHECK(j["counts"]["fail"] == 0);
  CHECK(j["checks"].size() == reports[0].checks.size());
  CHECK(j.dump() == to_json(run_suite("power-sums", range(3, 4))[0]).dump());
}

TEST_CASE("suite caps") {
  VerifyOptions o = range(4, 8);
  o.limits.graph_enumeration_max_vertices = 5;
  CHECK_THROWS_AS(run_suite("oracle", o), ScaleCapError);
}
