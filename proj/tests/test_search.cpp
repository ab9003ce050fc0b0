#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gyro/search.hpp"
#include "gyro/topology.hpp"
#include "helpers.hpp"

using gyro::count_topologies;
using gyro::enumerate_topologies;
using gyro::search_counterexample;
using gyro::SearchOptions;

TEST_CASE("labeled topology counts") {
  CHECK(count_topologies(1) == 1);
  CHECK(count_topologies(2) == 4);
  CHECK(count_topologies(3) == 29);
  CHECK(count_topologies(4) == 355);
  CHECK(count_topologies(5) == 6942);
}

TEST_CASE("every enumerated assignment is a valid minimal-neighborhood family") {
  const std::uint64_t n = enumerate_topologies(
      3, [](const std::vector<std::uint64_t>& mins) {
        gyro::FiniteTopology::from_min_nbhds(3, mins);  // throws when invalid
        for (int x = 0; x < 3; ++x) {
          REQUIRE((mins[x] >> x & 1) == 1);
          for (int y = 0; y < 3; ++y)
            if (mins[x] >> y & 1) REQUIRE((mins[y] & ~mins[x]) == 0);
        }
        return true;
      });
  CHECK(n == 29);
}

TEST_CASE("enumeration covers the extremes and stops on demand") {
  bool saw_discrete = false;
  bool saw_indiscrete = false;
  enumerate_topologies(3, [&](const std::vector<std::uint64_t>& mins) {
    bool discrete = true, indiscrete = true;
    for (int x = 0; x < 3; ++x) {
      if (mins[x] != (1ULL << x)) discrete = false;
      if (mins[x] != 0b111) indiscrete = false;
    }
    saw_discrete = saw_discrete || discrete;
    saw_indiscrete = saw_indiscrete || indiscrete;
    return true;
  });
  CHECK(saw_discrete);
  CHECK(saw_indiscrete);

  std::uint64_t seen = 0;
  const std::uint64_t produced =
      enumerate_topologies(4, [&](const std::vector<std::uint64_t>&) {
        return ++seen < 5;
      });
  CHECK(produced == 5);

  CHECK_THROWS_AS(enumerate_topologies(0, [](const auto&) { return true; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_topologies(17, [](const auto&) { return true; }),
                  std::invalid_argument);
}

TEST_CASE("the hausdorff question has no small counterexample") {
  SearchOptions opt;
  opt.max_order = 3;
  const auto rep = search_counterexample("question-3.3", opt);
  CHECK(rep.target == "question-3.3");
  CHECK_FALSE(rep.counterexample.has_value());
  CHECK_FALSE(rep.truncated);
  CHECK(rep.tables_complete);
  CHECK(rep.tables_examined == 3);
  CHECK(rep.pairs_examined == 34);  // 1 + 4 + 29 labeled topologies
  CHECK(rep.statement ==
        "no counterexample: exhausted all tables up to isomorphism at orders "
        "1..3 against all labeled topologies (34 pairs over 3 tables)");
}

TEST_CASE("the strong non-gyrocommutative question skips gyrocommutative tables") {
  SearchOptions opt;
  opt.max_order = 3;
  const auto rep = search_counterexample("question-3.18", opt);
  CHECK_FALSE(rep.counterexample.has_value());
  CHECK_FALSE(rep.truncated);
  CHECK(rep.tables_examined == 3);
  CHECK(rep.pairs_examined == 0);  // every table through order 3 is gyrocommutative
  CHECK(rep.statement ==
        "no counterexample: exhausted all tables up to isomorphism at orders "
        "1..3 against all labeled topologies (0 pairs over 3 tables); "
        "gyrocommutative tables cannot qualify and were not paired");
}

TEST_CASE("orders 1..4 stay clean for both questions") {
  for (const char* target : {"question-3.3", "question-3.18"}) {
    CAPTURE(target);
    SearchOptions opt;
    opt.max_order = 4;
    opt.budget = 2000;
    const auto rep = search_counterexample(target, opt);
    CHECK_FALSE(rep.counterexample.has_value());
    CHECK_FALSE(rep.truncated);
    CHECK(rep.tables_complete);
  }
}

TEST_CASE("budget truncation is reported honestly") {
  SearchOptions opt;
  opt.max_order = 3;
  opt.budget = 5;
  const auto rep = search_counterexample("question-3.3", opt);
  CHECK(rep.truncated);
  CHECK_FALSE(rep.counterexample.has_value());
  CHECK(rep.pairs_examined == 5);
  CHECK(rep.statement ==
        "no counterexample within budget; coverage of orders 1..3 is partial "
        "(5 pairs examined)");
}

TEST_CASE("search input validation") {
  CHECK_THROWS_AS(search_counterexample("question-9.9", {}), std::invalid_argument);
  SearchOptions bad_order;
  bad_order.max_order = 0;
  CHECK_THROWS_AS(search_counterexample("question-3.3", bad_order),
                  std::invalid_argument);
  SearchOptions bad_budget;
  bad_budget.budget = 0;
  CHECK_THROWS_AS(search_counterexample("question-3.3", bad_budget),
                  std::invalid_argument);
}

TEST_CASE("reports record the options they ran under") {
  SearchOptions opt;
  opt.max_order = 2;
  opt.budget = 77;
  opt.seed = 9;
  const auto rep = search_counterexample("question-3.3", opt);
  CHECK(rep.max_order == 2);
  CHECK(rep.budget == 77);
  CHECK(rep.seed == 9);
  CHECK(rep.pairs_examined == 5);  // 1 + 4
}
