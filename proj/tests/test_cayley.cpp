#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "gyro/cayley.hpp"

namespace {

std::vector<std::vector<int>> cyclic(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  return rows;
}

}  // namespace

TEST_CASE("cyclic tables validate with trivial gyrations") {
  gyro::ValidationOutcome out = gyro::validate_table(cyclic(4));
  REQUIRE(out.ok());
  const gyro::FiniteGyrogroup& g = *out.group;
  CHECK(g.order() == 4);
  CHECK(g.identity() == 0);
  CHECK(g.neg(1) == 3);
  CHECK(g.neg(2) == 2);
  CHECK(g.is_associative());
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) CHECK(g.gyr(a, b, c) == c);
  CHECK(g.labels() == std::vector<std::string>{"0", "1", "2", "3"});
  CHECK(g.table_rows() == cyclic(4));
}

TEST_CASE("identity violations are caught with a witness") {
  gyro::ValidationOutcome out = gyro::validate_table({{1, 0}, {0, 1}});
  REQUIRE(!out.ok());
  CHECK(out.failure->stage == "identity");
  CHECK(out.failure->witness == std::vector<int>{0});
}

TEST_CASE("missing two-sided inverse is caught") {
  gyro::ValidationOutcome out =
      gyro::validate_table({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}});
  REQUIRE(!out.ok());
  CHECK(out.failure->stage == "inverse");
  CHECK(out.failure->witness == std::vector<int>{1});
}

TEST_CASE("left cancellation failures are caught") {
  gyro::ValidationOutcome out =
      gyro::validate_table({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});
  REQUIRE(!out.ok());
  CHECK(out.failure->stage == "left-cancellation");
  CHECK(out.failure->witness == std::vector<int>{1, 1, 2});
}

TEST_CASE("gyrations that break the automorphism law are caught") {
  gyro::ValidationOutcome out = gyro::validate_table({{0, 1, 2, 3, 4},
                                                      {1, 0, 2, 3, 4},
                                                      {2, 1, 0, 3, 4},
                                                      {3, 1, 2, 0, 4},
                                                      {4, 1, 3, 2, 0}});
  REQUIRE(!out.ok());
  CHECK(out.failure->stage == "G3");
  CHECK(out.failure->witness == std::vector<int>{1, 2, 4, 1});
}

TEST_CASE("left loop violations are caught") {
  gyro::ValidationOutcome out = gyro::validate_table({{0, 1, 2, 3, 4},
                                                      {1, 0, 2, 3, 4},
                                                      {2, 1, 0, 3, 4},
                                                      {3, 1, 2, 0, 4},
                                                      {4, 1, 2, 3, 0}});
  REQUIRE(!out.ok());
  CHECK(out.failure->stage == "G4");
  CHECK(out.failure->witness == std::vector<int>{1, 2, 1});
}

TEST_CASE("malformed tables are refused outright") {
  CHECK_THROWS_AS(gyro::validate_table({}), std::invalid_argument);
  CHECK_THROWS_AS(gyro::validate_table({{0, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(gyro::validate_table({{0, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(gyro::validate_table({{0, -1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(gyro::validate_table(cyclic(2), {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(gyro::validate_table(cyclic(2), {"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(gyro::validate_table(std::vector<std::vector<int>>(
                      65, std::vector<int>(65, 0))),
                  std::invalid_argument);
}

TEST_CASE("subset arithmetic follows the table") {
  gyro::FiniteGyrogroup g = *gyro::validate_table(cyclic(4)).group;
  CHECK(g.full_mask() == 0b1111);
  CHECK(g.add_sets(0b0011, 0b0001) == 0b0011);
  CHECK(g.add_sets(0b0011, 0b0010) == 0b0110);
  CHECK(g.left_translate(1, 0b0101) == 0b1010);
  CHECK(g.right_translate(0b0101, 1) == 0b1010);
  CHECK(g.neg_set(0b0010) == 0b1000);
  CHECK(g.neg_set(0b0101) == 0b0101);
  CHECK(g.gyr_image(1, 2, 0b1011) == 0b1011);
}

TEST_CASE("custom labels are preserved") {
  gyro::FiniteGyrogroup g = *gyro::validate_table(cyclic(2), {"e", "g"}).group;
  CHECK(g.labels() == std::vector<std::string>{"e", "g"});
}
