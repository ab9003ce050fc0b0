#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gyro/topology.hpp"
#include "helpers.hpp"

using gyro::check_separation;
using gyro::FiniteTopology;

TEST_CASE("from_opens accepts real topologies") {
  const auto t = FiniteTopology::from_opens(2, {0b00, 0b01, 0b11});
  CHECK(t.order() == 2);
  CHECK(t.opens() == std::vector<std::uint64_t>{0b00, 0b01, 0b11});
  CHECK(t.min_nbhd(0) == 0b01);
  CHECK(t.min_nbhd(1) == 0b11);
  CHECK(t.is_open(0b01));
  CHECK_FALSE(t.is_open(0b10));

  // Duplicates collapse; order of the input family does not matter.
  const auto dup = FiniteTopology::from_opens(2, {0b11, 0b00, 0b11, 0b01});
  CHECK(dup.opens() == t.opens());
}

TEST_CASE("from_opens rejects non-topologies") {
  CHECK_THROWS_WITH_AS(FiniteTopology::from_opens(2, {0b01, 0b11}),
                       "FiniteTopology: empty set missing", std::invalid_argument);
  CHECK_THROWS_WITH_AS(FiniteTopology::from_opens(2, {0b00, 0b01}),
                       "FiniteTopology: full set missing", std::invalid_argument);
  CHECK_THROWS_WITH_AS(FiniteTopology::from_opens(3, {0b000, 0b001, 0b010, 0b111}),
                       "FiniteTopology: family not closed under union",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(FiniteTopology::from_opens(2, {0b00, 0b100, 0b11}),
                       "FiniteTopology: open set has out-of-range points",
                       std::invalid_argument);
  CHECK_THROWS_AS(FiniteTopology::from_opens(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteTopology::from_opens(21, {}), std::invalid_argument);
}

TEST_CASE("intersection violations are caught") {
  // {0,1} and {1,2} are present but their intersection {1} is not, and all
  // unions already lie in the family.
  std::vector<std::uint64_t> fam = {0b000, 0b011, 0b110, 0b111};
  CHECK_THROWS_WITH_AS(FiniteTopology::from_opens(3, fam),
                       "FiniteTopology: family not closed under intersection",
                       std::invalid_argument);
}

TEST_CASE("factories") {
  const auto d = FiniteTopology::discrete(3);
  CHECK(d.opens().size() == 8);
  for (int x = 0; x < 3; ++x) CHECK(d.min_nbhd(x) == (1ULL << x));

  const auto i = FiniteTopology::indiscrete(3);
  CHECK(i.opens() == std::vector<std::uint64_t>{0b000, 0b111});
  for (int x = 0; x < 3; ++x) CHECK(i.min_nbhd(x) == 0b111);
}

TEST_CASE("from_min_nbhds builds the matching open family") {
  // Point 0 needs both points, point 1 is isolated.
  const auto t = FiniteTopology::from_min_nbhds(2, {0b11, 0b10});
  CHECK(t.opens() == std::vector<std::uint64_t>{0b00, 0b10, 0b11});
  CHECK(t.min_nbhd(0) == 0b11);
  CHECK(t.min_nbhd(1) == 0b10);

  CHECK_THROWS_WITH_AS(FiniteTopology::from_min_nbhds(2, {0b10, 0b01}),
                       "from_min_nbhds: x must lie in min_nbhd[x]",
                       std::invalid_argument);
  // 1 is near 0 but 1's own neighborhood spills outside 0's.
  CHECK_THROWS_WITH_AS(FiniteTopology::from_min_nbhds(3, {0b011, 0b110, 0b100}),
                       "from_min_nbhds: neighborhoods not transitive",
                       std::invalid_argument);
  CHECK_THROWS_AS(FiniteTopology::from_min_nbhds(2, {0b01}), std::invalid_argument);
}

TEST_CASE("closure on the two-point space with one open point") {
  const auto t = testutil::corpus_topology("sierpinski2");
  CHECK(t.opens() == std::vector<std::uint64_t>{0b00, 0b01, 0b11});
  CHECK(t.closure(0b01) == 0b11);  // the open point is dense
  CHECK(t.closure(0b10) == 0b10);  // the other point is closed
  CHECK(t.closure(0b00) == 0b00);
  CHECK(t.closure(0b11) == 0b11);
}

TEST_CASE("closure in the discrete and indiscrete extremes") {
  const auto d = FiniteTopology::discrete(4);
  CHECK(d.closure(0b0110) == 0b0110);
  const auto i = FiniteTopology::indiscrete(4);
  CHECK(i.closure(0b0010) == 0b1111);
  CHECK(i.closure(0) == 0);
}

TEST_CASE("separation flags on the discrete topology") {
  const auto rec = check_separation(FiniteTopology::discrete(3));
  CHECK(rec.t0);
  CHECK(rec.t1);
  CHECK(rec.hausdorff);
  CHECK(rec.regular);
  CHECK_FALSE(rec.t0_witness.has_value());
  CHECK_FALSE(rec.t1_witness.has_value());
  CHECK_FALSE(rec.hausdorff_witness.has_value());
  CHECK_FALSE(rec.regular_witness.has_value());
}

TEST_CASE("separation flags on the indiscrete topology") {
  const auto rec = check_separation(FiniteTopology::indiscrete(2));
  CHECK_FALSE(rec.t0);
  CHECK_FALSE(rec.t1);
  CHECK_FALSE(rec.hausdorff);
  CHECK(rec.regular);  // the only nonempty closed set is the whole space
  CHECK(rec.t0_witness == std::array<int, 2>{0, 1});
  CHECK(rec.t1_witness == std::array<int, 2>{0, 1});
  CHECK(rec.hausdorff_witness == std::array<int, 2>{0, 1});
}

TEST_CASE("separation flags on the two-point space with one open point") {
  const auto rec = check_separation(testutil::corpus_topology("sierpinski2"));
  CHECK(rec.t0);
  CHECK_FALSE(rec.t1);
  CHECK(rec.t1_witness == std::array<int, 2>{1, 0});
  CHECK_FALSE(rec.hausdorff);
  CHECK(rec.hausdorff_witness == std::array<int, 2>{0, 1});
  CHECK_FALSE(rec.regular);
  REQUIRE(rec.regular_witness.has_value());
  CHECK(rec.regular_witness->first == 0);
  CHECK(rec.regular_witness->second == 0b10);
}

TEST_CASE("on finite spaces T1 coincides with discreteness") {
  // Scan a few corpus topologies: t1 holds exactly when every minimal
  // neighborhood is a singleton.
  for (const char* stem : {"discrete2", "discrete4", "indiscrete4",
                           "sierpinski2", "open01_3", "open02_4",
                           "cosets02_4", "s3_left_cosets_es"}) {
    CAPTURE(stem);
    const auto t = testutil::corpus_topology(stem);
    bool all_singletons = true;
    for (int x = 0; x < t.order(); ++x)
      if (t.min_nbhd(x) != (1ULL << x)) all_singletons = false;
    const auto rec = check_separation(t);
    CHECK(rec.t1 == all_singletons);
    CHECK(rec.hausdorff == all_singletons);
    if (!rec.t0) CHECK_FALSE(rec.t1);
  }
}
