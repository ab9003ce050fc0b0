#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gyro/cayley.hpp"
#include "gyro/einstein.hpp"
#include "gyro/laws.hpp"
#include "helpers.hpp"

using gyro::LawId;
using gyro::LawStatus;
using gyro::LawSuiteMode;
using gyro::LawSuiteOptions;
using gyro::run_law_suite;

namespace {

// Subtraction mod 4: 0 is only a right identity, so G1 fails on the left.
struct SubtractionBackend {
  using element_type = int;
  int add(int a, int b) const { return ((a - b) % 4 + 4) % 4; }
  int neg(int a) const { return a; }
  int identity() const { return 0; }
  bool eq(int a, int b) const { return a == b; }
  int order() const { return 4; }
  int element(int i) const { return i; }
  int sample(std::mt19937_64& rng) const { return static_cast<int>(rng() % 4); }
};

const std::vector<std::string> kLawNames = {
    "G1",     "G2",     "G3",      "G4",      "T1.3-1",  "T1.3-2", "T1.3-3",
    "T1.3-4", "T1.3-5", "T1.3-6",  "T1.3-7",  "T1.3-8",  "T1.3-9", "T1.3-10",
    "T1.3-11", "T1.3-12", "gyrocommutative", "GC-1", "GC-2", "GC-3"};

}  // namespace

TEST_CASE("law ids and arities") {
  REQUIRE(gyro::all_laws.size() == 20);
  for (std::size_t i = 0; i < gyro::all_laws.size(); ++i)
    CHECK(gyro::law_name(gyro::all_laws[i]) == kLawNames[i]);
  CHECK(gyro::law_arity(LawId::g1) == 1);
  CHECK(gyro::law_arity(LawId::g2) == 1);
  CHECK(gyro::law_arity(LawId::g3) == 4);
  CHECK(gyro::law_arity(LawId::g4) == 3);
  CHECK(gyro::law_arity(LawId::t1) == 3);
  CHECK(gyro::law_arity(LawId::t3) == 2);
  CHECK(gyro::law_arity(LawId::t6) == 3);
  CHECK(gyro::law_arity(LawId::t12) == 2);
  CHECK(gyro::law_arity(LawId::gyrocommutative) == 2);
  CHECK(gyro::law_arity(LawId::gc3) == 2);
  CHECK(gyro::law_requires_gyrocommutative(LawId::gc1));
  CHECK(gyro::law_requires_gyrocommutative(LawId::gc2));
  CHECK(gyro::law_requires_gyrocommutative(LawId::gc3));
  CHECK_FALSE(gyro::law_requires_gyrocommutative(LawId::gyrocommutative));
}

TEST_CASE("exhaustive suite on the cyclic group of order 4") {
  const gyro::FiniteGyrogroup g = testutil::checked(testutil::cyclic_rows(4));
  const auto suite = run_law_suite(g, {});
  REQUIRE(suite.reports.size() == 20);
  CHECK(suite.mode == LawSuiteMode::exhaustive);
  CHECK(suite.all_pass());
  for (const auto& rep : suite.reports) {
    CHECK(rep.status == LawStatus::pass);
    CHECK(rep.witness.empty());
    std::uint64_t expect = 1;
    for (int k = 0; k < gyro::law_arity(rep.id); ++k) expect *= 4;
    CHECK(rep.samples_checked == expect);
  }
}

TEST_CASE("non-gyrocommutative carriers skip the gyrocommutative block") {
  const gyro::FiniteGyrogroup s3 = testutil::corpus_table("s3");
  const auto suite = run_law_suite(s3, {});
  CHECK(suite.all_pass());

  const auto* gc = suite.find(LawId::gyrocommutative);
  REQUIRE(gc != nullptr);
  CHECK(gc->status == LawStatus::skipped);
  CHECK(gc->note == "carrier is not gyrocommutative");
  CHECK_FALSE(gc->witness.empty());  // the falsifying pair is kept as data

  for (LawId id : {LawId::gc1, LawId::gc2, LawId::gc3}) {
    const auto* rep = suite.find(id);
    REQUIRE(rep != nullptr);
    CHECK(rep->status == LawStatus::skipped);
    CHECK(rep->note == "requires a gyrocommutative carrier");
    CHECK(rep->witness.empty());
    CHECK(rep->samples_checked == 0);
  }

  for (LawId id : {LawId::g1, LawId::g2, LawId::g3, LawId::g4, LawId::t1,
                   LawId::t7, LawId::t12}) {
    const auto* rep = suite.find(id);
    REQUIRE(rep != nullptr);
    CHECK(rep->status == LawStatus::pass);
  }
}

TEST_CASE("exhaustive suite across the bundled corpus") {
  const std::vector<std::string> tables = {
      "z2", "z3", "z4", "z5", "z6", "z8", "k4", "s3",
      "nongroup8", "nongroup8_b", "nongroup8_c", "nongroup8_d",
      "nongroup8_e", "nongroup8_f"};
  const std::vector<std::string> gyrocommutative = {
      "z2", "z3", "z4", "z5", "z6", "z8", "k4",
      "nongroup8_b", "nongroup8_c", "nongroup8_e"};
  for (const auto& stem : tables) {
    CAPTURE(stem);
    const gyro::FiniteGyrogroup g = testutil::corpus_table(stem);
    const auto suite = run_law_suite(g, {});
    CHECK(suite.all_pass());
    const bool expect_gc =
        std::find(gyrocommutative.begin(), gyrocommutative.end(), stem) !=
        gyrocommutative.end();
    const auto* gc = suite.find(LawId::gyrocommutative);
    REQUIRE(gc != nullptr);
    CHECK((gc->status == LawStatus::pass) == expect_gc);
  }
}

TEST_CASE("the discovered tables are genuinely non-associative") {
  for (const std::string stem :
       {"nongroup8", "nongroup8_b", "nongroup8_c", "nongroup8_d",
        "nongroup8_e", "nongroup8_f"}) {
    CAPTURE(stem);
    const gyro::FiniteGyrogroup g = testutil::corpus_table(stem);
    CHECK(g.order() == 8);
    CHECK_FALSE(g.is_associative());
  }
  for (const std::string stem : {"z8", "s3", "k4"}) {
    CAPTURE(stem);
    CHECK(testutil::corpus_table(stem).is_associative());
  }
}

TEST_CASE("a failing law is reported with its first witness") {
  const SubtractionBackend b;
  const auto suite = run_law_suite(b, {});
  CHECK_FALSE(suite.all_pass());
  const auto* g1 = suite.find(LawId::g1);
  REQUIRE(g1 != nullptr);
  CHECK(g1->status == LawStatus::fail);
  CHECK(g1->witness == std::vector<int>{1});  // 0+1 = 3 under subtraction
  CHECK(g1->samples_checked == 2);
}

TEST_CASE("sampled mode is deterministic in the seed") {
  const gyro::FiniteGyrogroup g = testutil::corpus_table("nongroup8");
  LawSuiteOptions opt;
  opt.mode = LawSuiteMode::sampled;
  opt.samples = 200;
  opt.seed = 11;
  const auto a = run_law_suite(g, opt);
  const auto b = run_law_suite(g, opt);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].status == b.reports[i].status);
    CHECK(a.reports[i].witness == b.reports[i].witness);
    CHECK(a.reports[i].samples_checked == b.reports[i].samples_checked);
  }
  CHECK(a.all_pass());
}

TEST_CASE("suite option validation") {
  const gyro::FiniteGyrogroup g = testutil::checked(testutil::cyclic_rows(3));
  LawSuiteOptions zero;
  zero.mode = LawSuiteMode::sampled;
  zero.samples = 0;
  CHECK_THROWS_AS(run_law_suite(g, zero), std::invalid_argument);

  const gyro::EinsteinGyrogroup eg;
  CHECK_THROWS_AS(run_law_suite(eg, {}), std::invalid_argument);
}

TEST_CASE("einstein sampled suite covers the gyrocommutative block") {
  const gyro::EinsteinGyrogroup eg;
  LawSuiteOptions opt;
  opt.mode = LawSuiteMode::sampled;
  opt.samples = 300;
  opt.seed = 3;
  const auto suite = run_law_suite(eg, opt);
  REQUIRE(suite.reports.size() == 20);
  for (const auto& rep : suite.reports) {
    CAPTURE(gyro::law_name(rep.id));
    CHECK(rep.status == LawStatus::pass);
    CHECK(rep.samples_checked == 300);
  }
}
