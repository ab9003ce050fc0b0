#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "gyro/continuity.hpp"
#include "gyro/theorems.hpp"
#include "gyro/topology.hpp"
#include "helpers.hpp"

using gyro::check_strong_lemmas;
using gyro::check_theorem_instances;
using gyro::FiniteTopology;

namespace {

const std::vector<std::string> kTheoremIds = {
    "compact-hausdorff",
    "locally-compact-hausdorff-strong",
    "inverse-continuity-at-identity",
    "extension-by-invariant-subgyrogroup",
    "locally-compact-gyrocommutative-strong",
    "regular-feebly-compact-strong",
    "countably-compact-periodic",
    "compact-subset-neighborhood"};

const std::vector<std::string> kLemmaIds = {
    "coadd-inside-add",       "base-closed-under-add",
    "translate-reassociation", "negation-reverses-inclusion",
    "closure-negation-bound",  "closure-inside-translate",
    "b-gyr-invariant"};

struct Pair {
  gyro::FiniteGyrogroup table;
  FiniteTopology topology;
};

std::vector<Pair> corpus_pairs() {
  std::vector<Pair> out;
  for (const char* stem : {"z2", "z3", "z4", "k4", "s3", "z6", "z8",
                           "nongroup8", "nongroup8_b", "nongroup8_d"}) {
    gyro::FiniteGyrogroup g = testutil::corpus_table(stem);
    const int n = g.order();
    out.push_back({g, FiniteTopology::discrete(n)});
    out.push_back({g, FiniteTopology::indiscrete(n)});
  }
  out.push_back({testutil::checked(testutil::cyclic_rows(2)),
                 testutil::corpus_topology("sierpinski2")});
  out.push_back({testutil::checked(testutil::cyclic_rows(3)),
                 testutil::corpus_topology("open01_3")});
  out.push_back({testutil::checked(testutil::cyclic_rows(4)),
                 testutil::corpus_topology("open02_4")});
  out.push_back({testutil::checked(testutil::cyclic_rows(4)),
                 testutil::corpus_topology("cosets02_4")});
  out.push_back({testutil::corpus_table("s3"),
                 testutil::corpus_topology("s3_left_cosets_es")});
  return out;
}

}  // namespace

TEST_CASE("lemma suite on a strongly paratopological pair") {
  const auto g = testutil::checked(testutil::cyclic_rows(4));
  const auto rep = check_strong_lemmas(g, FiniteTopology::discrete(4));
  CHECK(rep.paratopological);
  CHECK(rep.strongly);
  CHECK_FALSE(rep.family_truncated);
  CHECK(rep.invariant_open_family == 8);  // every open containing 0
  REQUIRE(rep.items.size() == kLemmaIds.size());
  for (std::size_t i = 0; i < rep.items.size(); ++i) {
    CAPTURE(rep.items[i].id);
    CHECK(rep.items[i].id == kLemmaIds[i]);
    CHECK(rep.items[i].status == "pass");
  }
  CHECK(rep.all_pass());
}

TEST_CASE("lemma suite on the indiscrete non-associative pair") {
  const auto g = testutil::corpus_table("nongroup8");
  const auto rep = check_strong_lemmas(g, FiniteTopology::indiscrete(8));
  CHECK(rep.strongly);
  CHECK(rep.invariant_open_family == 1);  // only the full set
  CHECK(rep.all_pass());
  for (const auto& item : rep.items) CHECK(item.status == "pass");
}

TEST_CASE("lemma suite skips when the pair is not paratopological") {
  const auto g = testutil::checked(testutil::cyclic_rows(2));
  const auto rep = check_strong_lemmas(g, testutil::corpus_topology("sierpinski2"));
  CHECK_FALSE(rep.paratopological);
  CHECK_FALSE(rep.strongly);
  REQUIRE(rep.items.size() == kLemmaIds.size());
  for (const auto& item : rep.items) {
    CAPTURE(item.id);
    CHECK(item.status == "skipped");
    CHECK_FALSE(item.note.empty());
  }
  CHECK(rep.all_pass());  // skips are not failures
}

TEST_CASE("lemma statuses depend on both flags") {
  // Paratopological but checking what happens short of strongly: every
  // paratopological group pair is automatically strong, so drive the two
  // tiers apart with the flags themselves.
  const auto g = testutil::checked(testutil::cyclic_rows(4));
  const auto rep = check_strong_lemmas(g, testutil::corpus_topology("cosets02_4"));
  CHECK(rep.paratopological);
  CHECK(rep.strongly);
  CHECK(rep.all_pass());
  // The invariant family is the opens containing 0: {0,2} and the full set.
  CHECK(rep.invariant_open_family == 2);
}

TEST_CASE("theorem instances carry the fixed id set") {
  const auto g = testutil::checked(testutil::cyclic_rows(4));
  const auto rep = check_theorem_instances(g, FiniteTopology::discrete(4));
  REQUIRE(rep.instances.size() == kTheoremIds.size());
  for (std::size_t i = 0; i < rep.instances.size(); ++i)
    CHECK(rep.instances[i].id == kTheoremIds[i]);
  CHECK_FALSE(rep.any_refutation());
}

TEST_CASE("hausdorff instances apply on discrete pairs") {
  const auto g = testutil::corpus_table("nongroup8");
  const auto rep = check_theorem_instances(g, FiniteTopology::discrete(8));
  for (const auto& inst : rep.instances) {
    CAPTURE(inst.id);
    if (inst.id == "locally-compact-gyrocommutative-strong") {
      // The carrier is not gyrocommutative, so this one cannot apply.
      CHECK(inst.status == "inapplicable");
      continue;
    }
    CHECK(inst.applicable);
    CHECK(inst.status == "pass");
  }
}

TEST_CASE("inapplicable instances are reported as such") {
  const auto g = testutil::checked(testutil::cyclic_rows(2));
  const auto t = testutil::corpus_topology("sierpinski2");  // not paratopological
  const auto rep = check_theorem_instances(g, t);
  CHECK_FALSE(rep.any_refutation());
  for (const auto& inst : rep.instances) {
    CAPTURE(inst.id);
    CHECK(inst.status == "inapplicable");
  }
}

TEST_CASE("the identity-continuity criterion reports both directions") {
  const auto g = testutil::checked(testutil::cyclic_rows(4));
  const auto rep = check_theorem_instances(g, FiniteTopology::indiscrete(4));
  const auto* inst = &rep.instances[2];
  REQUIRE(inst->id == "inverse-continuity-at-identity");
  CHECK(inst->applicable);
  CHECK(inst->status == "pass");
  REQUIRE(inst->details.size() == 2);
  CHECK(inst->details[0] == "inverse continuous at 0: yes");
  CHECK(inst->details[1] == "inverse continuous everywhere: yes");
}

TEST_CASE("extension instance finds a qualifying subgyrogroup when one exists") {
  const auto g = testutil::checked(testutil::cyclic_rows(4));
  const auto rep = check_theorem_instances(g, FiniteTopology::discrete(4));
  const auto& inst = rep.instances[3];
  REQUIRE(inst.id == "extension-by-invariant-subgyrogroup");
  CHECK(inst.applicable);
  CHECK(inst.status == "pass");
  REQUIRE(!inst.details.empty());
  CHECK(inst.details[0] == "qualifying H: {0}");
}

TEST_CASE("no refutations across the corpus sweep") {
  for (const auto& [g, t] : corpus_pairs()) {
    CAPTURE(g.order());
    const auto theorems = check_theorem_instances(g, t);
    CHECK_FALSE(theorems.any_refutation());

    const auto lemmas = check_strong_lemmas(g, t);
    CHECK(lemmas.all_pass());
    if (lemmas.strongly)
      for (const auto& item : lemmas.items) CHECK(item.status != "skipped");
  }
}
