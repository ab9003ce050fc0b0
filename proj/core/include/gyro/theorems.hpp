#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gyro/cayley.hpp"
#include "gyro/continuity.hpp"
#include "gyro/topology.hpp"

namespace gyro {

// One verified set inclusion/equality, quantified over the gyration-
// invariant open neighborhoods of 0 (and over subsets where stated).
struct LemmaItemReport {
  std::string id;
  std::string statement;
  std::string status;  // "pass" | "fail" | "skipped"
  std::string note;
  std::vector<int> witness_points;
  std::vector<std::uint64_t> witness_sets;
  bool sampled = false;
};

struct StrongLemmaReport {
  bool paratopological = false;
  bool strongly = false;
  std::size_t invariant_open_family = 0;  // size of the family quantified over
  bool family_truncated = false;
  std::vector<LemmaItemReport> items;
  bool all_pass() const {
    for (const auto& i : items)
      if (i.status == "fail") return false;
    return true;
  }
};

// Evaluates the set-arithmetic facts that hold in strongly paratopological
// carriers (first five items) and in paratopological ones (last two):
//   coadd-inside-add            a [+] U inside a + U, a [-] U inside a - U
//   base-closed-under-add       U1 + U2 is again an invariant open at 0
//   translate-reassociation     (a + U) + W = a + (U + W)
//   negation-reverses-inclusion U + V inside W forces -V - U inside -W
//   closure-negation-bound      V + V inside U forces -cl(-V) inside U
//   closure-inside-translate    cl(M) inside -U + M for every open U at 0
//   b-gyr-invariant             gyr[a,b](B) = B where B = cl(min_nbhd[0])
// Items whose precondition fails are reported skipped, not failed. Subsets
// M are swept exhaustively for order <= 16 and by seeded sampling above.
StrongLemmaReport check_strong_lemmas(const FiniteGyrogroup& g, const FiniteTopology& t,
                                      std::uint64_t seed = 1);

struct TheoremHypothesis {
  std::string name;
  bool holds = false;
};

// Finite instance of one theorem: hypotheses are evaluated on (g, t); when
// all hold the conclusion is asserted. An applicable instance with a false
// conclusion is a REFUTATION record, reported as data.
struct TheoremInstanceReport {
  std::string id;
  std::string description;
  std::vector<TheoremHypothesis> hypotheses;
  bool applicable = false;
  bool conclusion_holds = false;  // meaningful when applicable
  std::string status;             // "pass" | "inapplicable" | "REFUTATION"
  std::string note;
  std::vector<std::string> details;
};

struct TheoremSuiteReport {
  std::vector<TheoremInstanceReport> instances;
  bool any_refutation() const {
    for (const auto& i : instances)
      if (i.status == "REFUTATION") return true;
    return false;
  }
};

// The checked instances (compactness-type hypotheses hold automatically on
// finite spaces and are not re-tested):
//   compact-hausdorff                  paratopological + Hausdorff
//                                      => inverse continuous
//   locally-compact-hausdorff-strong   strongly paratopological + Hausdorff
//                                      => inverse continuous
//   inverse-continuity-at-identity     strongly paratopological => inverse
//                                      continuous at 0 iff continuous
//                                      everywhere (both directions)
//   extension-by-invariant-subgyrogroup strongly paratopological + some
//                                      invariant L-subgyrogroup H with H
//                                      (subspace) and G/H (quotient) both
//                                      strongly topological => inverse
//                                      continuous
//   locally-compact-gyrocommutative-strong strongly paratopological +
//                                      gyrocommutative => inverse continuous
//   regular-feebly-compact-strong      strongly paratopological + regular
//                                      => inverse continuous
//   countably-compact-periodic         strongly paratopological + Hausdorff
//                                      + topologically periodic => inverse
//                                      continuous
//   compact-subset-neighborhood        paratopological => for every open O
//                                      and F inside O, F + min_nbhd[0] and
//                                      min_nbhd[0] + F stay inside O
TheoremSuiteReport check_theorem_instances(const FiniteGyrogroup& g, const FiniteTopology& t);

}  // namespace gyro
