#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gyro {

// A topology on points 0..n-1 with every open stored explicitly as a
// bitmask. Finite topologies have minimal open neighborhoods
// (min_nbhd[x] = intersection of all opens containing x, itself open), and
// a set is open iff it contains the minimal neighborhood of each of its
// points. Supported order is capped at 20 so the explicit open family
// stays small.
class FiniteTopology {
 public:
  // Validates the family: the empty set and the full set must be present
  // and the family must be closed under pairwise union and intersection.
  // Violations throw std::invalid_argument; nothing is silently completed.
  static FiniteTopology from_opens(int order, std::vector<std::uint64_t> opens);

  static FiniteTopology discrete(int order);
  static FiniteTopology indiscrete(int order);

  // Builds the topology whose opens are exactly the unions of the given
  // minimal neighborhoods. Requires x in min_nbhd[x] and
  // y in min_nbhd[x] => min_nbhd[y] subset of min_nbhd[x].
  static FiniteTopology from_min_nbhds(int order, std::vector<std::uint64_t> min_nbhds);

  int order() const { return n_; }
  std::uint64_t full_mask() const { return n_ == 0 ? 0 : (n_ == 64 ? ~0ULL : (1ULL << n_) - 1); }
  const std::vector<std::uint64_t>& opens() const { return opens_; }
  std::uint64_t min_nbhd(int x) const { return min_nbhd_[x]; }
  bool is_open(std::uint64_t s) const;
  std::uint64_t closure(std::uint64_t s) const;

 private:
  FiniteTopology() = default;
  int n_ = 0;
  std::vector<std::uint64_t> opens_;     // sorted ascending as integers
  std::vector<std::uint64_t> min_nbhd_;  // derived
};

// T0/T1/Hausdorff/regular flags with a witness for each failing one.
// On finite spaces T1 (and hence Hausdorff) forces the discrete topology,
// so these flags are computed directly from minimal neighborhoods.
struct SeparationRecord {
  bool t0 = false;
  bool t1 = false;
  bool hausdorff = false;
  bool regular = false;
  std::optional<std::array<int, 2>> t0_witness;
  std::optional<std::array<int, 2>> t1_witness;
  std::optional<std::array<int, 2>> hausdorff_witness;
  // Point x and a closed set (as mask) that cannot be separated.
  std::optional<std::pair<int, std::uint64_t>> regular_witness;
};

SeparationRecord check_separation(const FiniteTopology& t);

}  // namespace gyro
