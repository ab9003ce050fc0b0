#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gyro/cayley.hpp"
#include "gyro/subgyro.hpp"
#include "gyro/topology.hpp"

namespace gyro {

// Location of a failed pointwise continuity condition: the produced set
// escaped the neighborhood it had to stay inside.
struct ContinuityWitness {
  std::vector<int> at;
  std::uint64_t produced = 0;
  std::uint64_t required = 0;
};

struct ContinuityReport {
  bool holds = true;
  std::optional<ContinuityWitness> witness;
};

// Joint continuity of (a, b) -> a + b. Minimal neighborhoods are open and
// contained in every other neighborhood of their point, so on a finite
// space joint continuity at (a, b) is equivalent to
// min_nbhd[a] + min_nbhd[b] lying inside min_nbhd[a + b].
ContinuityReport check_paratopological(const FiniteGyrogroup& g, const FiniteTopology& t);

// Continuity of x -> -x at one point (same finite reduction).
ContinuityReport check_inverse_continuous_at(const FiniteGyrogroup& g,
                                             const FiniteTopology& t, int x);

// Continuity of x -> -x everywhere.
ContinuityReport check_inverse_continuous(const FiniteGyrogroup& g, const FiniteTopology& t);

// Existence of a neighborhood base at 0 made of gyration-invariant open
// sets, on top of joint continuity. Every open base at 0 of a finite
// space must contain min_nbhd[0] itself, so such a base exists iff
// gyr[a,b](min_nbhd[0]) = min_nbhd[0] for all a, b. Throws
// std::invalid_argument when (g, t) is not paratopological.
ContinuityReport check_strongly_paratopological(const FiniteGyrogroup& g,
                                                const FiniteTopology& t);

// Every x has some left-iterated sum x, x+x, (x+x)+x, ... inside each
// neighborhood of 0; finitely, inside min_nbhd[0].
ContinuityReport check_topologically_periodic(const FiniteGyrogroup& g,
                                              const FiniteTopology& t);

bool is_gyrocommutative(const FiniteGyrogroup& g);

// Classification of one (table, topology) pair.
struct TopoClassification {
  ContinuityReport add_jointly_continuous;
  ContinuityReport inverse_continuous;
  ContinuityReport inverse_continuous_at_zero;
  ContinuityReport topologically_periodic;
  std::optional<ContinuityReport> strong_base;  // set only when paratopological
  SeparationRecord separation;
  bool paratopological = false;
  bool strongly_paratopological = false;
  bool topological = false;  // paratopological with continuous inverse
  bool gyrocommutative = false;
};

TopoClassification classify(const FiniteGyrogroup& g, const FiniteTopology& t);

// The intersection of the closures of all neighborhoods of 0; on a finite
// space that is the closure of min_nbhd[0]. The certificate records how
// the set sits inside the carrier (subgyrogroup / L-subgyrogroup /
// invariant); the two flags say which hypotheses the pair satisfies.
struct BReport {
  std::uint64_t b = 0;
  bool paratopological = false;
  bool gyrocommutative = false;
  SubgyroCertificate certificate;
};

BReport compute_b_set(const FiniteGyrogroup& g, const FiniteTopology& t);

// Quotient of a topology by a partition of the points: a set of blocks is
// open iff its preimage is open. Records whether the projection is an
// open map, with an offending open set when it is not.
struct QuotientTopologyResult {
  FiniteTopology space;               // topology on block indices
  std::vector<std::uint64_t> blocks;  // block index -> member mask
  std::vector<int> block_of;          // point -> block index
  bool projection_open = true;
  std::optional<std::uint64_t> open_map_witness;
};

// Blocks must be disjoint, nonempty and cover all points
// (std::invalid_argument otherwise).
QuotientTopologyResult quotient_topology(const FiniteTopology& t,
                                         const std::vector<std::uint64_t>& blocks);

// Quotient by the left cosets of an L-subgyrogroup (delegates the coset
// partition to coset_partition, which enforces the L requirement).
QuotientTopologyResult quotient_topology(const FiniteGyrogroup& g, const FiniteTopology& t,
                                         std::uint64_t h_mask);

}  // namespace gyro
