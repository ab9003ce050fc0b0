#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gyro/cayley.hpp"

namespace gyro {

struct SubgyroViolation {
  std::string kind;  // e.g. "closure-neg", "closure-add", "l-subgyrogroup", "invariant"
  std::vector<int> witness;
};

// Certificate for a nonempty subset H of a finite gyrogroup: whether H is a
// subgyrogroup (closed under negation and addition), an L-subgyrogroup
// (gyr[a,h](H) = H for all a in G, h in H), and an invariant subgyrogroup
// (a+(H+b) = (a+b)+H = (a+H)+b for all a, b). Each false flag is backed by
// a violation witness.
struct SubgyroCertificate {
  std::uint64_t subset = 0;
  bool is_subgyrogroup = false;
  bool is_l_subgyrogroup = false;
  bool is_invariant = false;
  std::vector<SubgyroViolation> violations;
};

SubgyroCertificate certify_subset(const FiniteGyrogroup& g, std::uint64_t subset);

bool is_subgyrogroup(const FiniteGyrogroup& g, std::uint64_t subset);
bool is_l_subgyrogroup(const FiniteGyrogroup& g, std::uint64_t subset);
// Requires subset to be a subgyrogroup (throws std::invalid_argument otherwise).
bool is_invariant_subgyrogroup(const FiniteGyrogroup& g, std::uint64_t subset);

// Smallest subgyrogroup containing the given subset.
std::uint64_t subgyrogroup_closure(const FiniteGyrogroup& g, std::uint64_t subset);

// Left cosets {a+H}, ordered by smallest member; requires H to be an
// L-subgyrogroup (otherwise the cosets need not partition the carrier and
// the call is refused with std::invalid_argument).
std::vector<std::uint64_t> coset_partition(const FiniteGyrogroup& g, std::uint64_t h);

// Quotient by an invariant subgyrogroup N: cosets as elements with
// (a+N)+(b+N) := (a+b)+N. The construction checks that the cosets
// partition the carrier and that the operation is well defined; failures
// are reported in-band (they signal that N was not actually invariant).
// The quotient table is re-validated and the projection is checked to be a
// homomorphism. N must at least be a subgyrogroup.
struct QuotientResult {
  std::vector<std::uint64_t> cosets;  // cosets[0] is N itself
  std::vector<int> coset_of;          // element index -> coset index
  std::optional<FiniteGyrogroup> quotient;
  std::optional<SubgyroViolation> well_definedness;
  std::optional<AxiomFailure> validation_failure;
  bool projection_is_homomorphism = false;
  bool ok() const {
    return quotient.has_value() && !well_definedness && !validation_failure &&
           projection_is_homomorphism;
  }
};

QuotientResult quotient_gyrogroup(const FiniteGyrogroup& g, std::uint64_t n_mask);

}  // namespace gyro
