#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gyro {

// First axiom violation found while validating a candidate Cayley table.
// stage is one of: "identity", "inverse", "left-cancellation", "G3", "G4".
struct AxiomFailure {
  std::string stage;
  std::vector<int> witness;
  std::string detail;
};

struct ValidationOutcome;

// A validated finite gyrogroup over elements 0..n-1 with the identity at
// index 0. Negation and the full gyration action are derived during
// validation and kept as lookup tables. Also exposes subset arithmetic on
// bitmasks (which caps the supported order at 64).
class FiniteGyrogroup {
 public:
  using element_type = int;

  int order() const { return n_; }
  int add(int a, int b) const { return add_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int identity() const { return 0; }
  bool eq(int a, int b) const { return a == b; }
  int element(int i) const { return i; }
  int sample(std::mt19937_64& rng) const {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n_));
  }

  int gyr(int a, int b, int c) const { return gyr_[(a * n_ + b) * n_ + c]; }

  // True when every gyration is the identity map (equivalently, the
  // operation is associative and the table is a group).
  bool is_associative() const { return associative_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::vector<int>> table_rows() const;

  std::uint64_t full_mask() const {
    return n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
  }

  std::uint64_t add_sets(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t left_translate(int a, std::uint64_t s) const;
  std::uint64_t right_translate(std::uint64_t s, int b) const;
  std::uint64_t neg_set(std::uint64_t s) const;
  std::uint64_t gyr_image(int a, int b, std::uint64_t s) const;

 private:
  friend struct ValidationOutcome;
  friend ValidationOutcome validate_table(const std::vector<std::vector<int>>& add,
                                          std::vector<std::string> labels);
  FiniteGyrogroup() = default;

  int n_ = 0;
  std::vector<int> add_;   // n*n, row-major
  std::vector<int> neg_;   // n
  std::vector<int> gyr_;   // n*n*n, (a*n+b)*n+c
  std::vector<std::string> labels_;
  bool associative_ = false;
};

// Result of validate_table: either a validated gyrogroup or the first
// failed axiom with a witness. Axiom failures are data, not exceptions.
struct ValidationOutcome {
  std::optional<FiniteGyrogroup> group;
  std::optional<AxiomFailure> failure;
  bool ok() const { return group.has_value(); }
};

// Validates a candidate Cayley table (entries are element indices; the
// identity is required at index 0 and is re-derived, not trusted). Checks,
// in order: two-sided identity, two-sided inverses, left cancellation
// (each row a permutation), then derives the gyration of each pair and
// checks it is an automorphism (G3) and satisfies the left loop property
// (G4). Malformed input (non-square, out-of-range entries, bad labels,
// order > 64) throws std::invalid_argument.
ValidationOutcome validate_table(const std::vector<std::vector<int>>& add,
                                 std::vector<std::string> labels = {});

}  // namespace gyro
