#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gyro/cayley.hpp"

namespace gyro {

struct EnumerationOptions {
  // Maximum number of row placements explored by the backtracking search.
  std::uint64_t node_budget = UINT64_MAX;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t tables_emitted = 0;
  bool complete = true;  // false when the node budget truncated the search
};

// Enumerates the gyrogroups of the given order, one representative per
// isomorphism class, in a deterministic order (identity fixed at index 0;
// depth-first over rows in lexicographic order). Candidates are
// left-cancellative tables with the identity at 0, pruned during row
// placement by incremental gyration checks (bijectivity, the automorphism
// law, the left loop property) and completed tables are re-validated from
// scratch before being emitted. The sink may return false to stop early.
EnumerationStats enumerate_gyrogroups(
    int order, const EnumerationOptions& opt,
    const std::function<bool(const FiniteGyrogroup&)>& sink);

// Convenience form collecting all representatives.
std::vector<FiniteGyrogroup> enumerate_gyrogroups(int order,
                                                  const EnumerationOptions& opt = {});

// Lexicographically smallest relabeling of the table among all
// permutations fixing index 0 (isomorphisms preserve the identity).
std::vector<int> canonical_form(const std::vector<std::vector<int>>& table);

// Cheap isomorphism-invariant fingerprint used to prefilter canonical-form
// comparisons at larger orders.
std::vector<int> isomorphism_invariant(const FiniteGyrogroup& g);

}  // namespace gyro
