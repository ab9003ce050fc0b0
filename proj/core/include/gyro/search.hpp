#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gyro/cayley.hpp"
#include "gyro/continuity.hpp"
#include "gyro/topology.hpp"

namespace gyro {

// Enumerates every minimal-neighborhood assignment on {0..n-1} (each point
// gets an open containing it, transitively closed), which is exactly every
// topology on the carrier. Assignments are produced in lexicographic order
// of the per-point masks; the sink returns false to stop. Returns the
// number of assignments delivered.
std::uint64_t enumerate_topologies(
    int order, const std::function<bool(const std::vector<std::uint64_t>&)>& sink);

// Number of topologies on a labeled n-point carrier (no early stop).
std::uint64_t count_topologies(int order);

struct SearchOptions {
  int max_order = 3;
  std::uint64_t budget = 1000000;  // maximum (table, topology) pairs examined
  std::uint64_t seed = 1;          // recorded in reports; the walk is deterministic
};

// A (table, topology) pair refuting the target question, together with the
// independently re-verified flags that make it a counterexample.
struct Counterexample {
  int order = 0;
  std::vector<std::vector<int>> table;
  std::vector<std::uint64_t> min_nbhds;
  std::vector<std::uint64_t> opens;
  TopoClassification classification;
  bool reverified = false;
};

struct SearchReport {
  std::string target;
  int max_order = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::uint64_t tables_examined = 0;
  std::uint64_t pairs_examined = 0;
  bool truncated = false;          // budget ran out before the range was covered
  bool tables_complete = true;     // table enumeration finished within budget
  std::optional<Counterexample> counterexample;
  std::string statement;           // exhaustiveness or partial-coverage summary
};

// Searches (gyrogroup, topology) pairs for a counterexample to one of the
// open questions, walking tables up to isomorphism per order and labeled
// topologies per table, in deterministic order.
//   question-3.3   paratopological + Hausdorff with discontinuous inverse
//                  (local compactness and countable base are automatic on
//                  finite carriers)
//   question-3.18  strongly paratopological + non-gyrocommutative with
//                  discontinuous inverse
// Unknown targets throw std::invalid_argument. Any counterexample is
// re-verified with fresh checks before being reported.
SearchReport search_counterexample(const std::string& target, const SearchOptions& opt);

}  // namespace gyro
