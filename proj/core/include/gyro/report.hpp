#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gyro/cayley.hpp"
#include "gyro/continuity.hpp"
#include "gyro/einstein.hpp"
#include "gyro/laws.hpp"
#include "gyro/search.hpp"
#include "gyro/subgyro.hpp"
#include "gyro/theorems.hpp"
#include "gyro/topology.hpp"

namespace gyro {

// One named entry in a run report. `payload` holds a rendered JSON object
// whose keys are merged into the entry when the report is assembled.
// `status` is pass, fail, skipped, info or REFUTATION; "info" marks
// query-style entries that answer a question instead of asserting a
// property, so they never affect the exit code.
struct ResultEntry {
  std::string name;
  std::string status;
  std::string payload;
};

struct InputDigest {
  std::string path;
  std::string digest;  // fnv1a64 of the file bytes
};

struct RunMeta {
  std::string command;
  std::vector<InputDigest> inputs;
  std::optional<std::uint64_t> seed;
  bool with_timestamp = true;
};

// 0 when no entry is "fail" or "REFUTATION", 1 otherwise. Input errors
// exit 2 before any entries exist.
int exit_code(const std::vector<ResultEntry>& results);

std::string iso8601_utc_now();

// Whole run report: one JSON object, two-space indent, stable key order,
// trailing newline. Its "exit_status" field is "pass" or "violation",
// matching exit_code.
std::string render_run_report(const RunMeta& meta, const std::vector<ResultEntry>& results);

// Report for a run that could not start (unreadable or malformed input);
// its exit_status is "input_error".
std::string render_error_report(const RunMeta& meta, const std::string& message);

ResultEntry result_validation(const ValidationOutcome& outcome);
ResultEntry result_law_suite(const LawSuiteResult<int>& suite,
                             const std::vector<std::string>& labels);
ResultEntry result_law_suite(const LawSuiteResult<EinsteinVelocity>& suite, double c);
ResultEntry result_certificate(const SubgyroCertificate& cert, int order);
ResultEntry result_quotient(const QuotientResult& q, int order);
ResultEntry result_quotient_topology(const QuotientTopologyResult& q, int order);

// `check` selects which flag the entry asserts: "paratopological",
// "strong" or "topological". The payload always carries the whole record.
ResultEntry result_classification(const TopoClassification& c, std::string_view check,
                                  int order);
ResultEntry result_separation(const SeparationRecord& s, int order);
ResultEntry result_lemmas(const StrongLemmaReport& r, int order);
ResultEntry result_theorems(const TheoremSuiteReport& r);
ResultEntry result_b(const BReport& b, int order);
ResultEntry result_search(const SearchReport& r);

ResultEntry result_einstein_value(std::string_view op,
                                  const std::vector<std::pair<std::string, EinsteinVelocity>>& args,
                                  const EinsteinVelocity& value, bool near_boundary);
ResultEntry result_einstein_scalar(std::string_view op,
                                   const std::vector<std::pair<std::string, EinsteinVelocity>>& args,
                                   double value);

}  // namespace gyro
