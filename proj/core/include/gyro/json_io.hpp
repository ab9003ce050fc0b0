#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/cayley.hpp"
#include "gyro/topology.hpp"

namespace gyro {

// Raw contents of a Cayley-table file, before axiom validation.
struct TableData {
  std::vector<std::vector<int>> add;
  std::vector<std::string> labels;  // empty when the file omits "elements"
};

// Parses { "order": n, "elements": [...], "add": [[...], ...] }.
// "elements" is optional; when present it must hold n distinct nonempty
// strings. Rejects non-objects, unknown keys, order mismatches, ragged
// rows, and out-of-range entries with std::invalid_argument. Axioms are
// not checked here; pass the result to validate_table.
TableData parse_table_json(const std::string& text);
TableData load_table_file(const std::string& path);

std::string table_to_json(const FiniteGyrogroup& g);

// Parses { "order": n, "opens": [[...], ...] } where each inner list is a
// strictly increasing list of element indices. The family must already be
// a topology; nothing is completed or repaired (FiniteTopology::from_opens
// rejects families missing the empty set, the full set, a union, or an
// intersection).
FiniteTopology parse_topology_json(const std::string& text);
FiniteTopology load_topology_file(const std::string& path);

std::string topology_to_json(const FiniteTopology& t);

// Whole-file read/write. Failures throw std::runtime_error.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// FNV-1a 64-bit digest, used to pin input files inside run reports.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace gyro
