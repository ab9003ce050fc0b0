#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gyro/cayley.hpp"
#include "gyro/json_io.hpp"

namespace testutil {

inline std::vector<std::vector<int>> cyclic_rows(int n) {
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) add[a][b] = (a + b) % n;
  return add;
}

inline std::vector<std::vector<int>> klein_rows() {
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

inline gyro::FiniteGyrogroup checked(const std::vector<std::vector<int>>& rows,
                                     std::vector<std::string> labels = {}) {
  gyro::ValidationOutcome out = gyro::validate_table(rows, std::move(labels));
  if (!out.ok()) throw std::logic_error("helper table failed validation");
  return *std::move(out.group);
}

inline std::string data_path(const std::string& name) {
  return std::string(GYRO_DATA_DIR) + "/" + name;
}

inline gyro::FiniteGyrogroup corpus_table(const std::string& stem) {
  gyro::TableData d = gyro::load_table_file(data_path(stem + ".json"));
  return checked(d.add, d.labels);
}

inline gyro::FiniteTopology corpus_topology(const std::string& stem) {
  return gyro::load_topology_file(data_path(stem + ".json"));
}

}  // namespace testutil
