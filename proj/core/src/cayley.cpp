#include "gyro/cayley.hpp"

#include <set>
#include <stdexcept>

namespace gyro {

std::vector<std::vector<int>> FiniteGyrogroup::table_rows() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) rows[a][b] = add(a, b);
  return rows;
}

std::uint64_t FiniteGyrogroup::add_sets(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t out = 0;
  for (int x = 0; x < n_; ++x) {
    if (!(a >> x & 1)) continue;
    for (int y = 0; y < n_; ++y)
      if (b >> y & 1) out |= 1ULL << add(x, y);
  }
  return out;
}

std::uint64_t FiniteGyrogroup::left_translate(int a, std::uint64_t s) const {
  std::uint64_t out = 0;
  for (int y = 0; y < n_; ++y)
    if (s >> y & 1) out |= 1ULL << add(a, y);
  return out;
}

std::uint64_t FiniteGyrogroup::right_translate(std::uint64_t s, int b) const {
  std::uint64_t out = 0;
  for (int x = 0; x < n_; ++x)
    if (s >> x & 1) out |= 1ULL << add(x, b);
  return out;
}

std::uint64_t FiniteGyrogroup::neg_set(std::uint64_t s) const {
  std::uint64_t out = 0;
  for (int x = 0; x < n_; ++x)
    if (s >> x & 1) out |= 1ULL << neg(x);
  return out;
}

std::uint64_t FiniteGyrogroup::gyr_image(int a, int b, std::uint64_t s) const {
  std::uint64_t out = 0;
  for (int x = 0; x < n_; ++x)
    if (s >> x & 1) out |= 1ULL << gyr(a, b, x);
  return out;
}

ValidationOutcome validate_table(const std::vector<std::vector<int>>& add,
                                 std::vector<std::string> labels) {
  const int n = static_cast<int>(add.size());
  if (n < 1) throw std::invalid_argument("validate_table: empty table");
  if (n > 64) throw std::invalid_argument("validate_table: order exceeds 64");
  for (const auto& row : add) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("validate_table: table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("validate_table: entry out of range");
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("validate_table: label count does not match order");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n)
      throw std::invalid_argument("validate_table: duplicate labels");
  }

  ValidationOutcome out;
  auto fail = [&](std::string stage, std::vector<int> witness, std::string detail) {
    out.failure = AxiomFailure{std::move(stage), std::move(witness), std::move(detail)};
    return out;
  };

  // Two-sided identity, required at index 0 and re-derived here.
  for (int a = 0; a < n; ++a) {
    if (add[0][a] != a)
      return fail("identity", {a}, "0+a differs from a");
    if (add[a][0] != a)
      return fail("identity", {a}, "a+0 differs from a");
  }

  // Two-sided inverses.
  std::vector<int> neg(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int j = 0; j < n; ++j) {
      if (add[j][a] == 0 && add[a][j] == 0) {
        neg[a] = j;
        break;
      }
    }
    if (neg[a] < 0)
      return fail("inverse", {a}, "no two-sided inverse");
  }

  // Left cancellation: each left translation is a bijection.
  for (int a = 0; a < n; ++a) {
    std::vector<int> seen(n, -1);
    for (int y = 0; y < n; ++y) {
      int v = add[a][y];
      if (seen[v] >= 0)
        return fail("left-cancellation", {a, seen[v], y},
                    "a+y and a+z collide");
      seen[v] = y;
    }
  }

  // Derive every gyration from the carrier operations.
  std::vector<int> gyr(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int m = neg[add[a][b]];
      int* g = &gyr[(static_cast<std::size_t>(a) * n + b) * n];
      for (int c = 0; c < n; ++c) g[c] = add[m][add[a][add[b][c]]];
    }
  }
  auto gyr_at = [&](int a, int b, int c) {
    return gyr[(static_cast<std::size_t>(a) * n + b) * n + c];
  };

  // G3: each gyration is an automorphism of the table.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> seen(n, -1);
      for (int c = 0; c < n; ++c) {
        int v = gyr_at(a, b, c);
        if (seen[v] >= 0)
          return fail("G3", {a, b, seen[v], c}, "gyration is not injective");
        seen[v] = c;
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (gyr_at(a, b, add[x][y]) != add[gyr_at(a, b, x)][gyr_at(a, b, y)])
            return fail("G3", {a, b, x, y}, "gyration does not respect addition");
    }
  }

  // G4: left loop property.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (gyr_at(add[a][b], b, c) != gyr_at(a, b, c))
          return fail("G4", {a, b, c}, "left loop property fails");

  FiniteGyrogroup g;
  g.n_ = n;
  g.add_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.add_[a * n + b] = add[a][b];
  g.neg_ = std::move(neg);
  g.gyr_ = std::move(gyr);
  g.labels_ = std::move(labels);
  g.associative_ = true;
  for (int a = 0; a < n && g.associative_; ++a)
    for (int b = 0; b < n && g.associative_; ++b)
      for (int c = 0; c < n; ++c)
        if (g.gyr(a, b, c) != c) {
          g.associative_ = false;
          break;
        }
  out.group = std::move(g);
  return out;
}

}  // namespace gyro
