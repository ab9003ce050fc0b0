#include "gyro/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gyro {

std::vector<int> canonical_form(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  std::vector<int> cur(static_cast<std::size_t>(n) * n);
  do {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        cur[perm[a] * n + perm[b]] = perm[table[a][b]];
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

std::vector<int> isomorphism_invariant(const FiniteGyrogroup& g) {
  const int n = g.order();
  std::vector<std::array<int, 3>> per_element(n);
  int trivial_gyrations = 0;
  for (int x = 0; x < n; ++x) {
    int k = 1, y = x;
    while (y != 0 && k <= n) {
      y = g.add(y, x);
      ++k;
    }
    int commute = 0;
    for (int y2 = 0; y2 < n; ++y2)
      if (g.add(x, y2) == g.add(y2, x)) ++commute;
    int id_gyr = 0;
    for (int b = 0; b < n; ++b) {
      bool is_id = true;
      for (int c = 0; c < n; ++c)
        if (g.gyr(x, b, c) != c) {
          is_id = false;
          break;
        }
      if (is_id) ++id_gyr;
      if (is_id) ++trivial_gyrations;
    }
    per_element[x] = {k, commute, id_gyr};
  }
  std::sort(per_element.begin(), per_element.end());
  std::vector<int> out;
  out.reserve(3 * n + 2);
  out.push_back(n);
  out.push_back(trivial_gyrations);
  for (const auto& t : per_element) out.insert(out.end(), t.begin(), t.end());
  return out;
}

namespace {

// Depth-first search over left-cancellative tables with the identity at
// index 0, filling one full row at a time. After each row the gyrations
// that have become fully determined are checked: they must be bijective,
// respect the (partial) addition, and satisfy the left loop property.
// These facts never change once determined, so pruning on them is sound.
class TableSearch {
 public:
  TableSearch(int n, const EnumerationOptions& opt,
              const std::function<bool(const FiniteGyrogroup&)>& sink)
      : n_(n), opt_(opt), sink_(sink), add_(static_cast<std::size_t>(n) * n, -1),
        forced_(static_cast<std::size_t>(n) * n, -1), inv_(n, -1),
        col_used_(n, 0), row_used_(0) {
    for (int b = 0; b < n_; ++b) set_cell(0, b, b);
    inv_[0] = 0;
  }

  EnumerationStats run() {
    if (n_ == 1) {
      emit_leaf();
      EnumerationStats st;
      st.nodes = 1;
      st.tables_emitted = emitted_;
      st.complete = !stopped_;
      return st;
    }
    place_row(1);
    EnumerationStats st;
    st.nodes = nodes_;
    st.tables_emitted = emitted_;
    st.complete = !stopped_ && !budget_hit_;
    return st;
  }

 private:
  int at(int a, int b) const { return add_[a * n_ + b]; }
  void set_cell(int a, int b, int v) {
    add_[a * n_ + b] = v;
    col_used_[b] |= 1ULL << v;
  }
  void clear_cell(int a, int b) {
    col_used_[b] &= ~(1ULL << at(a, b));
    add_[a * n_ + b] = -1;
  }

  bool computable(int a, int b, int depth) const {
    if (a > depth || b > depth) return false;
    const int m = at(a, b);
    if (m > depth) return false;
    return inv_[m] >= 0 && inv_[m] <= depth;
  }

  int gyr_val(int a, int b, int c) const {
    return at(inv_[at(a, b)], at(a, at(b, c)));
  }

  bool gyr_checks(int r) {
    for (int a = 0; a <= r; ++a) {
      for (int b = 0; b <= r; ++b) {
        if (!computable(a, b, r)) continue;
        const bool fresh = !computable(a, b, r - 1);
        if (fresh) {
          std::uint64_t seen = 0;
          for (int c = 0; c < n_; ++c) {
            const int v = gyr_val(a, b, c);
            if (seen >> v & 1) return false;  // not injective
            seen |= 1ULL << v;
          }
          for (int x = 0; x <= r; ++x) {
            const int gx = gyr_val(a, b, x);
            if (gx > r) continue;
            for (int y = 0; y < n_; ++y)
              if (gyr_val(a, b, at(x, y)) != at(gx, gyr_val(a, b, y)))
                return false;  // automorphism law fails
          }
          const int m = at(a, b);
          if (computable(m, b, r))
            for (int c = 0; c < n_; ++c)
              if (gyr_val(m, b, c) != gyr_val(a, b, c)) return false;
          for (int x = 0; x <= r; ++x) {
            if (at(x, b) != a || !computable(x, b, r)) continue;
            for (int c = 0; c < n_; ++c)
              if (gyr_val(x, b, c) != gyr_val(a, b, c)) return false;
          }
        } else {
          // Row r is new: the automorphism law gains the argument x = r and
          // the single x whose gyration image is r.
          const int gr = gyr_val(a, b, r);
          if (gr <= r)
            for (int y = 0; y < n_; ++y)
              if (gyr_val(a, b, at(r, y)) != at(gr, gyr_val(a, b, y)))
                return false;
          for (int x = 0; x < r; ++x) {
            if (gyr_val(a, b, x) != r) continue;
            for (int y = 0; y < n_; ++y)
              if (gyr_val(a, b, at(x, y)) != at(r, gyr_val(a, b, y)))
                return false;
            break;
          }
        }
      }
    }
    return true;
  }

  void place_row(int r) {
    if (stopped_ || budget_hit_) return;
    set_cell(r, 0, r);  // right identity fixes column 0
    row_used_ = 1ULL << r;
    fill_cells(r, 1);
    clear_cell(r, 0);
  }

  void fill_cells(int r, int c) {
    if (stopped_ || budget_hit_) return;
    if (c == n_) {
      commit_row(r);
      return;
    }
    const int forced = forced_[r * n_ + c];
    for (int v = 0; v < n_; ++v) {
      if (forced >= 0 && v != forced) continue;
      if (row_used_ >> v & 1) continue;
      if (col_used_[c] >> v & 1) continue;
      if (v == 0 && c < r && at(c, r) != 0) continue;  // inverse must be two-sided
      set_cell(r, c, v);
      row_used_ |= 1ULL << v;
      fill_cells(r, c + 1);
      row_used_ &= ~(1ULL << v);
      clear_cell(r, c);
      if (stopped_ || budget_hit_) return;
    }
  }

  void commit_row(int r) {
    ++nodes_;
    if (nodes_ > opt_.node_budget) {
      budget_hit_ = true;
      return;
    }
    int zero_pos = -1;
    for (int c = 0; c < n_; ++c)
      if (at(r, c) == 0) {
        zero_pos = c;
        break;
      }
    inv_[r] = zero_pos;
    int forced_cell = -1;
    if (zero_pos > r && forced_[zero_pos * n_ + r] < 0) {
      forced_[zero_pos * n_ + r] = 0;
      forced_cell = zero_pos * n_ + r;
    }
    const bool consistent =
        (zero_pos > r || at(zero_pos, r) == 0) && gyr_checks(r);
    if (consistent) {
      if (r + 1 == n_) {
        emit_leaf();
      } else {
        const std::uint64_t saved_row_used = row_used_;
        place_row(r + 1);
        row_used_ = saved_row_used;
      }
    }
    if (forced_cell >= 0) forced_[forced_cell] = -1;
    inv_[r] = -1;
  }

  void emit_leaf() {
    std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) rows[a][b] = at(a, b);
    ValidationOutcome out = validate_table(rows);
    if (!out.ok()) return;
    if (!is_new_class(rows, *out.group)) return;
    ++emitted_;
    if (!sink_(*out.group)) stopped_ = true;
  }

  bool is_new_class(const std::vector<std::vector<int>>& rows,
                    const FiniteGyrogroup& g) {
    if (n_ <= 6) {
      // Small orders: a class is emitted exactly at its lexicographically
      // minimal labeling.
      std::vector<int> flat(static_cast<std::size_t>(n_) * n_);
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) flat[a * n_ + b] = rows[a][b];
      return canonical_form(rows) == flat;
    }
    const std::vector<int> inv = isomorphism_invariant(g);
    auto& bucket = seen_[inv];
    if (!bucket.empty()) {
      const std::vector<int> canon = canonical_form(rows);
      for (const auto& c : bucket)
        if (c == canon) return false;
      bucket.push_back(canon);
      return true;
    }
    bucket.push_back(canonical_form(rows));
    return true;
  }

  const int n_;
  const EnumerationOptions opt_;
  const std::function<bool(const FiniteGyrogroup&)>& sink_;
  std::vector<int> add_;
  std::vector<int> forced_;
  std::vector<int> inv_;
  std::vector<std::uint64_t> col_used_;
  std::uint64_t row_used_;
  std::map<std::vector<int>, std::vector<std::vector<int>>> seen_;
  std::uint64_t nodes_ = 0;
  std::uint64_t emitted_ = 0;
  bool stopped_ = false;
  bool budget_hit_ = false;
};

}  // namespace

EnumerationStats enumerate_gyrogroups(
    int order, const EnumerationOptions& opt,
    const std::function<bool(const FiniteGyrogroup&)>& sink) {
  if (order < 1 || order > 64)
    throw std::invalid_argument("enumerate_gyrogroups: order must be in 1..64");
  TableSearch search(order, opt, sink);
  return search.run();
}

std::vector<FiniteGyrogroup> enumerate_gyrogroups(int order,
                                                  const EnumerationOptions& opt) {
  std::vector<FiniteGyrogroup> out;
  enumerate_gyrogroups(order, opt, [&](const FiniteGyrogroup& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace gyro
