#include "gyro/topology.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace gyro {

namespace {

void require_order(int n) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("FiniteTopology: order must be in 1..20");
}

std::vector<std::uint64_t> derive_min_nbhds(int order, std::uint64_t full,
                                            const std::vector<std::uint64_t>& opens) {
  std::vector<std::uint64_t> mins(order, full);
  for (int x = 0; x < order; ++x)
    for (std::uint64_t s : opens)
      if (s >> x & 1) mins[x] &= s;
  return mins;
}

}  // namespace

FiniteTopology FiniteTopology::from_opens(int order, std::vector<std::uint64_t> opens) {
  require_order(order);
  FiniteTopology t;
  t.n_ = order;
  const std::uint64_t full = t.full_mask();
  for (std::uint64_t s : opens)
    if (s & ~full)
      throw std::invalid_argument("FiniteTopology: open set has out-of-range points");
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  t.opens_ = std::move(opens);
  if (!t.is_open(0))
    throw std::invalid_argument("FiniteTopology: empty set missing");
  if (!t.is_open(full))
    throw std::invalid_argument("FiniteTopology: full set missing");
  for (std::size_t i = 0; i < t.opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < t.opens_.size(); ++j) {
      if (!t.is_open(t.opens_[i] | t.opens_[j]))
        throw std::invalid_argument("FiniteTopology: family not closed under union");
      if (!t.is_open(t.opens_[i] & t.opens_[j]))
        throw std::invalid_argument("FiniteTopology: family not closed under intersection");
    }
  }
  t.min_nbhd_ = derive_min_nbhds(order, full, t.opens_);
  return t;
}

FiniteTopology FiniteTopology::discrete(int order) {
  require_order(order);
  FiniteTopology t;
  t.n_ = order;
  const std::uint64_t full = t.full_mask();
  t.opens_.reserve(full + 1);
  for (std::uint64_t s = 0; s <= full; ++s) t.opens_.push_back(s);
  t.min_nbhd_.resize(order);
  for (int x = 0; x < order; ++x) t.min_nbhd_[x] = 1ULL << x;
  return t;
}

FiniteTopology FiniteTopology::indiscrete(int order) {
  require_order(order);
  const std::uint64_t full = (1ULL << order) - 1;
  return from_opens(order, {0, full});
}

FiniteTopology FiniteTopology::from_min_nbhds(int order,
                                              std::vector<std::uint64_t> min_nbhds) {
  require_order(order);
  if (static_cast<int>(min_nbhds.size()) != order)
    throw std::invalid_argument("from_min_nbhds: need one neighborhood per point");
  const std::uint64_t full = (1ULL << order) - 1;
  for (int x = 0; x < order; ++x) {
    if (min_nbhds[x] & ~full)
      throw std::invalid_argument("from_min_nbhds: neighborhood out of range");
    if (!(min_nbhds[x] >> x & 1))
      throw std::invalid_argument("from_min_nbhds: x must lie in min_nbhd[x]");
    for (int y = 0; y < order; ++y)
      if ((min_nbhds[x] >> y & 1) && (min_nbhds[y] & ~min_nbhds[x]))
        throw std::invalid_argument("from_min_nbhds: neighborhoods not transitive");
  }
  // A set is open iff it contains min_nbhd[x] for each of its points; the
  // family of all such sets is a topology by construction, so no
  // re-validation pass is needed.
  FiniteTopology t;
  t.n_ = order;
  for (std::uint64_t s = 0; s <= full; ++s) {
    bool open = true;
    for (int x = 0; x < order && open; ++x)
      if ((s >> x & 1) && (min_nbhds[x] & ~s)) open = false;
    if (open) t.opens_.push_back(s);
  }
  t.min_nbhd_ = std::move(min_nbhds);
  return t;
}

bool FiniteTopology::is_open(std::uint64_t s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

std::uint64_t FiniteTopology::closure(std::uint64_t s) const {
  std::uint64_t out = 0;
  for (int x = 0; x < n_; ++x)
    if (min_nbhd_[x] & s) out |= 1ULL << x;
  return out;
}

SeparationRecord check_separation(const FiniteTopology& t) {
  const int n = t.order();
  SeparationRecord rec;
  rec.t0 = rec.t1 = rec.hausdorff = rec.regular = true;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (rec.t0 && t.min_nbhd(x) == t.min_nbhd(y)) {
        rec.t0 = false;
        rec.t0_witness = std::array<int, 2>{x, y};
      }
      if (rec.hausdorff && (t.min_nbhd(x) & t.min_nbhd(y))) {
        rec.hausdorff = false;
        rec.hausdorff_witness = std::array<int, 2>{x, y};
      }
    }
    if (rec.t1) {
      for (int y = 0; y < n; ++y) {
        if (y != x && (t.min_nbhd(x) >> y & 1)) {
          rec.t1 = false;
          rec.t1_witness = std::array<int, 2>{x, y};
          break;
        }
      }
    }
  }
  // x and a closed set C with x outside C are separable by opens iff the
  // minimal candidates min_nbhd[x] and union of min_nbhd over C are
  // disjoint.
  for (std::uint64_t open : t.opens()) {
    const std::uint64_t closed = t.full_mask() & ~open;
    if (!closed) continue;
    std::uint64_t cnbhd = 0;
    for (int c = 0; c < n; ++c)
      if (closed >> c & 1) cnbhd |= t.min_nbhd(c);
    for (int x = 0; x < n && rec.regular; ++x) {
      if (!(open >> x & 1)) continue;
      if (t.min_nbhd(x) & cnbhd) {
        rec.regular = false;
        rec.regular_witness = std::pair<int, std::uint64_t>(x, closed);
      }
    }
    if (!rec.regular) break;
  }
  return rec;
}

}  // namespace gyro
