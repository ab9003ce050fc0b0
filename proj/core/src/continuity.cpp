#include "gyro/continuity.hpp"

#include <stdexcept>

namespace gyro {

namespace {

void require_same_order(const FiniteGyrogroup& g, const FiniteTopology& t) {
  if (g.order() != t.order())
    throw std::invalid_argument("table and topology have different orders");
}

ContinuityReport fail_at(std::vector<int> at, std::uint64_t produced, std::uint64_t required) {
  ContinuityReport r;
  r.holds = false;
  r.witness = ContinuityWitness{std::move(at), produced, required};
  return r;
}

}  // namespace

ContinuityReport check_paratopological(const FiniteGyrogroup& g, const FiniteTopology& t) {
  require_same_order(g, t);
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::uint64_t produced = g.add_sets(t.min_nbhd(a), t.min_nbhd(b));
      const std::uint64_t required = t.min_nbhd(g.add(a, b));
      if (produced & ~required) return fail_at({a, b}, produced, required);
    }
  }
  return {};
}

ContinuityReport check_inverse_continuous_at(const FiniteGyrogroup& g,
                                             const FiniteTopology& t, int x) {
  require_same_order(g, t);
  if (x < 0 || x >= g.order())
    throw std::invalid_argument("point out of range");
  const std::uint64_t produced = g.neg_set(t.min_nbhd(x));
  const std::uint64_t required = t.min_nbhd(g.neg(x));
  if (produced & ~required) return fail_at({x}, produced, required);
  return {};
}

ContinuityReport check_inverse_continuous(const FiniteGyrogroup& g, const FiniteTopology& t) {
  require_same_order(g, t);
  for (int x = 0; x < g.order(); ++x) {
    ContinuityReport r = check_inverse_continuous_at(g, t, x);
    if (!r.holds) return r;
  }
  return {};
}

ContinuityReport check_strongly_paratopological(const FiniteGyrogroup& g,
                                                const FiniteTopology& t) {
  require_same_order(g, t);
  if (!check_paratopological(g, t).holds)
    throw std::invalid_argument(
        "strong base check requires a paratopological pair");
  const std::uint64_t base = t.min_nbhd(0);
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const std::uint64_t image = g.gyr_image(a, b, base);
      if (image != base) return fail_at({a, b}, image, base);
    }
  return {};
}

ContinuityReport check_topologically_periodic(const FiniteGyrogroup& g,
                                              const FiniteTopology& t) {
  require_same_order(g, t);
  const std::uint64_t goal = t.min_nbhd(0);
  for (int x = 0; x < g.order(); ++x) {
    std::uint64_t orbit = 0;
    bool hit = false;
    for (int p = x; !(orbit >> p & 1); p = g.add(p, x)) {
      orbit |= 1ULL << p;
      if (goal >> p & 1) {
        hit = true;
        break;
      }
    }
    if (!hit) return fail_at({x}, orbit, goal);
  }
  return {};
}

bool is_gyrocommutative(const FiniteGyrogroup& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.add(a, b) != g.gyr(a, b, g.add(b, a))) return false;
  return true;
}

TopoClassification classify(const FiniteGyrogroup& g, const FiniteTopology& t) {
  TopoClassification c;
  c.add_jointly_continuous = check_paratopological(g, t);
  c.inverse_continuous = check_inverse_continuous(g, t);
  c.inverse_continuous_at_zero = check_inverse_continuous_at(g, t, 0);
  c.topologically_periodic = check_topologically_periodic(g, t);
  c.separation = check_separation(t);
  c.paratopological = c.add_jointly_continuous.holds;
  if (c.paratopological) {
    c.strong_base = check_strongly_paratopological(g, t);
    c.strongly_paratopological = c.strong_base->holds;
  }
  c.topological = c.paratopological && c.inverse_continuous.holds;
  c.gyrocommutative = is_gyrocommutative(g);
  return c;
}

BReport compute_b_set(const FiniteGyrogroup& g, const FiniteTopology& t) {
  require_same_order(g, t);
  BReport r;
  r.b = t.closure(t.min_nbhd(0));
  r.paratopological = check_paratopological(g, t).holds;
  r.gyrocommutative = is_gyrocommutative(g);
  r.certificate = certify_subset(g, r.b);
  return r;
}

QuotientTopologyResult quotient_topology(const FiniteTopology& t,
                                         const std::vector<std::uint64_t>& blocks) {
  const int n = t.order();
  const int k = static_cast<int>(blocks.size());
  if (k == 0) throw std::invalid_argument("quotient_topology: empty partition");
  std::vector<int> block_of(n, -1);
  std::uint64_t covered = 0;
  for (int b = 0; b < k; ++b) {
    if (!blocks[b] || (blocks[b] & ~t.full_mask()) || (blocks[b] & covered))
      throw std::invalid_argument("quotient_topology: blocks must be a partition");
    covered |= blocks[b];
    for (int x = 0; x < n; ++x)
      if (blocks[b] >> x & 1) block_of[x] = b;
  }
  if (covered != t.full_mask())
    throw std::invalid_argument("quotient_topology: blocks must cover all points");

  // pi^{-1}(V) is open iff it contains min_nbhd[x] for each of its points,
  // so V is open iff it is closed under b -> pi(min_nbhd[x]) for every x
  // in block b. The minimal such V is the reachability closure.
  std::vector<std::uint64_t> step(k, 0);
  for (int x = 0; x < n; ++x) {
    std::uint64_t image = 0;
    for (int y = 0; y < n; ++y)
      if (t.min_nbhd(x) >> y & 1) image |= 1ULL << block_of[y];
    step[block_of[x]] |= image;
  }
  std::vector<std::uint64_t> qmin = step;
  for (bool changed = true; changed;) {
    changed = false;
    for (int b = 0; b < k; ++b) {
      std::uint64_t next = qmin[b];
      for (int c = 0; c < k; ++c)
        if (qmin[b] >> c & 1) next |= qmin[c];
      if (next != qmin[b]) {
        qmin[b] = next;
        changed = true;
      }
    }
  }

  QuotientTopologyResult res{FiniteTopology::from_min_nbhds(k, qmin), blocks,
                             std::move(block_of), true, std::nullopt};
  for (std::uint64_t u : t.opens()) {
    std::uint64_t image = 0;
    for (int x = 0; x < n; ++x)
      if (u >> x & 1) image |= 1ULL << res.block_of[x];
    if (!res.space.is_open(image)) {
      res.projection_open = false;
      res.open_map_witness = u;
      break;
    }
  }
  return res;
}

QuotientTopologyResult quotient_topology(const FiniteGyrogroup& g, const FiniteTopology& t,
                                         std::uint64_t h_mask) {
  require_same_order(g, t);
  return quotient_topology(t, coset_partition(g, h_mask));
}

}  // namespace gyro
