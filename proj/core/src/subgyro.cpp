#include "gyro/subgyro.hpp"

#include <stdexcept>

namespace gyro {

namespace {

void require_subset(const FiniteGyrogroup& g, std::uint64_t subset, const char* who) {
  if (subset == 0)
    throw std::invalid_argument(std::string(who) + ": subset must be nonempty");
  if (subset & ~g.full_mask())
    throw std::invalid_argument(std::string(who) + ": subset has out-of-range members");
}

}  // namespace

SubgyroCertificate certify_subset(const FiniteGyrogroup& g, std::uint64_t subset) {
  require_subset(g, subset, "certify_subset");
  const int n = g.order();
  SubgyroCertificate cert;
  cert.subset = subset;
  cert.is_subgyrogroup = true;

  for (int x = 0; x < n && cert.is_subgyrogroup; ++x) {
    if (!(subset >> x & 1)) continue;
    for (int y = 0; y < n; ++y) {
      if (!(subset >> y & 1)) continue;
      if (!(subset >> g.add(x, y) & 1)) {
        cert.is_subgyrogroup = false;
        cert.violations.push_back({"closure-add", {x, y}});
        break;
      }
    }
    if (cert.is_subgyrogroup && !(subset >> g.neg(x) & 1)) {
      cert.is_subgyrogroup = false;
      cert.violations.push_back({"closure-neg", {x}});
    }
  }
  if (!cert.is_subgyrogroup) return cert;

  cert.is_l_subgyrogroup = true;
  for (int a = 0; a < n && cert.is_l_subgyrogroup; ++a) {
    for (int h = 0; h < n; ++h) {
      if (!(subset >> h & 1)) continue;
      if (g.gyr_image(a, h, subset) != subset) {
        cert.is_l_subgyrogroup = false;
        cert.violations.push_back({"l-subgyrogroup", {a, h}});
        break;
      }
    }
  }

  cert.is_invariant = true;
  for (int a = 0; a < n && cert.is_invariant; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::uint64_t mid = g.left_translate(a, g.right_translate(subset, b));
      const std::uint64_t left = g.right_translate(g.left_translate(a, subset), b);
      const std::uint64_t ref = g.left_translate(g.add(a, b), subset);
      if (mid != ref || left != ref) {
        cert.is_invariant = false;
        cert.violations.push_back({"invariant", {a, b}});
        break;
      }
    }
  }
  return cert;
}

bool is_subgyrogroup(const FiniteGyrogroup& g, std::uint64_t subset) {
  return certify_subset(g, subset).is_subgyrogroup;
}

bool is_l_subgyrogroup(const FiniteGyrogroup& g, std::uint64_t subset) {
  return certify_subset(g, subset).is_l_subgyrogroup;
}

bool is_invariant_subgyrogroup(const FiniteGyrogroup& g, std::uint64_t subset) {
  SubgyroCertificate cert = certify_subset(g, subset);
  if (!cert.is_subgyrogroup)
    throw std::invalid_argument("is_invariant_subgyrogroup: subset is not a subgyrogroup");
  return cert.is_invariant;
}

std::uint64_t subgyrogroup_closure(const FiniteGyrogroup& g, std::uint64_t subset) {
  require_subset(g, subset, "subgyrogroup_closure");
  const int n = g.order();
  std::uint64_t cur = subset | 1ULL;  // the identity is in every subgyrogroup
  for (;;) {
    std::uint64_t next = cur;
    for (int x = 0; x < n; ++x) {
      if (!(cur >> x & 1)) continue;
      next |= 1ULL << g.neg(x);
      for (int y = 0; y < n; ++y)
        if (cur >> y & 1) next |= 1ULL << g.add(x, y);
    }
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<std::uint64_t> coset_partition(const FiniteGyrogroup& g, std::uint64_t h) {
  SubgyroCertificate cert = certify_subset(g, h);
  if (!cert.is_l_subgyrogroup)
    throw std::invalid_argument(
        "coset_partition: subset is not an L-subgyrogroup (left cosets need not "
        "partition the carrier)");
  const int n = g.order();
  std::vector<std::uint64_t> cosets;
  std::uint64_t covered = 0;
  for (int a = 0; a < n; ++a) {
    if (covered >> a & 1) continue;
    std::uint64_t c = g.left_translate(a, h);
    if (c & covered)
      throw std::logic_error("coset_partition: cosets of an L-subgyrogroup overlap");
    if (!(c >> a & 1))
      throw std::logic_error("coset_partition: coset misses its representative");
    cosets.push_back(c);
    covered |= c;
  }
  return cosets;
}

QuotientResult quotient_gyrogroup(const FiniteGyrogroup& g, std::uint64_t n_mask) {
  SubgyroCertificate cert = certify_subset(g, n_mask);
  if (!cert.is_subgyrogroup)
    throw std::invalid_argument("quotient_gyrogroup: subset is not a subgyrogroup");

  const int n = g.order();
  QuotientResult res;

  // Left cosets, a + N; grouped without assuming they partition.
  res.coset_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (res.coset_of[a] >= 0) continue;
    const std::uint64_t c = g.left_translate(a, n_mask);
    const int idx = static_cast<int>(res.cosets.size());
    if (!(c >> a & 1)) {
      res.well_definedness = SubgyroViolation{"coset-partition", {a}};
      return res;
    }
    for (int x = 0; x < n; ++x) {
      if (!(c >> x & 1)) continue;
      if (res.coset_of[x] >= 0) {
        res.well_definedness = SubgyroViolation{"coset-partition", {a, x}};
        return res;
      }
      res.coset_of[x] = idx;
    }
    res.cosets.push_back(c);
  }

  // Well-definedness: the coset of a'+b' depends only on the cosets of a', b'.
  const int m = static_cast<int>(res.cosets.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int expect = res.coset_of[g.add(a, b)];
      const std::uint64_t ca = res.cosets[res.coset_of[a]];
      const std::uint64_t cb = res.cosets[res.coset_of[b]];
      for (int x = 0; x < n; ++x) {
        if (!(ca >> x & 1)) continue;
        for (int y = 0; y < n; ++y) {
          if (!(cb >> y & 1)) continue;
          if (res.coset_of[g.add(x, y)] != expect) {
            res.well_definedness = SubgyroViolation{"well-definedness", {a, b, x, y}};
            return res;
          }
        }
      }
    }
  }

  // Representative-based table on cosets, then re-validate from scratch.
  std::vector<int> rep(m, -1);
  for (int x = 0; x < n; ++x)
    if (rep[res.coset_of[x]] < 0) rep[res.coset_of[x]] = x;
  std::vector<std::vector<int>> qtable(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      qtable[i][j] = res.coset_of[g.add(rep[i], rep[j])];

  std::vector<std::string> qlabels;
  qlabels.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::string s = "{";
    bool first = true;
    for (int x = 0; x < n; ++x) {
      if (!(res.cosets[i] >> x & 1)) continue;
      if (!first) s += ",";
      s += g.labels()[x];
      first = false;
    }
    s += "}";
    qlabels.push_back(std::move(s));
  }

  ValidationOutcome v = validate_table(qtable, std::move(qlabels));
  if (!v.ok()) {
    res.validation_failure = v.failure;
    return res;
  }
  res.quotient = std::move(v.group);

  res.projection_is_homomorphism = true;
  for (int a = 0; a < n && res.projection_is_homomorphism; ++a)
    for (int b = 0; b < n; ++b)
      if (res.coset_of[g.add(a, b)] !=
          res.quotient->add(res.coset_of[a], res.coset_of[b])) {
        res.projection_is_homomorphism = false;
        break;
      }
  return res;
}

}  // namespace gyro
