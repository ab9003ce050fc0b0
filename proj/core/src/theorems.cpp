#include "gyro/theorems.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "gyro/subgyro.hpp"

namespace gyro {

namespace {

constexpr std::size_t kFamilyCap = 64;       // opens quantified per lemma item
constexpr int kExhaustiveSubsetOrder = 16;   // full 2^n subset sweeps below this
constexpr std::size_t kSubsetSamples = 4096;
constexpr int kExhaustiveSubgroupOrder = 14;

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::pair<int, int>> nonidentity_gyration_pairs(const FiniteGyrogroup& g) {
  std::vector<std::pair<int, int>> pairs;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.gyr(a, b, c) != c) {
          pairs.emplace_back(a, b);
          break;
        }
  return pairs;
}

bool gyr_invariant_set(const FiniteGyrogroup& g,
                       const std::vector<std::pair<int, int>>& pairs, std::uint64_t s) {
  for (auto [a, b] : pairs)
    if (g.gyr_image(a, b, s) != s) return false;
  return true;
}

// The gyration-invariant open neighborhoods of 0, smallest first; truncated
// deterministically (smallest by size, then by mask, keeping the full set)
// when the family is larger than the cap.
std::vector<std::uint64_t> invariant_opens_at_zero(const FiniteGyrogroup& g,
                                                   const FiniteTopology& t,
                                                   const std::vector<std::pair<int, int>>& pairs,
                                                   bool& truncated) {
  std::vector<std::uint64_t> fam;
  for (std::uint64_t u : t.opens()) {
    if (!(u & 1)) continue;
    if (gyr_invariant_set(g, pairs, u)) fam.push_back(u);
  }
  auto by_size = [](std::uint64_t a, std::uint64_t b) {
    const int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  };
  std::sort(fam.begin(), fam.end(), by_size);
  truncated = fam.size() > kFamilyCap;
  if (truncated) {
    const std::uint64_t full = t.full_mask();
    fam.resize(kFamilyCap - 1);
    if (std::find(fam.begin(), fam.end(), full) == fam.end()) fam.push_back(full);
  }
  return fam;
}

std::uint64_t coadd_set(const FiniteGyrogroup& g, int a, std::uint64_t u) {
  std::uint64_t out = 0;
  for (int x = 0; x < g.order(); ++x)
    if (u >> x & 1) out |= 1ULL << g.add(a, g.gyr(a, g.neg(x), x));
  return out;
}

std::uint64_t cosub_set(const FiniteGyrogroup& g, int a, std::uint64_t u) {
  std::uint64_t out = 0;
  for (int x = 0; x < g.order(); ++x)
    if (u >> x & 1) out |= 1ULL << g.add(a, g.gyr(a, x, g.neg(x)));
  return out;
}

LemmaItemReport skipped_item(std::string id, std::string statement, std::string why) {
  LemmaItemReport r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.status = "skipped";
  r.note = std::move(why);
  return r;
}

LemmaItemReport passing_item(std::string id, std::string statement) {
  LemmaItemReport r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.status = "pass";
  return r;
}

void fail_item(LemmaItemReport& r, std::vector<int> points, std::vector<std::uint64_t> sets) {
  r.status = "fail";
  r.witness_points = std::move(points);
  r.witness_sets = std::move(sets);
}

}  // namespace

StrongLemmaReport check_strong_lemmas(const FiniteGyrogroup& g, const FiniteTopology& t,
                                      std::uint64_t seed) {
  StrongLemmaReport rep;
  rep.paratopological = check_paratopological(g, t).holds;
  rep.strongly =
      rep.paratopological && check_strongly_paratopological(g, t).holds;

  const int n = g.order();
  const auto pairs = nonidentity_gyration_pairs(g);
  const auto fam = invariant_opens_at_zero(g, t, pairs, rep.family_truncated);
  rep.invariant_open_family = fam.size();
  const char* need_strong = "requires a strongly paratopological pair";
  const char* need_para = "requires a paratopological pair";
  const std::string trunc_note =
      rep.family_truncated ? "invariant open family truncated to the smallest members" : "";

  {
    const char* st = "a[+]U inside a+U and a[-]U inside a-U";
    if (!rep.strongly) {
      rep.items.push_back(skipped_item("coadd-inside-add", st, need_strong));
    } else {
      LemmaItemReport r = passing_item("coadd-inside-add", st);
      r.note = trunc_note;
      for (int a = 0; a < n && r.status == "pass"; ++a) {
        for (std::uint64_t u : fam) {
          const std::uint64_t plus = g.left_translate(a, u);
          std::uint64_t minus = 0;
          for (int x = 0; x < n; ++x)
            if (u >> x & 1) minus |= 1ULL << g.add(a, g.neg(x));
          if (coadd_set(g, a, u) & ~plus) {
            fail_item(r, {a}, {u, coadd_set(g, a, u), plus});
            break;
          }
          if (cosub_set(g, a, u) & ~minus) {
            fail_item(r, {a}, {u, cosub_set(g, a, u), minus});
            break;
          }
        }
      }
      rep.items.push_back(std::move(r));
    }
  }

  {
    const char* st = "U1+U2 is again a gyration-invariant open containing 0";
    if (!rep.strongly) {
      rep.items.push_back(skipped_item("base-closed-under-add", st, need_strong));
    } else {
      LemmaItemReport r = passing_item("base-closed-under-add", st);
      r.note = trunc_note;
      for (std::size_t i = 0; i < fam.size() && r.status == "pass"; ++i)
        for (std::size_t j = 0; j < fam.size(); ++j) {
          const std::uint64_t s = g.add_sets(fam[i], fam[j]);
          if (!t.is_open(s) || !(s & 1) || !gyr_invariant_set(g, pairs, s)) {
            fail_item(r, {}, {fam[i], fam[j], s});
            break;
          }
        }
      rep.items.push_back(std::move(r));
    }
  }

  {
    const char* st = "(a+U)+W = a+(U+W)";
    if (!rep.strongly) {
      rep.items.push_back(skipped_item("translate-reassociation", st, need_strong));
    } else {
      LemmaItemReport r = passing_item("translate-reassociation", st);
      r.note = trunc_note;
      for (int a = 0; a < n && r.status == "pass"; ++a)
        for (std::size_t i = 0; i < fam.size() && r.status == "pass"; ++i)
          for (std::size_t j = 0; j < fam.size(); ++j) {
            const std::uint64_t lhs = g.add_sets(g.left_translate(a, fam[i]), fam[j]);
            const std::uint64_t rhs = g.left_translate(a, g.add_sets(fam[i], fam[j]));
            if (lhs != rhs) {
              fail_item(r, {a}, {fam[i], fam[j], lhs, rhs});
              break;
            }
          }
      rep.items.push_back(std::move(r));
    }
  }

  {
    const char* st = "U+V inside W forces -V-U inside -W";
    if (!rep.strongly) {
      rep.items.push_back(skipped_item("negation-reverses-inclusion", st, need_strong));
    } else {
      LemmaItemReport r = passing_item("negation-reverses-inclusion", st);
      r.note = trunc_note;
      for (std::size_t i = 0; i < fam.size() && r.status == "pass"; ++i)
        for (std::size_t j = 0; j < fam.size() && r.status == "pass"; ++j) {
          const std::uint64_t uv = g.add_sets(fam[i], fam[j]);
          const std::uint64_t nvnu = g.add_sets(g.neg_set(fam[j]), g.neg_set(fam[i]));
          for (std::uint64_t w : fam) {
            if (uv & ~w) continue;
            if (nvnu & ~g.neg_set(w)) {
              fail_item(r, {}, {fam[i], fam[j], w});
              break;
            }
          }
        }
      rep.items.push_back(std::move(r));
    }
  }

  {
    const char* st = "V+V inside U forces -cl(-V) inside U";
    if (!rep.strongly) {
      rep.items.push_back(skipped_item("closure-negation-bound", st, need_strong));
    } else {
      LemmaItemReport r = passing_item("closure-negation-bound", st);
      r.note = trunc_note;
      for (std::uint64_t u : fam) {
        for (std::uint64_t v : fam) {
          if (g.add_sets(v, v) & ~u) continue;
          const std::uint64_t got = g.neg_set(t.closure(g.neg_set(v)));
          if (got & ~u) {
            fail_item(r, {}, {u, v, got});
            break;
          }
        }
        if (r.status != "pass") break;
      }
      rep.items.push_back(std::move(r));
    }
  }

  {
    const char* st = "cl(M) inside -U+M for every open U containing 0";
    if (!rep.paratopological) {
      rep.items.push_back(skipped_item("closure-inside-translate", st, need_para));
    } else {
      // -U+M shrinks with U, so the minimal neighborhood of 0 is the
      // hardest case and covers every other open U containing 0.
      LemmaItemReport r = passing_item("closure-inside-translate", st);
      const std::uint64_t nu = g.neg_set(t.min_nbhd(0));
      auto check = [&](std::uint64_t m) {
        const std::uint64_t cl = t.closure(m);
        const std::uint64_t bound = g.add_sets(nu, m);
        if (cl & ~bound) {
          fail_item(r, {}, {m, cl, bound});
          return false;
        }
        return true;
      };
      if (n <= kExhaustiveSubsetOrder) {
        for (std::uint64_t m = 0; m <= t.full_mask(); ++m)
          if (!check(m)) break;
      } else {
        r.sampled = true;
        r.note = "subsets sampled";
        bool ok = check(0) && check(t.full_mask());
        for (int x = 0; x < n && ok; ++x)
          ok = check(1ULL << x) && check(t.min_nbhd(x));
        std::uint64_t s = seed;
        for (std::size_t i = 0; i < kSubsetSamples && ok; ++i)
          ok = check(splitmix64(s) & t.full_mask());
      }
      rep.items.push_back(std::move(r));
    }
  }

  {
    const char* st = "gyr[a,b](B) = B for B = cl(min_nbhd[0])";
    if (!rep.paratopological) {
      rep.items.push_back(skipped_item("b-gyr-invariant", st, need_para));
    } else {
      LemmaItemReport r = passing_item("b-gyr-invariant", st);
      const std::uint64_t b = t.closure(t.min_nbhd(0));
      for (int x = 0; x < n && r.status == "pass"; ++x)
        for (int y = 0; y < n; ++y) {
          const std::uint64_t image = g.gyr_image(x, y, b);
          if (image != b) {
            fail_item(r, {x, y}, {b, image});
            break;
          }
        }
      rep.items.push_back(std::move(r));
    }
  }

  return rep;
}

namespace {

bool is_strongly_topological_pair(const FiniteGyrogroup& g, const FiniteTopology& t) {
  if (!check_paratopological(g, t).holds) return false;
  if (!check_strongly_paratopological(g, t).holds) return false;
  return check_inverse_continuous(g, t).holds;
}

struct SubspacePair {
  FiniteGyrogroup group;
  FiniteTopology topology;
};

// H (a subgyrogroup mask) as a gyrogroup in its own right, carrying the
// subspace topology: elements relabeled in ascending order, minimal
// neighborhoods restricted to H.
std::optional<SubspacePair> subspace_pair(const FiniteGyrogroup& g, const FiniteTopology& t,
                                          std::uint64_t h) {
  std::vector<int> elems;
  for (int x = 0; x < g.order(); ++x)
    if (h >> x & 1) elems.push_back(x);
  const int k = static_cast<int>(elems.size());
  std::vector<int> idx(g.order(), -1);
  for (int i = 0; i < k; ++i) idx[elems[i]] = i;
  std::vector<std::vector<int>> add(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int s = g.add(elems[i], elems[j]);
      if (idx[s] < 0) return std::nullopt;
      add[i][j] = idx[s];
    }
  ValidationOutcome out = validate_table(add);
  if (!out.ok()) return std::nullopt;
  std::vector<std::uint64_t> mins(k, 0);
  for (int i = 0; i < k; ++i) {
    const std::uint64_t m = t.min_nbhd(elems[i]) & h;
    for (int j = 0; j < k; ++j)
      if (m >> elems[j] & 1) mins[i] |= 1ULL << j;
  }
  return SubspacePair{std::move(*out.group), FiniteTopology::from_min_nbhds(k, mins)};
}

// True when H qualifies for the extension hypotheses: invariant
// L-subgyrogroup whose subspace pair and quotient pair are both strongly
// topological.
bool extension_hypotheses_hold(const FiniteGyrogroup& g, const FiniteTopology& t,
                               std::uint64_t h) {
  if (!is_subgyrogroup(g, h)) return false;
  if (!is_l_subgyrogroup(g, h)) return false;
  if (!is_invariant_subgyrogroup(g, h)) return false;
  auto sub = subspace_pair(g, t, h);
  if (!sub || !is_strongly_topological_pair(sub->group, sub->topology)) return false;
  QuotientResult qr = quotient_gyrogroup(g, h);
  if (!qr.ok()) return false;
  QuotientTopologyResult qt = quotient_topology(t, qr.cosets);
  return is_strongly_topological_pair(*qr.quotient, qt.space);
}

TheoremInstanceReport make_instance(std::string id, std::string description,
                                    std::vector<TheoremHypothesis> hyps,
                                    bool conclusion) {
  TheoremInstanceReport r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.hypotheses = std::move(hyps);
  r.applicable = true;
  for (const auto& h : r.hypotheses) r.applicable = r.applicable && h.holds;
  r.conclusion_holds = conclusion;
  r.status = !r.applicable ? "inapplicable" : (conclusion ? "pass" : "REFUTATION");
  return r;
}

std::string mask_string(std::uint64_t m, int n) {
  std::string s = "{";
  for (int i = 0; i < n; ++i)
    if (m >> i & 1) {
      if (s.size() > 1) s += ",";
      s += std::to_string(i);
    }
  return s + "}";
}

}  // namespace

TheoremSuiteReport check_theorem_instances(const FiniteGyrogroup& g, const FiniteTopology& t) {
  TheoremSuiteReport rep;
  const int n = g.order();

  const bool para = check_paratopological(g, t).holds;
  const bool strongly = para && check_strongly_paratopological(g, t).holds;
  const bool inv_cont = check_inverse_continuous(g, t).holds;
  const bool inv_at_zero = check_inverse_continuous_at(g, t, 0).holds;
  const bool gyrocomm = is_gyrocommutative(g);
  const bool periodic = check_topologically_periodic(g, t).holds;
  const SeparationRecord sep = check_separation(t);

  rep.instances.push_back(make_instance(
      "compact-hausdorff",
      "paratopological + Hausdorff => inverse continuous (compactness automatic)",
      {{"paratopological", para}, {"hausdorff", sep.hausdorff}}, inv_cont));

  rep.instances.push_back(make_instance(
      "locally-compact-hausdorff-strong",
      "strongly paratopological + Hausdorff => inverse continuous",
      {{"strongly-paratopological", strongly}, {"hausdorff", sep.hausdorff}}, inv_cont));

  {
    TheoremInstanceReport r = make_instance(
        "inverse-continuity-at-identity",
        "strongly paratopological => inverse continuous at 0 iff continuous everywhere",
        {{"strongly-paratopological", strongly}}, inv_at_zero == inv_cont);
    r.details.push_back(std::string("inverse continuous at 0: ") +
                        (inv_at_zero ? "yes" : "no"));
    r.details.push_back(std::string("inverse continuous everywhere: ") +
                        (inv_cont ? "yes" : "no"));
    rep.instances.push_back(std::move(r));
  }

  {
    bool exists_h = false;
    std::uint64_t found = 0;
    std::vector<std::uint64_t> candidates;
    bool exhaustive = n <= kExhaustiveSubgroupOrder;
    if (exhaustive) {
      for (std::uint64_t h = 1; h <= g.full_mask(); h += 2) candidates.push_back(h);
    } else {
      for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
          candidates.push_back(
              subgyrogroup_closure(g, (1ULL << x) | (1ULL << y) | 1ULL));
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()),
                       candidates.end());
    }
    for (std::uint64_t h : candidates)
      if (extension_hypotheses_hold(g, t, h)) {
        exists_h = true;
        found = h;
        break;
      }
    TheoremInstanceReport r = make_instance(
        "extension-by-invariant-subgyrogroup",
        "strongly paratopological + invariant L-subgyrogroup H with H and G/H "
        "strongly topological => inverse continuous",
        {{"strongly-paratopological", strongly},
         {"exists-qualifying-invariant-subgyrogroup", exists_h}},
        inv_cont);
    r.note =
        "subspace topology adopted on H; quotient carries the preimage topology";
    if (exists_h) r.details.push_back("qualifying H: " + mask_string(found, n));
    if (!exhaustive)
      r.details.push_back("candidate subgyrogroups limited to 2-generated ones");
    rep.instances.push_back(std::move(r));
  }

  rep.instances.push_back(make_instance(
      "locally-compact-gyrocommutative-strong",
      "strongly paratopological + gyrocommutative => inverse continuous",
      {{"strongly-paratopological", strongly}, {"gyrocommutative", gyrocomm}}, inv_cont));

  rep.instances.push_back(make_instance(
      "regular-feebly-compact-strong",
      "strongly paratopological + regular => inverse continuous (feeble "
      "compactness automatic)",
      {{"strongly-paratopological", strongly}, {"regular", sep.regular}}, inv_cont));

  rep.instances.push_back(make_instance(
      "countably-compact-periodic",
      "strongly paratopological + Hausdorff + topologically periodic => "
      "inverse continuous",
      {{"strongly-paratopological", strongly},
       {"hausdorff", sep.hausdorff},
       {"topologically-periodic", periodic}},
      inv_cont));

  {
    // F ranges over subsets of an open O and V over opens containing 0;
    // F = O and V = min_nbhd[0] are the extreme cases, so the check
    // reduces to O + min_nbhd[0] and min_nbhd[0] + O staying inside O.
    bool concl = true;
    std::uint64_t bad_open = 0;
    const std::uint64_t v0 = t.min_nbhd(0);
    if (v0 != 1) {
      for (std::uint64_t o : t.opens()) {
        if ((g.add_sets(o, v0) & ~o) || (g.add_sets(v0, o) & ~o)) {
          concl = false;
          bad_open = o;
          break;
        }
      }
    }
    TheoremInstanceReport r = make_instance(
        "compact-subset-neighborhood",
        "paratopological => every subset F of an open O admits an open V at 0 "
        "with F+V and V+F inside O",
        {{"paratopological", para}}, concl);
    if (v0 == 1)
      r.details.push_back("min_nbhd[0] = {0}, so O+V = V+O = O for every open O");
    if (!concl) r.details.push_back("offending open: " + mask_string(bad_open, n));
    rep.instances.push_back(std::move(r));
  }

  return rep;
}

}  // namespace gyro
