#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/backend.hpp"

namespace gyro {

enum class LawId {
  g1,
  g2,
  g3,
  g4,
  t1,
  t2,
  t3,
  t4,
  t5,
  t6,
  t7,
  t8,
  t9,
  t10,
  t11,
  t12,
  gyrocommutative,
  gc1,
  gc2,
  gc3,
};

inline constexpr std::array<LawId, 20> all_laws = {
    LawId::g1,  LawId::g2,  LawId::g3,  LawId::g4,  LawId::t1,
    LawId::t2,  LawId::t3,  LawId::t4,  LawId::t5,  LawId::t6,
    LawId::t7,  LawId::t8,  LawId::t9,  LawId::t10, LawId::t11,
    LawId::t12, LawId::gyrocommutative, LawId::gc1, LawId::gc2, LawId::gc3};

constexpr std::string_view law_name(LawId id) {
  switch (id) {
    case LawId::g1: return "G1";
    case LawId::g2: return "G2";
    case LawId::g3: return "G3";
    case LawId::g4: return "G4";
    case LawId::t1: return "T1.3-1";
    case LawId::t2: return "T1.3-2";
    case LawId::t3: return "T1.3-3";
    case LawId::t4: return "T1.3-4";
    case LawId::t5: return "T1.3-5";
    case LawId::t6: return "T1.3-6";
    case LawId::t7: return "T1.3-7";
    case LawId::t8: return "T1.3-8";
    case LawId::t9: return "T1.3-9";
    case LawId::t10: return "T1.3-10";
    case LawId::t11: return "T1.3-11";
    case LawId::t12: return "T1.3-12";
    case LawId::gyrocommutative: return "gyrocommutative";
    case LawId::gc1: return "GC-1";
    case LawId::gc2: return "GC-2";
    case LawId::gc3: return "GC-3";
  }
  return "?";
}

constexpr int law_arity(LawId id) {
  switch (id) {
    case LawId::g1:
    case LawId::g2: return 1;
    case LawId::g3: return 4;
    case LawId::g4:
    case LawId::t1:
    case LawId::t2:
    case LawId::t6:
    case LawId::t8:
    case LawId::t9:
    case LawId::t11: return 3;
    default: return 2;
  }
}

// Laws that only hold in gyrocommutative gyrogroups; they are skipped
// (not failed) when the gyrocommutativity check does not pass.
constexpr bool law_requires_gyrocommutative(LawId id) {
  return id == LawId::gc1 || id == LawId::gc2 || id == LawId::gc3;
}

// Evaluates one law on one argument tuple (tuple size = law_arity).
template <GyroBackend B>
bool eval_law(const B& b, LawId id, std::span<const typename B::element_type> t) {
  using E = typename B::element_type;
  const E zero = b.identity();
  switch (id) {
    case LawId::g1:  // two-sided identity
      return b.eq(b.add(zero, t[0]), t[0]) && b.eq(b.add(t[0], zero), t[0]);
    case LawId::g2:  // two-sided inverse
      return b.eq(b.add(b.neg(t[0]), t[0]), zero) &&
             b.eq(b.add(t[0], b.neg(t[0])), zero);
    case LawId::g3: {  // gyration is an automorphism + left gyroassociativity
      const E& a = t[0];
      const E& c = t[1];
      bool morphism = b.eq(gyr(b, a, c, b.add(t[2], t[3])),
                           b.add(gyr(b, a, c, t[2]), gyr(b, a, c, t[3])));
      bool assoc = b.eq(b.add(a, b.add(c, t[2])),
                        b.add(b.add(a, c), gyr(b, a, c, t[2])));
      return morphism && assoc;
    }
    case LawId::g4:  // left loop property
      return b.eq(gyr(b, b.add(t[0], t[1]), t[1], t[2]), gyr(b, t[0], t[1], t[2]));
    case LawId::t1:  // right gyroassociativity
      return b.eq(b.add(b.add(t[0], t[1]), t[2]),
                  b.add(t[0], b.add(t[1], gyr(b, t[1], t[0], t[2]))));
    case LawId::t2:  // right loop property
      return b.eq(gyr(b, t[0], t[1], t[2]),
                  gyr(b, t[0], b.add(t[1], t[0]), t[2]));
    case LawId::t3:  // left cancellation
      return b.eq(b.add(b.neg(t[0]), b.add(t[0], t[1])), t[1]);
    case LawId::t4:  // (a - b) [+] b = a
      return b.eq(coadd(b, b.add(t[0], b.neg(t[1])), t[1]), t[0]);
    case LawId::t5:  // (a [-] b) + b = a
      return b.eq(b.add(cosub(b, t[0], t[1]), t[1]), t[0]);
    case LawId::t6:  // gyration agrees with its defining expression
      return b.eq(gyr(b, t[0], t[1], t[2]),
                  b.add(b.neg(b.add(t[0], t[1])),
                        b.add(t[0], b.add(t[1], t[2]))));
    case LawId::t7:  // -(a+b) = gyr[a,b](-b-a)
      return b.eq(b.neg(b.add(t[0], t[1])),
                  gyr(b, t[0], t[1], b.add(b.neg(t[1]), b.neg(t[0]))));
    case LawId::t8:  // gyration commutes with negation
      return b.eq(gyr(b, t[0], t[1], b.neg(t[2])),
                  b.neg(gyr(b, t[0], t[1], t[2])));
    case LawId::t9:  // gyr[b,a] inverts gyr[a,b]
      return b.eq(gyr(b, t[1], t[0], gyr(b, t[0], t[1], t[2])), t[2]);
    case LawId::t10:  // -(a [+] b) = (-b) [+] (-a)
      return b.eq(b.neg(coadd(b, t[0], t[1])),
                  coadd(b, b.neg(t[1]), b.neg(t[0])));
    case LawId::t11:  // gyr[-a,-b] = gyr[a,b]
      return b.eq(gyr(b, b.neg(t[0]), b.neg(t[1]), t[2]),
                  gyr(b, t[0], t[1], t[2]));
    case LawId::t12:  // trivial gyrations at the identity
      return b.eq(gyr(b, t[0], zero, t[1]), t[1]) &&
             b.eq(gyr(b, zero, t[0], t[1]), t[1]);
    case LawId::gyrocommutative:  // a+b = gyr[a,b](b+a)
      return b.eq(b.add(t[0], t[1]),
                  gyr(b, t[0], t[1], b.add(t[1], t[0])));
    case LawId::gc1:  // -(a+b) = -a-b
      return b.eq(b.neg(b.add(t[0], t[1])),
                  b.add(b.neg(t[0]), b.neg(t[1])));
    case LawId::gc2:  // coaddition commutes
      return b.eq(coadd(b, t[0], t[1]), coadd(b, t[1], t[0]));
    case LawId::gc3:  // a [+] b = a + ((-a+b)+a)
      return b.eq(coadd(b, t[0], t[1]),
                  b.add(t[0], b.add(b.add(b.neg(t[0]), t[1]), t[0])));
  }
  throw std::logic_error("eval_law: unknown law");
}

enum class LawStatus { pass, fail, skipped };

constexpr std::string_view law_status_name(LawStatus s) {
  switch (s) {
    case LawStatus::pass: return "pass";
    case LawStatus::fail: return "fail";
    case LawStatus::skipped: return "skipped";
  }
  return "?";
}

template <typename Elem>
struct LawReport {
  LawId id{};
  LawStatus status{};
  std::vector<Elem> witness;  // first counterexample; empty when none
  std::uint64_t samples_checked = 0;
  std::string note;
};

enum class LawSuiteMode { exhaustive, sampled };

struct LawSuiteOptions {
  LawSuiteMode mode = LawSuiteMode::exhaustive;
  std::uint64_t samples = 10000;  // per law, sampled mode only
  std::uint64_t seed = 0;
};

template <typename Elem>
struct LawSuiteResult {
  LawSuiteMode mode{};
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<LawReport<Elem>> reports;

  bool all_pass() const {
    for (const auto& r : reports)
      if (r.status == LawStatus::fail) return false;
    return true;
  }
  const LawReport<Elem>* find(LawId id) const {
    for (const auto& r : reports)
      if (r.id == id) return &r;
    return nullptr;
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Exhaustive sweep over all order^arity tuples in row-major order.
template <FiniteCarrier B>
LawReport<typename B::element_type> check_law_exhaustive(const B& b, LawId id) {
  using E = typename B::element_type;
  LawReport<E> rep{id, LawStatus::pass, {}, 0, {}};
  const int arity = law_arity(id);
  const int n = b.order();
  std::vector<int> idx(arity, 0);
  std::vector<E> tuple;
  tuple.reserve(arity);
  while (true) {
    tuple.clear();
    for (int k = 0; k < arity; ++k) tuple.push_back(b.element(idx[k]));
    ++rep.samples_checked;
    if (!eval_law(b, id, std::span<const E>(tuple))) {
      rep.status = LawStatus::fail;
      rep.witness = tuple;
      return rep;
    }
    int k = arity - 1;
    while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
    if (k < 0) break;
  }
  return rep;
}

template <GyroBackend B>
LawReport<typename B::element_type> check_law_sampled(const B& b, LawId id,
                                                      std::uint64_t samples,
                                                      std::uint64_t seed,
                                                      std::uint64_t law_index) {
  using E = typename B::element_type;
  LawReport<E> rep{id, LawStatus::pass, {}, 0, {}};
  const int arity = law_arity(id);
  std::mt19937_64 rng(splitmix64(seed ^ (0xa5a5a5a5ULL + law_index)));
  std::vector<E> tuple;
  tuple.reserve(arity);
  for (std::uint64_t s = 0; s < samples; ++s) {
    tuple.clear();
    for (int k = 0; k < arity; ++k) tuple.push_back(b.sample(rng));
    ++rep.samples_checked;
    if (!eval_law(b, id, std::span<const E>(tuple))) {
      rep.status = LawStatus::fail;
      rep.witness = tuple;
      return rep;
    }
  }
  return rep;
}

}  // namespace detail

// Runs the full law suite. In exhaustive mode every law is checked on all
// tuples of the (finite) carrier; in sampled mode each law is checked on
// `samples` seeded pseudorandom tuples. The laws that hold only in
// gyrocommutative gyrogroups are evaluated only when the gyrocommutativity
// check passes; otherwise they are reported as skipped, and the
// gyrocommutativity report itself is marked skipped with the falsifying
// pair kept as an informational witness (absence of gyrocommutativity is a
// property, not an axiom violation).
template <GyroBackend B>
LawSuiteResult<typename B::element_type> run_law_suite(const B& b,
                                                       const LawSuiteOptions& opt) {
  using E = typename B::element_type;
  LawSuiteResult<E> result;
  result.mode = opt.mode;
  result.samples = opt.samples;
  result.seed = opt.seed;

  if (opt.mode == LawSuiteMode::sampled && opt.samples == 0)
    throw std::invalid_argument("run_law_suite: sample budget must be positive");

  auto check_one = [&](LawId id, std::uint64_t law_index) -> LawReport<E> {
    if (opt.mode == LawSuiteMode::exhaustive) {
      if constexpr (FiniteCarrier<B>) {
        return detail::check_law_exhaustive(b, id);
      } else {
        throw std::invalid_argument(
            "run_law_suite: exhaustive mode requires a finite carrier");
      }
    } else {
      return detail::check_law_sampled(b, id, opt.samples, opt.seed, law_index);
    }
  };

  bool gyrocommutative_holds = false;
  bool gyrocommutative_known = false;

  std::uint64_t law_index = 0;
  for (LawId id : all_laws) {
    if (id == LawId::gyrocommutative) {
      LawReport<E> rep = check_one(id, law_index++);
      gyrocommutative_known = true;
      gyrocommutative_holds = (rep.status == LawStatus::pass);
      if (!gyrocommutative_holds) {
        rep.status = LawStatus::skipped;
        rep.note = "carrier is not gyrocommutative";
      }
      result.reports.push_back(std::move(rep));
      continue;
    }
    if (law_requires_gyrocommutative(id)) {
      if (!gyrocommutative_known || !gyrocommutative_holds) {
        LawReport<E> rep{id, LawStatus::skipped, {}, 0,
                         "requires a gyrocommutative carrier"};
        result.reports.push_back(std::move(rep));
        ++law_index;
        continue;
      }
    }
    result.reports.push_back(check_one(id, law_index++));
  }
  return result;
}

}  // namespace gyro
