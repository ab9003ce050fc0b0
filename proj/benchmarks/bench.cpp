#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gyro/cayley.hpp"
#include "gyro/continuity.hpp"
#include "gyro/einstein.hpp"
#include "gyro/enumerate.hpp"
#include "gyro/laws.hpp"
#include "gyro/search.hpp"
#include "gyro/theorems.hpp"
#include "gyro/topology.hpp"

namespace {

std::vector<std::vector<int>> cyclic(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  return rows;
}

gyro::FiniteGyrogroup group(int n) {
  return *gyro::validate_table(cyclic(n)).group;
}

void bench_einstein_add(benchmark::State& state) {
  gyro::EinsteinGyrogroup eg;
  std::mt19937_64 rng(7);
  gyro::EinsteinVelocity u = eg.sample(rng);
  gyro::EinsteinVelocity v = eg.sample(rng);
  for (auto _ : state) benchmark::DoNotOptimize(eg.add(u, v));
}
BENCHMARK(bench_einstein_add);

void bench_einstein_gyr(benchmark::State& state) {
  gyro::EinsteinGyrogroup eg;
  std::mt19937_64 rng(7);
  gyro::EinsteinVelocity u = eg.sample(rng);
  gyro::EinsteinVelocity v = eg.sample(rng);
  gyro::EinsteinVelocity w = eg.sample(rng);
  for (auto _ : state) benchmark::DoNotOptimize(gyro::gyr(eg, u, v, w));
}
BENCHMARK(bench_einstein_gyr);

void bench_validate_table(benchmark::State& state) {
  const auto rows = cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gyro::validate_table(rows));
}
BENCHMARK(bench_validate_table)->Arg(8)->Arg(16)->Arg(32);

void bench_law_suite_exhaustive(benchmark::State& state) {
  gyro::FiniteGyrogroup g = group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gyro::run_law_suite(g, {}));
}
BENCHMARK(bench_law_suite_exhaustive)->Arg(6)->Arg(10);

void bench_classify(benchmark::State& state) {
  gyro::FiniteGyrogroup g = group(8);
  gyro::FiniteTopology t = gyro::FiniteTopology::discrete(8);
  for (auto _ : state) benchmark::DoNotOptimize(gyro::classify(g, t));
}
BENCHMARK(bench_classify);

void bench_theorem_instances(benchmark::State& state) {
  gyro::FiniteGyrogroup g = group(6);
  gyro::FiniteTopology t = gyro::FiniteTopology::discrete(6);
  for (auto _ : state) benchmark::DoNotOptimize(gyro::check_theorem_instances(g, t));
}
BENCHMARK(bench_theorem_instances);

void bench_enumerate_gyrogroups(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t classes = 0;
    gyro::enumerate_gyrogroups(n, {}, [&](const gyro::FiniteGyrogroup&) {
      ++classes;
      return true;
    });
    benchmark::DoNotOptimize(classes);
  }
}
BENCHMARK(bench_enumerate_gyrogroups)->Arg(4)->Arg(5)->Arg(6);

void bench_enumerate_topologies(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gyro::count_topologies(n));
}
BENCHMARK(bench_enumerate_topologies)->Arg(3)->Arg(4)->Arg(5);

void bench_search_exhaust_order3(benchmark::State& state) {
  gyro::SearchOptions opt;
  opt.max_order = 3;
  opt.budget = 1000000;
  for (auto _ : state)
    benchmark::DoNotOptimize(gyro::search_counterexample("question-3.3", opt));
}
BENCHMARK(bench_search_exhaust_order3);

}  // namespace

BENCHMARK_MAIN();
