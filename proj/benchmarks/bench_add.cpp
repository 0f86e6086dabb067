#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "xadd/add.hpp"
#include "xadd/oracle.hpp"

namespace {

using namespace xadd;

Float random_float(std::mt19937_64& rng, prec_t n, exp_t e) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (auto& c : s) c = (rng() & 1) ? '1' : '0';
  s.front() = '1';
  return make_float(1, e, n, s);
}

// Equal precisions, overlapping mantissas.
void BM_AddOverlap(benchmark::State& state) {
  const auto p = static_cast<prec_t>(state.range(0));
  std::mt19937_64 rng(1);
  const Float x = random_float(rng, p, 0);
  const Float y = random_float(rng, p, -3);
  for (auto _ : state) benchmark::DoNotOptimize(add_positive(x, y, Precision(p), RoundingMode::NearestEven));
}
BENCHMARK(BM_AddOverlap)->RangeMultiplier(4)->Range(64, 16384);

// Long operands rounded to a short target: the scan should stop early.
void BM_AddShortTarget(benchmark::State& state) {
  const auto m = static_cast<prec_t>(state.range(0));
  std::mt19937_64 rng(2);
  const Float x = random_float(rng, m, 0);
  const Float y = random_float(rng, m, -5);
  for (auto _ : state) benchmark::DoNotOptimize(add_positive(x, y, Precision(53), RoundingMode::NearestEven));
}
BENCHMARK(BM_AddShortTarget)->RangeMultiplier(4)->Range(64, 65536);

// Worst case: y is the complement of x's tail, so the ones run spans both.
void BM_AddCarryChain(benchmark::State& state) {
  const auto m = static_cast<prec_t>(state.range(0));
  const Float x = make_float(1, 0, m, std::string(static_cast<std::size_t>(m), '1'));
  std::string yb(static_cast<std::size_t>(m), '0');
  yb.front() = '1';
  const Float y = make_float(1, -(m - 1), m, yb);
  for (auto _ : state) benchmark::DoNotOptimize(add_positive(x, y, Precision(53), RoundingMode::NearestEven));
}
BENCHMARK(BM_AddCarryChain)->RangeMultiplier(4)->Range(64, 65536);

void BM_AddHole(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const Float x = random_float(rng, 256, 0);
  const Float y = random_float(rng, 256, -100000);
  for (auto _ : state) benchmark::DoNotOptimize(add_positive(x, y, Precision(128), RoundingMode::Up));
}
BENCHMARK(BM_AddHole);

void BM_OracleOverlap(benchmark::State& state) {
  const auto p = static_cast<prec_t>(state.range(0));
  std::mt19937_64 rng(1);
  const Float x = random_float(rng, p, 0);
  const Float y = random_float(rng, p, -3);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::exact_add_round(x, y, Precision(p), RoundingMode::NearestEven));
}
BENCHMARK(BM_OracleOverlap)->RangeMultiplier(4)->Range(64, 16384);

}  // namespace

BENCHMARK_MAIN();
