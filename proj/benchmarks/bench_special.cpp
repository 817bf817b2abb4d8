#include <benchmark/benchmark.h>

#include "carlitz/special.hpp"

using namespace carlitz;

namespace {

// Factorials come from the field cache after the first iteration, so this
// measures the quotient arithmetic.
void BM_BinomK(benchmark::State& state) {
  const Field& f = Field::get(static_cast<std::uint32_t>(state.range(1)));
  const auto k = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binomK_from_factorials(f, k, k / 2));
}
BENCHMARK(BM_BinomK)->ArgsProduct({{4, 6, 8}, {2, 3}});

void BM_CarlitzF(benchmark::State& state) {
  const Field& f = Field::get(2);
  const auto k = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(carlitz_f(f, k));
}
BENCHMARK(BM_CarlitzF)->DenseRange(2, 10, 4);

void BM_GenfunBinom(benchmark::State& state) {
  const Field& f = Field::get(2);
  const auto T = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(genfun_binom(f, T));
}
BENCHMARK(BM_GenfunBinom)->Arg(6)->Arg(10);

void BM_PascalSweep(benchmark::State& state) {
  const Field& f = Field::get(3);
  const auto k_max = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    bool ok = true;
    for (std::uint32_t k = 0; k <= k_max; ++k)
      for (std::uint32_t m = 0; m <= k; ++m) ok = ok && pascal_check(f, k, m);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_PascalSweep)->Arg(8);

void BM_PlaceSweep(benchmark::State& state) {
  const Field& f = Field::get(2);
  for (auto _ : state) benchmark::DoNotOptimize(place_integrality_sweep(f, 8, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_PlaceSweep)->Arg(2)->Arg(3);

}  // namespace
