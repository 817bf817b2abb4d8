#include <benchmark/benchmark.h>

#include "carlitz/gkdim.hpp"

using namespace carlitz;

namespace {

void BM_FiltrationCarlitz(benchmark::State& state) {
  const Field& f = Field::get(2);
  const auto j_max = static_cast<std::uint32_t>(state.range(0));
  const GkFunction g = gk_function(f, "carlitz", j_max + 4);
  GkOptions opts;
  opts.annihilators = g.annihilators;
  // The first call builds the evaluation field; keep that out of the timing.
  benchmark::DoNotOptimize(filtration_dims(g.series, 1, opts));
  for (auto _ : state) benchmark::DoNotOptimize(filtration_dims(g.series, j_max, opts));
}
BENCHMARK(BM_FiltrationCarlitz)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

// Without annihilators every level needs an evaluation rank plus a
// certificate, so exact and probabilistic modes diverge.
void BM_FiltrationRankMode(benchmark::State& state) {
  const Field& f = Field::get(2);
  const GkFunction g = gk_function(f, "binom", 7);
  GkOptions opts;
  opts.rank.mode = state.range(0) == 0 ? RankMode::kExact : RankMode::kProbabilistic;
  for (auto _ : state) benchmark::DoNotOptimize(filtration_dims(g.series, 2, opts));
}
BENCHMARK(BM_FiltrationRankMode)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PolyFiltration(benchmark::State& state) {
  const Field& f = Field::get(2);
  const GkFunction g = gk_function(f, "poly", 10, "s^q");
  GkOptions opts;
  opts.annihilators = g.annihilators;
  for (auto _ : state) benchmark::DoNotOptimize(filtration_dims(g.series, 6, opts));
}
BENCHMARK(BM_PolyFiltration)->Unit(benchmark::kMillisecond);

}  // namespace
