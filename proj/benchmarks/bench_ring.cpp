#include <benchmark/benchmark.h>

#include "carlitz/ring.hpp"
#include "carlitz/special.hpp"

using namespace carlitz;

namespace {

// (tau + d_s + Delta_1 + x)^e in normal form.
RingElem power_of_sum(const Field& f, std::uint32_t e) {
  const RingElem g = RingElem::tau(f, 1) + RingElem::ds(f, 1) + RingElem::delta(f, 1, 1) +
                     RingElem::scalar(f, 1, PerfectRational::x(f));
  RingElem r = RingElem::scalar(f, 1, PerfectRational::one(f));
  for (std::uint32_t i = 0; i < e; ++i) r = r * g;
  return r;
}

void BM_RingMul(benchmark::State& state) {
  const Field& f = Field::get(2);
  const auto e = static_cast<std::uint32_t>(state.range(0));
  const RingElem a = power_of_sum(f, e), b = power_of_sum(f, e);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>(a.terms().size());
}
BENCHMARK(BM_RingMul)->DenseRange(1, 3);

void BM_RingApply(benchmark::State& state) {
  const Field& f = Field::get(2);
  const RingElem a = power_of_sum(f, static_cast<std::uint32_t>(state.range(0)));
  const TruncatedSeries c = carlitz_module_trunc(f, 8);
  for (auto _ : state) benchmark::DoNotOptimize(ring_apply(a, c));
}
BENCHMARK(BM_RingApply)->DenseRange(1, 2);

void BM_OpMonomials(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(op_monomials(2, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_OpMonomials)->Arg(4)->Arg(8);

}  // namespace
