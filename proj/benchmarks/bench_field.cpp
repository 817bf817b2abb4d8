#include <benchmark/benchmark.h>

#include <random>

#include "carlitz/fq_poly.hpp"
#include "carlitz/perfect.hpp"

using namespace carlitz;

namespace {

FqPoly dense(const Field& f, std::size_t deg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> c(deg + 1);
  for (auto& v : c) v = static_cast<std::uint8_t>(rng() % f.q());
  c.back() = 1;
  return FqPoly(f, std::move(c));
}

// Schoolbook below the Kronecker threshold, GMP above it.
void BM_FqPolyMul(benchmark::State& state) {
  const Field& f = Field::get(static_cast<std::uint32_t>(state.range(1)));
  const auto deg = static_cast<std::size_t>(state.range(0));
  const FqPoly a = dense(f, deg, 1), b = dense(f, deg, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FqPolyMul)->ArgsProduct({{16, 64, 256, 1024, 4096}, {2, 3}});

void BM_FqPolyGcd(benchmark::State& state) {
  const Field& f = Field::get(2);
  const auto deg = static_cast<std::size_t>(state.range(0));
  const FqPoly g = dense(f, deg / 4, 3);
  const FqPoly a = dense(f, deg, 4) * g, b = dense(f, deg, 5) * g;
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_FqPolyGcd)->Arg(64)->Arg(256)->Arg(1024);

// [k] = x^{q^k} - x is sparse; products of brackets exercise the stride path.
void BM_BracketProduct(benchmark::State& state) {
  const Field& f = Field::get(2);
  const auto k = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    PerfectRational r = PerfectRational::one(f);
    for (std::uint32_t i = 1; i <= k; ++i) r *= bracket(f, i);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_BracketProduct)->DenseRange(4, 12, 4);

void BM_RationalAdd(benchmark::State& state) {
  const Field& f = Field::get(3);
  const PerfectRational a = bracket(f, 3) / bracket(f, 2);
  const PerfectRational b = bracket(f, 1).qth_root() / bracket(f, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_RationalAdd);

}  // namespace
