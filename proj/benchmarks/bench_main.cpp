#include <benchmark/benchmark.h>

#include "gjt/alpha.hpp"
#include "gjt/binomial.hpp"
#include "gjt/bounds.hpp"
#include "gjt/johnson.hpp"
#include "gjt/wilson.hpp"

namespace {

void BM_BinomCached(benchmark::State& state) {
  for (auto _ : state) {
    for (long n = 0; n <= 200; n += 7) benchmark::DoNotOptimize(gjt::binom(n, n / 3));
  }
}
BENCHMARK(BM_BinomCached);

void BM_BinomLarge(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gjt::binom(5000, 2500));
}
BENCHMARK(BM_BinomLarge);

void BM_EigOfVector(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const gjt::SchemeParams p(k * k - k + 1, k);
  const auto vec = gjt::SchemeVector::adjacency(gjt::LSystemSpec::missing_one(p, 1));
  for (auto _ : state) benchmark::DoNotOptimize(gjt::eig_of_vector(vec));
}
BENCHMARK(BM_EigOfVector)->DenseRange(3, 8);

void BM_ThetaPrimeLp(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto spec = gjt::LSystemSpec::missing_one(gjt::SchemeParams(k * k - k + 1, k), 1);
  for (auto _ : state) benchmark::DoNotOptimize(gjt::theta_prime_lp(spec));
}
BENCHMARK(BM_ThetaPrimeLp)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_ThetaLp(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto spec = gjt::LSystemSpec::missing_one(gjt::SchemeParams(3 * k - 3, k), 1);
  for (auto _ : state) benchmark::DoNotOptimize(gjt::theta_lp(spec));
}
BENCHMARK(BM_ThetaLp)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_Certificate(benchmark::State& state) {
  const gjt::SchemeParams p(57, 8);
  for (auto _ : state) benchmark::DoNotOptimize(gjt::build_certificate(p, 2));
}
BENCHMARK(BM_Certificate)->Unit(benchmark::kMillisecond);

void BM_Alpha94(benchmark::State& state) {
  const auto spec = gjt::LSystemSpec::missing_one(gjt::SchemeParams(9, 4), 1);
  for (auto _ : state) benchmark::DoNotOptimize(gjt::alpha_bruteforce(spec));
}
BENCHMARK(BM_Alpha94)->Unit(benchmark::kMillisecond);

void BM_AlphaPacking(benchmark::State& state) {
  const gjt::LSystemSpec spec(gjt::SchemeParams(12, 3), {0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(gjt::alpha_bruteforce(spec));
}
BENCHMARK(BM_AlphaPacking)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
