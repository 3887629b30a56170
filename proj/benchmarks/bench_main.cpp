#include <benchmark/benchmark.h>

#include <random>

#include "burau/fox.hpp"
#include "burau/spectral.hpp"

using namespace burau;

namespace {

BraidWord long_braid(int strands, int length) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> letters(static_cast<std::size_t>(length));
  for (int& l : letters) l = gen(rng) * (sign(rng) ? 1 : -1);
  return BraidWord(strands, std::move(letters));
}

void BM_BurauMatrix(benchmark::State& state) {
  const auto w = long_braid(6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(burau_matrix(w));
}
BENCHMARK(BM_BurauMatrix)->Arg(8)->Arg(32)->Arg(64);

void BM_ExactCharpoly(benchmark::State& state) {
  const auto m = burau_matrix(long_braid(static_cast<int>(state.range(0)), 20)).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(m));
}
BENCHMARK(BM_ExactCharpoly)->DenseRange(4, 10, 3);

void BM_Sweep(benchmark::State& state) {
  const auto m = burau_matrix(BraidWord(4, {1, -2, -3})).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_unit_circle(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Sweep)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Roots(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<Complex> c(static_cast<std::size_t>(state.range(0) + 1));
  for (auto& x : c) x = {u(rng), u(rng)};
  c.back() = 1.0;
  const ComplexPolynomial p(c);
  for (auto _ : state) benchmark::DoNotOptimize(roots(p));
}
BENCHMARK(BM_Roots)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
