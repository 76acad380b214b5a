#include <benchmark/benchmark.h>

#include <random>

#include "amt/cox.hpp"
#include "amt/lattice.hpp"

namespace {

amt::IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);
  amt::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(amt::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_CoxPresentation(benchmark::State& state) {
  const auto f = state.range(0) == 0 ? amt::hirzebruch(3) : amt::projective_space(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(amt::cox_presentation(f));
}
BENCHMARK(BM_CoxPresentation)->Arg(0)->Arg(2)->Arg(4);

}  // namespace
