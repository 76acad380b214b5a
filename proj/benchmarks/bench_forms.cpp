#include <benchmark/benchmark.h>

#include <random>

#include "amt/forms.hpp"

namespace {

amt::BinaryForm random_split(std::size_t degree, std::mt19937_64& rng) {
  amt::BinaryForm f = amt::BinaryForm::constant(1);
  for (std::size_t i = 0; i < degree; ++i)
    f = amt::mul(f, amt::linear_form_at({amt::Rational(static_cast<long>(rng() % 9) - 4), amt::Rational(1)}));
  return f;
}

void BM_Gcd(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto d = static_cast<std::size_t>(state.range(0));
  const std::vector<amt::BinaryForm> fs{random_split(d, rng), random_split(d, rng), random_split(d, rng)};
  for (auto _ : state) benchmark::DoNotOptimize(amt::gcd(fs));
}
BENCHMARK(BM_Gcd)->Arg(4)->Arg(8)->Arg(16);

void BM_Substitute(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto f = random_split(static_cast<std::size_t>(state.range(0)), rng);
  const amt::Mobius g(2, 1, -1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(amt::substitute(f, g));
}
BENCHMARK(BM_Substitute)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
