#include <benchmark/benchmark.h>

#include "amt/glsm.hpp"

namespace {

void BM_KempfNessSolve(benchmark::State& state) {
  const amt::GLSMProblem p{amt::IntMatrix{{1, -1, 1, 0}, {0, 1, 0, 1}}, {1, 3}, {1, 2, amt::Rational(1, 2), 3}};
  for (auto _ : state) benchmark::DoNotOptimize(amt::kempf_ness_solve(p));
}
BENCHMARK(BM_KempfNessSolve);

void BM_UnstableSupports(benchmark::State& state) {
  // Charges of P^1 x P^1 x P^1 x P^1.
  amt::IntMatrix q(4, 8);
  for (std::size_t a = 0; a < 4; ++a) q(a, 2 * a) = q(a, 2 * a + 1) = 1;
  const amt::RatVector r{1, 1, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(amt::unstable_supports(q, r));
}
BENCHMARK(BM_UnstableSupports);

}  // namespace
