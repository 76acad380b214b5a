#include <doctest.h>

#include <random>

#include "amt/error.hpp"
#include "amt/lattice.hpp"
#include "oracles.hpp"

using namespace amt;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(1, 6), entry(-5, 5);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  return m;
}

bool unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  const auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(s.D == IntMatrix{{1, 0}, {0, 6}});
  CHECK(s.U * IntMatrix{{2, 0}, {0, 3}} * s.V == s.D);

  CHECK(smith_normal_form(IntMatrix(2, 2)).D.is_zero());
  CHECK(smith_normal_form(IntMatrix::identity(4)).D == IntMatrix::identity(4));
  CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).invariant_factors() ==
        IntVector{2, 6, 12});
}

TEST_CASE("smith normal form handles empty shapes") {
  const auto s = smith_normal_form(IntMatrix(0, 3));
  CHECK(s.rank() == 0);
  CHECK(s.V == IntMatrix::identity(3));
  CHECK(integer_kernel(IntMatrix(0, 3)).size() == 3);
}

TEST_CASE("smith normal form agrees with determinantal divisors on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix a = random_matrix(rng);
    const auto s = smith_normal_form(a);
    REQUIRE(s.U * a * s.V == s.D);
    CHECK(unimodular(s.U));
    CHECK(unimodular(s.V));
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    const IntVector d = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
      else CHECK(d[i + 1] == 0);
    }
    CHECK(s.rank() == oracle::bareiss_rank(a));
    if (a.rows() <= 4 && a.cols() <= 4) CHECK(d == oracle::determinantal_invariants(a));
  }
}

TEST_CASE("integer kernel") {
  const auto k = integer_kernel(IntMatrix{{1, 1, 1}});
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(v[0] + v[1] + v[2] == 0);
  CHECK(oracle::same_lattice(k, {{1, -1, 0}, {0, 1, -1}}));

  CHECK(integer_kernel(IntMatrix::identity(3)).empty());

  const auto k2 = integer_kernel(IntMatrix{{2, -2}});
  REQUIRE(k2.size() == 1);
  CHECK((k2[0] == IntVector{1, 1} || k2[0] == IntVector{-1, -1}));
}

TEST_CASE("integer kernel rank identity on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = random_matrix(rng);
    const auto k = integer_kernel(a);
    for (const auto& v : k) {
      const IntVector av = a * v;
      CHECK(std::all_of(av.begin(), av.end(), [](const Integer& x) { return x == 0; }));
    }
    const std::size_t krank = k.empty() ? 0 : oracle::bareiss_rank(IntMatrix::from_rows(k, a.cols()));
    CHECK(krank == k.size());
    CHECK(krank + oracle::bareiss_rank(a) == a.cols());
    // The kernel is saturated: a primitive sublattice.
    if (!k.empty()) CHECK(oracle::same_lattice(saturate(k), k));
  }
}

TEST_CASE("saturate") {
  CHECK(oracle::same_lattice(saturate({{2, 0}}), {{1, 0}}));
  CHECK(saturate({}).empty());
  CHECK(oracle::same_lattice(saturate({{1, 1}, {1, -1}}), {{1, 0}, {0, 1}}));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<IntVector> vs(1 + trial % 3, IntVector(4));
    for (auto& v : vs)
      for (auto& x : v) x = entry(rng);
    const auto s1 = saturate(vs);
    const auto s2 = saturate(s1);
    CHECK(oracle::same_lattice(s1, s2));
    for (const auto& v : vs) CHECK(oracle::in_lattice(s1, v));
  }
}

TEST_CASE("solve_integer") {
  CHECK(solve_integer(IntMatrix{{2}}, {4}) == IntVector{2});
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, {3}).has_value());
  const IntMatrix a{{1, -1, 1, 0}, {0, 1, 0, 1}};
  const auto x = solve_integer(a, {1, 1});
  REQUIRE(x.has_value());
  CHECK(a * *x == IntVector{1, 1});
  CHECK_THROWS_AS(solve_integer(a, {1}), DimensionError);
}

TEST_CASE("solve_rational and determinant") {
  const auto x = solve_rational(IntMatrix{{2, 0}, {0, 3}}, {1, 1});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1, 2));
  CHECK((*x)[1] == Rational(1, 3));
  CHECK_FALSE(solve_rational(IntMatrix{{1, 1}, {1, 1}}, {0, 1}).has_value());
  CHECK(determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("primitive vectors") {
  CHECK(is_primitive({3, 5}));
  CHECK_FALSE(is_primitive({2, 4}));
  CHECK_FALSE(is_primitive({0, 0}));
  CHECK(gcd_of({-4, 6}) == 2);
}
