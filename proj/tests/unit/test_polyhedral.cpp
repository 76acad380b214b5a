#include <doctest.h>

#include "amt/polyhedral.hpp"

using namespace amt;

TEST_CASE("feasible systems return a satisfying point") {
  const std::vector<LinearConstraint> sys{greater({1, 0}), greater({0, 1}), less_equal({1, 1}, 1)};
  const auto x = find_feasible_point(2, sys);
  REQUIRE(x.has_value());
  for (const auto& c : sys) CHECK(satisfies(*x, c));
}

TEST_CASE("strictness matters") {
  CHECK(find_feasible_point(1, {greater_equal({1}), less_equal({1})}).has_value());
  CHECK_FALSE(find_feasible_point(1, {greater({1}), less_equal({1})}).has_value());
  CHECK_FALSE(find_feasible_point(2, {greater({1, 1}), less({1, 0}), less({0, 1})}).has_value());
}

TEST_CASE("equalities and zero preference") {
  const auto x = find_feasible_point(3, {equal({1, 1, 0}, 2), greater_equal({0, 0, 1}, -5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == 2);
  CHECK((*x)[2] == 0);
  CHECK(find_feasible_point(2, {}) == RatVector{0, 0});
  CHECK_FALSE(find_feasible_point(1, {equal({0}, 1)}).has_value());
}
