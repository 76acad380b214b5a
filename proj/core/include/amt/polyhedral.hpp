#pragma once

// Exact feasibility of small systems of linear (in)equalities over Q by
// Fourier-Motzkin elimination. Intended for a handful of variables (cone
// membership in the dual of a rank <= 4 lattice, fan face checks); the
// constraint count grows quadratically per eliminated variable.

#include <optional>
#include <vector>

#include "amt/lattice.hpp"

namespace amt {

enum class Relation { LessEqual, Less, Equal };

// coeffs . x  (relation)  rhs
struct LinearConstraint {
  RatVector coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs = 0;
};

LinearConstraint less_equal(RatVector coeffs, Rational rhs = 0);
LinearConstraint less(RatVector coeffs, Rational rhs = 0);
LinearConstraint greater_equal(RatVector coeffs, Rational rhs = 0);
LinearConstraint greater(RatVector coeffs, Rational rhs = 0);
LinearConstraint equal(RatVector coeffs, Rational rhs = 0);

RatVector to_rational(const IntVector& v);

// A point satisfying every constraint, or nullopt when the system is
// infeasible. Deterministic; prefers 0 for each coordinate when allowed.
std::optional<RatVector> find_feasible_point(std::size_t dimension,
                                             const std::vector<LinearConstraint>& system);

bool satisfies(const RatVector& x, const LinearConstraint& c);

}  // namespace amt
