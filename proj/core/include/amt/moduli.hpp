#pragma once

// Genus-0 A-twisted moduli data: Y_d, the vanishing locus F_d, and the
// quotient W_d = (Y_d - F_d) / G, exposed through dimension counts and
// orbit-level predicates.

#include <cstdint>
#include <random>

#include "amt/delta.hpp"
#include "amt/fan.hpp"

namespace amt {

struct ModuliSummary {
  Multidegree degree;
  std::int64_t y_dim = 0;  // sum_rho (d_rho + 1)
  std::int64_t g_dim = 0;  // pic rank = |rays| - n
  std::int64_t w_dim = 0;  // y_dim - g_dim, assuming generically trivial stabilizers
};

// Note attached to every reported w_dim.
inline constexpr const char* kOrbitDimensionCaveat =
    "w_dim = y_dim - g_dim is the orbit-space dimension assuming a generically trivial stabilizer";

// Throws DomainError for an inadmissible or negative multidegree.
ModuliSummary summarize(const Fan& f, const Multidegree& d);

// c lies in F_d, i.e. the induced map P^1 -> C^rays lands in V(I) generically.
bool in_F_d(const WeakDeltaCollection& c);

using Rng = std::mt19937_64;

// Maximum number of rejected draws before sample() gives up.
inline constexpr int kSampleRejectionBudget = 1000;

// Random point of Y_d - F_d: integer coefficients in [-bound, bound], redrawn
// until nonvanishing. Advances `rng`. Throws DomainError on a bad multidegree
// or when the rejection budget runs out.
WeakDeltaCollection sample(std::shared_ptr<const Fan> fan, const Multidegree& d, Rng& rng,
                           std::int64_t coeff_bound);

// Uniform integer in [-bound, bound] drawn from rng.
std::int64_t draw_bounded(Rng& rng, std::int64_t bound);

}  // namespace amt
