#pragma once

// Cox quotient presentation X = (C^{rays} - V(I)) / G of a smooth complete
// toric variety.

#include <cstddef>
#include <vector>

#include "amt/fan.hpp"
#include "amt/lattice.hpp"

namespace amt {

struct CoxPresentation {
  IntMatrix ray_matrix;     // |rays| x n, row rho is n_rho
  IntMatrix charge_matrix;  // pic_rank x |rays|, Q * B == 0
  std::size_t pic_rank = 0;
  IntVector pic_torsion;                     // invariant factors > 1 of coker(M -> Z^rays)
  std::vector<RaySet> irrelevant_generators;  // complement of each max cone, in cone order
  std::vector<RaySet> primitive_collections;
};

// Largest ray count accepted by the exhaustive primitive-collection search.
inline constexpr std::size_t kMaxPrimitiveSearchRays = 16;

// Requires a valid, smooth, complete fan; refuses torsion in Pic.
// Q's rows are integer_kernel(B^T), so Q is only determined up to GL(k, Z).
CoxPresentation cox_presentation(const Fan& f);

// Minimal ray subsets contained in no max cone, sorted lexicographically.
std::vector<RaySet> primitive_collections(const Fan& f);

// True iff a point whose vanishing coordinates are exactly `zero_set` lies
// outside V(I): some max cone contains zero_set.
bool outside_irrelevant_locus(const CoxPresentation& pres, const RaySet& zero_set);

}  // namespace amt
