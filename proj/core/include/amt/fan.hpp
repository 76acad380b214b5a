#pragma once

// Simplicial fans in Z^n: validity, smoothness, completeness, walls, and the
// nef-prime-divisor test used as a stand-in for convexity of X.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "amt/lattice.hpp"

namespace amt {

// Sorted, duplicate-free list of ray indices.
using RaySet = std::vector<std::size_t>;

struct Fan {
  std::string name;
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<RaySet> max_cones;

  std::size_t ray_count() const noexcept { return rays.size(); }
  // Rays as the rows of an (|rays| x dim) matrix.
  IntMatrix ray_matrix() const;
  RaySet complement(const RaySet& cone) const;

  friend bool operator==(const Fan&, const Fan&) = default;
};

struct FanReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// Lists every violation: malformed indices, non-primitive or duplicate rays,
// rays not spanning, unused rays, non-simplicial cones, non-maximal cones, and
// pairs of cones meeting outside a common face.
FanReport validate_fan(const Fan& f);

// Every max cone's generators extend to a Z-basis. Throws DomainError on an
// invalid fan.
bool is_smooth(const Fan& f);

struct CompletenessReport {
  bool full_dimensional = false;
  bool facets_shared_twice = false;
  bool adjacency_connected = false;
  // Seeded random integer directions, each tested for membership in some
  // max cone; a heuristic confirmation of the combinatorial criterion.
  std::size_t directions_sampled = 0;
  std::size_t directions_uncovered = 0;

  bool complete() const noexcept {
    return full_dimensional && facets_shared_twice && adjacency_connected &&
           directions_uncovered == 0;
  }
};

CompletenessReport completeness_report(const Fan& f, std::uint64_t seed = 20021216,
                                       std::size_t samples = 1000);
bool is_complete(const Fan& f);

// A facet shared by two max cones, with the linear relation
// n_left + n_right + sum_{w in wall} c_w n_w = 0 expressed over all rays.
struct Wall {
  RaySet wall_rays;
  std::size_t left_cone = 0;
  std::size_t right_cone = 0;
  IntVector relation;
};

// One wall per shared facet, in order of (left cone, dropped ray position).
// Throws DomainError unless the fan is valid, smooth and complete.
std::vector<Wall> walls(const Fan& f);

// Convexity proxy: every toric prime divisor D_rho has nonnegative degree on
// every wall curve.
struct NefReport {
  bool all_nef = true;
  std::vector<bool> divisor_nef;        // indexed by ray
  std::vector<Integer> min_wall_degree;  // indexed by ray
};

NefReport prime_divisors_nef(const Fan& f);

// Standard smooth complete fans used throughout the tests and the CLI.
Fan projective_space(std::size_t n);
Fan product_p1_p1();
Fan hirzebruch(long a);

}  // namespace amt
