#include "amt/cox.hpp"

#include <algorithm>
#include <cstdint>

#include "amt/error.hpp"

namespace amt {

namespace {

using Mask = std::uint32_t;

Mask to_mask(const RaySet& s) {
  Mask m = 0;
  for (auto r : s) m |= Mask{1} << r;
  return m;
}

RaySet from_mask(Mask m) {
  RaySet s;
  for (std::size_t r = 0; m != 0; ++r, m >>= 1)
    if (m & 1) s.push_back(r);
  return s;
}

}  // namespace

std::vector<RaySet> primitive_collections(const Fan& f) {
  const FanReport rep = validate_fan(f);
  if (!rep.ok()) throw DomainError("primitive_collections: " + rep.violations.front());
  const std::size_t n = f.ray_count();
  if (n > kMaxPrimitiveSearchRays)
    throw DomainError("primitive_collections: " + std::to_string(n) + " rays exceeds the limit of " +
                      std::to_string(kMaxPrimitiveSearchRays));

  std::vector<Mask> cones;
  for (const auto& c : f.max_cones) cones.push_back(to_mask(c));
  auto in_cone = [&](Mask s) {
    return std::any_of(cones.begin(), cones.end(), [s](Mask c) { return (s & ~c) == 0; });
  };

  std::vector<RaySet> out;
  const Mask all = (Mask{1} << n) - 1;
  for (Mask s = 1; s <= all; ++s) {
    if (in_cone(s)) continue;
    bool minimal = true;
    for (Mask rest = s; rest != 0 && minimal; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      minimal = in_cone(s & ~bit);
    }
    if (minimal) out.push_back(from_mask(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoxPresentation cox_presentation(const Fan& f) {
  if (!is_smooth(f)) throw DomainError("cox_presentation: fan '" + f.name + "' is not smooth");
  if (!is_complete(f)) throw DomainError("cox_presentation: fan '" + f.name + "' is not complete");

  CoxPresentation pres;
  pres.ray_matrix = f.ray_matrix();
  for (const auto& d : smith_normal_form(pres.ray_matrix).invariant_factors())
    if (d > 1) pres.pic_torsion.push_back(d);
  if (!pres.pic_torsion.empty())
    throw DomainError("cox_presentation: Pic of '" + f.name + "' has torsion; refusing a torsion grading");

  const auto kernel = integer_kernel(pres.ray_matrix.transposed());
  pres.charge_matrix = IntMatrix::from_rows(kernel, f.ray_count());
  pres.pic_rank = kernel.size();
  for (const auto& cone : f.max_cones) pres.irrelevant_generators.push_back(f.complement(cone));
  pres.primitive_collections = primitive_collections(f);
  return pres;
}

bool outside_irrelevant_locus(const CoxPresentation& pres, const RaySet& zero_set) {
  return std::any_of(pres.irrelevant_generators.begin(), pres.irrelevant_generators.end(),
                     [&](const RaySet& gen) {
                       return std::none_of(zero_set.begin(), zero_set.end(), [&](std::size_t r) {
                         return std::binary_search(gen.begin(), gen.end(), r);
                       });
                     });
}

}  // namespace amt
