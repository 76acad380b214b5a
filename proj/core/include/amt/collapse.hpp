#pragma once

// The collapsing morphism at genus 0. A stable map of bidegree (1, d) into
// P^1 x X is summarized by the weak Delta-collection on its degree-1
// component (identified with the target P^1) together with, for each tree
// glued onto that component, the attachment point and the tree's total
// multidegree. Collapsing multiplies u_rho by l_p^{d_rho(tree)} for each
// attachment point p, where l_p = linear_form_at(p).

#include <string>
#include <vector>

#include "amt/delta.hpp"
#include "amt/forms.hpp"

namespace amt {

struct Attachment {
  ProjectivePoint point;
  Multidegree degree;
};

struct GenusZeroStableMapData {
  WeakDeltaCollection main;
  std::vector<Attachment> attachments;
};

struct CollapseReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// Checks: main nondegenerate; each subtree degree has the right length, is
// admissible, nonnegative and nonzero; attachment points distinct; the fan
// passes the nef-prime-divisor convexity proxy.
CollapseReport validate(const GenusZeroStableMapData& data);

struct CollapseResult {
  WeakDeltaCollection collection;
  Multidegree total_degree;
};

// Throws DomainError (listing the violations) on invalid data.
CollapseResult collapse(const GenusZeroStableMapData& data);

// Sections become u(g z); trivializations are unchanged.
WeakDeltaCollection reparametrize(const WeakDeltaCollection& c, const Mobius& g);

// Sections as above; attachment points move by the adjugate of g (the action
// of g^-1 on P^1), which makes collapse commute with reparametrize exactly.
GenusZeroStableMapData reparametrize(const GenusZeroStableMapData& data, const Mobius& g);

}  // namespace amt
