#pragma once

// Genus-0 weak Delta-collections in the fixed presentation of P^1: one binary
// form u_rho of degree d_rho per ray, plus trivialization scalars t_m on the
// standard basis of M (all 1 for the canonical isomorphisms).

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "amt/cox.hpp"
#include "amt/fan.hpp"
#include "amt/forms.hpp"

namespace amt {

struct Multidegree {
  std::vector<std::int64_t> values;

  std::size_t size() const noexcept { return values.size(); }
  std::int64_t operator[](std::size_t i) const { return values[i]; }
  bool nonnegative() const;
  bool is_zero() const;

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
};

Multidegree operator+(const Multidegree& a, const Multidegree& b);
Multidegree operator*(std::int64_t k, const Multidegree& d);

// sum_rho d_rho * n_rho == 0. Throws DimensionError on a length mismatch.
bool admissible(const Fan& f, const Multidegree& d);

class WeakDeltaCollection {
 public:
  // Throws DimensionError on shape mismatches and DomainError when a degree is
  // negative, the multidegree is inadmissible, a section has the wrong degree
  // or a trivialization is zero. Empty `trivializations` means all ones.
  WeakDeltaCollection(std::shared_ptr<const Fan> fan, Multidegree degree,
                      std::vector<BinaryForm> sections, RatVector trivializations = {});

  const Fan& fan() const noexcept { return *fan_; }
  const std::shared_ptr<const Fan>& fan_ptr() const noexcept { return fan_; }
  const Multidegree& degree() const noexcept { return degree_; }
  const std::vector<BinaryForm>& sections() const noexcept { return sections_; }
  const RatVector& trivializations() const noexcept { return trivializations_; }

  friend bool operator==(const WeakDeltaCollection& x, const WeakDeltaCollection& y);

 private:
  std::shared_ptr<const Fan> fan_;
  Multidegree degree_;
  std::vector<BinaryForm> sections_;
  RatVector trivializations_;
};

// g_sigma = prod_{rho not in sigma} u_rho, one per max cone.
std::vector<BinaryForm> irrelevant_products(const WeakDeltaCollection& c);

// Some max cone has every section outside it nonzero.
bool is_nonvanishing(const WeakDeltaCollection& c);

// No point of P^1 maps into V(I): the gcd of all g_sigma (zero forms ignored)
// is constant.
bool is_nondegenerate(const WeakDeltaCollection& c);

// gcd of the g_sigma; constant 1 iff nondegenerate. Its roots are the points
// sent into V(I). Throws DomainError when the collection vanishes.
BinaryForm base_divisor(const WeakDeltaCollection& c);

// Pullback along the degree-k cover [z0:z1] -> [a:b]. Throws DomainError if
// a and b share a root or have degree 0.
WeakDeltaCollection pullback(const WeakDeltaCollection& c, const BinaryForm& a, const BinaryForm& b);

// lambda . c: sections scaled by lambda_rho, t_m multiplied by
// prod_rho lambda_rho^<m, n_rho>.
WeakDeltaCollection act(const WeakDeltaCollection& c, const RatVector& lambda);

// The element of G <= (Q^x)^rays with lambda_rho = prod_a s_a^{Q_{a,rho}}.
RatVector gauge_element(const CoxPresentation& pres, const RatVector& characters);

// prod_rho lambda_rho^<e_j, n_rho> for each basis vector e_j of M.
RatVector character_values(const Fan& f, const RatVector& lambda);

struct IsomorphismVerdict {
  enum class Status { IsomorphicRational, IsomorphicOverClosure, NotIsomorphic };
  Status status = Status::NotIsomorphic;
  std::optional<RatVector> witness;  // set iff IsomorphicRational
};

const char* to_string(IsomorphismVerdict::Status s);

// Decides whether some lambda in (scalars^x)^rays carries c1 to c2:
// lambda_rho u_rho = u'_rho and prod lambda_rho^<m, n_rho> = t'_m / t_m.
// Ratios on nonzero sections are forced; the remaining free coordinates are
// solved through the Smith form of their pairing matrix. Throws
// DimensionError unless fan and multidegree agree.
IsomorphismVerdict isomorphic(const WeakDeltaCollection& c1, const WeakDeltaCollection& c2);

// Exact d-th root in Q, if any.
std::optional<Rational> rational_root(const Rational& x, unsigned long d);

// x^e for an integer (possibly negative) exponent; x must be nonzero if e < 0.
Rational rational_pow(const Rational& x, const Integer& e);

}  // namespace amt
