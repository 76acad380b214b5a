#pragma once

// Homogeneous binary forms over Q, the sections of O(d) on P^1 = Proj Q[z0, z1].
//
// Coefficient k multiplies z0^(d-k) * z1^k. The zero form carries its degree:
// the zero section of O(2) and of O(3) are different values.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amt/lattice.hpp"

namespace amt {

// The point [a:b] of P^1. Representatives are kept as given; only
// same_point() compares projectively.
struct ProjectivePoint {
  Rational a;
  Rational b;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

bool same_point(const ProjectivePoint& p, const ProjectivePoint& q);
std::string to_string(const ProjectivePoint& p);

class BinaryForm {
 public:
  BinaryForm() : coeffs_(1, Rational(0)) {}
  // Degree is coeffs.size() - 1; throws DimensionError on an empty vector.
  explicit BinaryForm(RatVector coeffs);

  static BinaryForm zero(std::size_t degree);
  static BinaryForm constant(const Rational& c);
  // c * z0^a * z1^b
  static BinaryForm monomial(const Rational& c, std::size_t a, std::size_t b);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const RatVector& coefficients() const noexcept { return coeffs_; }
  const Rational& coefficient(std::size_t k) const { return coeffs_.at(k); }
  bool is_zero() const;
  // Exponent of the largest power of z1 dividing the form (nonzero forms).
  std::size_t z1_multiplicity() const;

  BinaryForm operator-() const;
  BinaryForm scaled(const Rational& c) const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  RatVector coeffs_;
};

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);

// Grammar: signed sums of terms `q*z0^a*z1^b`, q an integer or p/q, with `*`
// and `^1` optional and free whitespace. A bare `0` takes expected_degree.
BinaryForm parse_form(std::string_view text, std::optional<std::size_t> expected_degree = std::nullopt);

// Inverse of parse_form: lowest-terms coefficients, decreasing z0 power,
// zero terms omitted, `0` for the zero form.
std::string to_string(const BinaryForm& f);

BinaryForm mul(const BinaryForm& f, const BinaryForm& g);
BinaryForm pow(const BinaryForm& f, std::size_t e);

// Monic greatest common divisor. Zero forms are ignored (gcd(0, h) = h);
// throws DomainError if every input is zero. Returns the constant 1 when the
// inputs are coprime.
BinaryForm gcd(const std::vector<BinaryForm>& fs);

// Quotient q with f == g * q, or nullopt when g does not divide f.
std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g);
bool divides(const BinaryForm& g, const BinaryForm& f);

Rational evaluate(const BinaryForm& f, const ProjectivePoint& p);
bool vanishes_at(const BinaryForm& f, const ProjectivePoint& p);

// b*z0 - a*z1, which vanishes exactly at [a:b].
BinaryForm linear_form_at(const ProjectivePoint& p);

// f(a, b) for forms a, b of a common degree k: degree becomes deg(f) * k.
BinaryForm compose(const BinaryForm& f, const BinaryForm& a, const BinaryForm& b);

// Partial derivative with respect to z0 (var == 0) or z1 (var == 1).
BinaryForm derivative(const BinaryForm& f, int var);

// Distinct roots in P^1(Q), normalized as [1:0] or [r:1], [1:0] first and
// the rest by increasing r. Throws DomainError on the zero form.
std::vector<ProjectivePoint> rational_roots(const BinaryForm& f);

// Invertible 2x2 matrix [[a, b], [c, d]] acting by the substitution
// z0 -> a*z0 + b*z1, z1 -> c*z0 + d*z1.
class Mobius {
 public:
  Mobius(Rational a, Rational b, Rational c, Rational d);

  static Mobius identity();
  static Mobius swap();

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  const Rational& d() const noexcept { return d_; }

  Rational determinant() const { return a_ * d_ - b_ * c_; }
  Mobius inverse() const;
  // det * inverse; the same projective map as inverse() with integral scaling.
  Mobius adjugate() const;
  ProjectivePoint apply(const ProjectivePoint& p) const;

  friend bool operator==(const Mobius&, const Mobius&) = default;

 private:
  Rational a_, b_, c_, d_;
};

BinaryForm substitute(const BinaryForm& f, const Mobius& g);

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace amt
