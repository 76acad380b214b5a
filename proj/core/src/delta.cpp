#include "amt/delta.hpp"

#include <algorithm>
#include <stdexcept>

#include "amt/error.hpp"

namespace amt {

bool Multidegree::nonnegative() const {
  return std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v >= 0; });
}

bool Multidegree::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; });
}

Multidegree operator+(const Multidegree& a, const Multidegree& b) {
  if (a.size() != b.size()) throw DimensionError("Multidegree +: lengths differ");
  Multidegree out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.values[i] += b.values[i];
  return out;
}

Multidegree operator*(std::int64_t k, const Multidegree& d) {
  Multidegree out = d;
  for (auto& v : out.values) v *= k;
  return out;
}

bool admissible(const Fan& f, const Multidegree& d) {
  if (d.size() != f.ray_count())
    throw DimensionError("admissible: multidegree has " + std::to_string(d.size()) +
                         " entries for " + std::to_string(f.ray_count()) + " rays");
  for (std::size_t j = 0; j < f.dim; ++j) {
    Integer s = 0;
    for (std::size_t r = 0; r < f.ray_count(); ++r) s += f.rays[r][j] * Integer(static_cast<long>(d[r]));
    if (s != 0) return false;
  }
  return true;
}

WeakDeltaCollection::WeakDeltaCollection(std::shared_ptr<const Fan> fan, Multidegree degree,
                                         std::vector<BinaryForm> sections,
                                         RatVector trivializations)
    : fan_(std::move(fan)),
      degree_(std::move(degree)),
      sections_(std::move(sections)),
      trivializations_(std::move(trivializations)) {
  if (!fan_) throw DomainError("WeakDeltaCollection: missing fan");
  const std::size_t n = fan_->ray_count();
  if (degree_.size() != n || sections_.size() != n)
    throw DimensionError("WeakDeltaCollection: need one degree and one section per ray (" +
                         std::to_string(n) + ")");
  if (trivializations_.empty()) trivializations_.assign(fan_->dim, Rational(1));
  if (trivializations_.size() != fan_->dim)
    throw DimensionError("WeakDeltaCollection: need one trivialization per basis vector of M (" +
                         std::to_string(fan_->dim) + ")");
  for (std::size_t r = 0; r < n; ++r) {
    if (degree_[r] < 0)
      throw DomainError("WeakDeltaCollection: degree of ray " + std::to_string(r) + " is negative");
    if (sections_[r].degree() != static_cast<std::size_t>(degree_[r]))
      throw DomainError("WeakDeltaCollection: section " + std::to_string(r) + " has degree " +
                        std::to_string(sections_[r].degree()) + ", expected " +
                        std::to_string(degree_[r]));
  }
  if (!admissible(*fan_, degree_))
    throw DomainError("WeakDeltaCollection: multidegree is not admissible (sum d_rho n_rho != 0)");
  for (std::size_t j = 0; j < trivializations_.size(); ++j)
    if (trivializations_[j] == 0)
      throw DomainError("WeakDeltaCollection: trivialization " + std::to_string(j) + " is zero");
}

bool operator==(const WeakDeltaCollection& x, const WeakDeltaCollection& y) {
  return *x.fan_ == *y.fan_ && x.degree_ == y.degree_ && x.sections_ == y.sections_ &&
         x.trivializations_ == y.trivializations_;
}

std::vector<BinaryForm> irrelevant_products(const WeakDeltaCollection& c) {
  std::vector<BinaryForm> out;
  for (const auto& cone : c.fan().max_cones) {
    BinaryForm g = BinaryForm::constant(1);
    for (auto r : c.fan().complement(cone)) g = mul(g, c.sections()[r]);
    out.push_back(std::move(g));
  }
  return out;
}

bool is_nonvanishing(const WeakDeltaCollection& c) {
  const auto& f = c.fan();
  return std::any_of(f.max_cones.begin(), f.max_cones.end(), [&](const RaySet& cone) {
    const RaySet outside = f.complement(cone);
    return std::none_of(outside.begin(), outside.end(),
                        [&](std::size_t r) { return c.sections()[r].is_zero(); });
  });
}

bool is_nondegenerate(const WeakDeltaCollection& c) {
  if (!is_nonvanishing(c)) return false;
  return base_divisor(c).degree() == 0;
}

BinaryForm base_divisor(const WeakDeltaCollection& c) {
  if (!is_nonvanishing(c))
    throw DomainError("base_divisor: collection vanishes identically (lies in F_d)");
  return gcd(irrelevant_products(c));
}

WeakDeltaCollection pullback(const WeakDeltaCollection& c, const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw DimensionError("pullback: cover components differ in degree");
  if (a.degree() == 0) throw DomainError("pullback: cover has degree 0");
  if (a.is_zero() || b.is_zero() || gcd({a, b}).degree() != 0)
    throw DomainError("pullback: cover components share a root, so they do not define a morphism");
  std::vector<BinaryForm> sections;
  for (const auto& u : c.sections()) sections.push_back(compose(u, a, b));
  return WeakDeltaCollection(c.fan_ptr(), static_cast<std::int64_t>(a.degree()) * c.degree(),
                             std::move(sections), c.trivializations());
}

Rational rational_pow(const Rational& x, const Integer& e) {
  const Integer magnitude = abs(e);
  if (!magnitude.fits_ulong_p()) throw DomainError("rational_pow: exponent out of range");
  if (e < 0 && x == 0) throw DomainError("rational_pow: zero to a negative power");
  const unsigned long k = magnitude.get_ui();
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  Rational out = e >= 0 ? Rational(num, den) : Rational(den, num);
  out.canonicalize();
  return out;
}

RatVector character_values(const Fan& f, const RatVector& lambda) {
  if (lambda.size() != f.ray_count()) throw DimensionError("character_values: one scalar per ray");
  RatVector out(f.dim, Rational(1));
  for (std::size_t j = 0; j < f.dim; ++j)
    for (std::size_t r = 0; r < f.ray_count(); ++r) out[j] *= rational_pow(lambda[r], f.rays[r][j]);
  return out;
}

WeakDeltaCollection act(const WeakDeltaCollection& c, const RatVector& lambda) {
  if (lambda.size() != c.fan().ray_count()) throw DimensionError("act: one scalar per ray");
  if (std::any_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x == 0; }))
    throw DomainError("act: scalars must be nonzero");
  std::vector<BinaryForm> sections;
  for (std::size_t r = 0; r < lambda.size(); ++r) sections.push_back(c.sections()[r].scaled(lambda[r]));
  RatVector t = c.trivializations();
  const RatVector chi = character_values(c.fan(), lambda);
  for (std::size_t j = 0; j < t.size(); ++j) t[j] *= chi[j];
  return WeakDeltaCollection(c.fan_ptr(), c.degree(), std::move(sections), std::move(t));
}

RatVector gauge_element(const CoxPresentation& pres, const RatVector& characters) {
  const IntMatrix& q = pres.charge_matrix;
  if (characters.size() != q.rows()) throw DimensionError("gauge_element: one character per Pic generator");
  RatVector lambda(q.cols(), Rational(1));
  for (std::size_t r = 0; r < q.cols(); ++r)
    for (std::size_t a = 0; a < q.rows(); ++a) lambda[r] *= rational_pow(characters[a], q(a, r));
  return lambda;
}

const char* to_string(IsomorphismVerdict::Status s) {
  switch (s) {
    case IsomorphismVerdict::Status::IsomorphicRational: return "isomorphic_rational";
    case IsomorphismVerdict::Status::IsomorphicOverClosure: return "isomorphic_over_closure";
    case IsomorphismVerdict::Status::NotIsomorphic: return "not_isomorphic";
  }
  return "unknown";
}

std::optional<Rational> rational_root(const Rational& x, unsigned long d) {
  if (d == 0) throw DomainError("rational_root: zero index");
  if (d == 1) return x;
  if (x < 0 && d % 2 == 0) return std::nullopt;
  Integer num = abs(x.get_num());
  Integer den = x.get_den();
  Integer rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), d)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d)) return std::nullopt;
  Rational r(x < 0 ? Integer(-rn) : rn, rd);
  r.canonicalize();
  return r;
}

namespace {

// Scalar s with s * u == v, or nullopt if v is not a multiple of u (u != 0).
std::optional<Rational> proportionality(const BinaryForm& u, const BinaryForm& v) {
  std::size_t k = 0;
  while (u.coefficient(k) == 0) ++k;
  const Rational s = v.coefficient(k) / u.coefficient(k);
  if (s == 0) return std::nullopt;
  if (u.scaled(s) != v) return std::nullopt;
  return s;
}

}  // namespace

IsomorphismVerdict isomorphic(const WeakDeltaCollection& c1, const WeakDeltaCollection& c2) {
  using Status = IsomorphismVerdict::Status;
  if (!(c1.fan() == c2.fan())) throw DimensionError("isomorphic: collections live on different fans");
  if (!(c1.degree() == c2.degree())) throw DimensionError("isomorphic: multidegrees differ");

  const Fan& f = c1.fan();
  const std::size_t n = f.ray_count();
  RatVector lambda(n, Rational(1));
  std::vector<std::size_t> free_rays;
  for (std::size_t r = 0; r < n; ++r) {
    const auto& u = c1.sections()[r];
    const auto& v = c2.sections()[r];
    if (u.is_zero()) {
      if (!v.is_zero()) return {Status::NotIsomorphic, std::nullopt};
      free_rays.push_back(r);
      continue;
    }
    auto s = proportionality(u, v);
    if (!s) return {Status::NotIsomorphic, std::nullopt};
    lambda[r] = *s;
  }

  // Residual targets tau_j = (t'_j / t_j) / prod_{fixed} lambda^<e_j, n>.
  const RatVector fixed_chars = character_values(f, lambda);
  RatVector tau(f.dim);
  for (std::size_t j = 0; j < f.dim; ++j)
    tau[j] = c2.trivializations()[j] / c1.trivializations()[j] / fixed_chars[j];

  // Free coordinates must satisfy phi_A(lambda_free) = tau with A = B_free^T.
  // With U A V = D this becomes nu_i^{d_i} = phi_U(tau)_i, nu = phi_{V^-1}.
  IntMatrix a(f.dim, free_rays.size());
  for (std::size_t k = 0; k < free_rays.size(); ++k)
    for (std::size_t j = 0; j < f.dim; ++j) a(j, k) = f.rays[free_rays[k]][j];
  const SmithDecomposition snf = smith_normal_form(a);
  const std::size_t rk = snf.rank();

  RatVector target(f.dim, Rational(1));
  for (std::size_t i = 0; i < f.dim; ++i)
    for (std::size_t j = 0; j < f.dim; ++j) target[i] *= rational_pow(tau[j], snf.U(i, j));
  for (std::size_t i = rk; i < f.dim; ++i)
    if (target[i] != 1) return {Status::NotIsomorphic, std::nullopt};

  RatVector nu(free_rays.size(), Rational(1));
  for (std::size_t i = 0; i < rk; ++i) {
    auto root = rational_root(target[i], snf.D(i, i).get_ui());
    if (!root) return {Status::IsomorphicOverClosure, std::nullopt};
    nu[i] = *root;
  }
  for (std::size_t k = 0; k < free_rays.size(); ++k) {
    Rational l = 1;
    for (std::size_t i = 0; i < free_rays.size(); ++i) l *= rational_pow(nu[i], snf.V(k, i));
    lambda[free_rays[k]] = l;
  }

  const WeakDeltaCollection image = act(c1, lambda);
  if (!(image == c2)) throw std::logic_error("isomorphic: constructed witness does not verify");
  return {Status::IsomorphicRational, lambda};
}

}  // namespace amt
