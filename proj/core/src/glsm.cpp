#include "amt/glsm.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "amt/error.hpp"
#include "amt/polyhedral.hpp"

namespace amt {

void GLSMProblem::check() const {
  if (fi.size() != charges.rows())
    throw DimensionError("GLSMProblem: " + std::to_string(fi.size()) + " FI parameters for " +
                         std::to_string(charges.rows()) + " charge rows");
  if (amplitudes.size() != charges.cols())
    throw DimensionError("GLSMProblem: " + std::to_string(amplitudes.size()) + " amplitudes for " +
                         std::to_string(charges.cols()) + " fields");
  for (std::size_t i = 0; i < amplitudes.size(); ++i)
    if (amplitudes[i] < 0) throw DomainError("GLSMProblem: amplitude " + std::to_string(i) + " is negative");
  if (!sigma_fixed_zero) throw DomainError("GLSMProblem: only the sigma = 0 branch is supported");
}

RatVector moment_map(const GLSMProblem& p) {
  p.check();
  RatVector out(p.charges.rows());
  for (std::size_t a = 0; a < p.charges.rows(); ++a) {
    Rational v = -p.fi[a];
    for (std::size_t i = 0; i < p.charges.cols(); ++i) v += Rational(p.charges(a, i)) * p.amplitudes[i];
    out[a] = v;
  }
  return out;
}

const char* to_string(Stability s) {
  switch (s) {
    case Stability::InteriorStable: return "interior_stable";
    case Stability::BoundaryMarginal: return "boundary_marginal";
    case Stability::Unstable: return "unstable";
  }
  return "unknown";
}

const char* to_string(SolveReport::Status s) {
  switch (s) {
    case SolveReport::Status::Converged: return "converged";
    case SolveReport::Status::Unstable: return "unstable";
    case SolveReport::Status::IterationLimit: return "iteration_limit";
  }
  return "unknown";
}

StabilityVerdict stability_verdict(const IntMatrix& charges, const RaySet& support, const RatVector& fi) {
  const std::size_t k = charges.rows();
  if (fi.size() != k) throw DimensionError("semistable: FI vector length differs from charge rows");
  std::vector<LinearConstraint> dual;
  RatVector sum(k, Rational(0));
  for (auto i : support) {
    if (i >= charges.cols()) throw DimensionError("semistable: support index out of range");
    const RatVector q = to_rational(charges.column(i));
    for (std::size_t a = 0; a < k; ++a) sum[a] += q[a];
    dual.push_back(less_equal(q));
  }

  // r outside the cone iff some u has <q_i, u> <= 0 and <r, u> > 0.
  auto outside = dual;
  outside.push_back(greater(fi));
  if (auto u = find_feasible_point(k, outside)) return {Stability::Unstable, std::move(u)};

  // r on a proper face iff some such u has <r, u> = 0 and sum_i <q_i, u> < 0.
  auto boundary = dual;
  boundary.push_back(greater_equal(fi));
  boundary.push_back(less(sum));
  if (find_feasible_point(k, boundary)) return {Stability::BoundaryMarginal, std::nullopt};
  return {Stability::InteriorStable, std::nullopt};
}

Stability semistable(const IntMatrix& charges, const RaySet& support, const RatVector& fi) {
  return stability_verdict(charges, support, fi).stability;
}

double kempf_ness_value(const IntMatrix& charges, const std::vector<double>& s,
                        const std::vector<double>& fi, const std::vector<double>& t) {
  double v = 0.0;
  for (std::size_t i = 0; i < charges.cols(); ++i) {
    if (s[i] == 0.0) continue;
    double qt = 0.0;
    for (std::size_t a = 0; a < charges.rows(); ++a) qt += charges(a, i).get_d() * t[a];
    v += s[i] * std::exp(2.0 * qt);
  }
  for (std::size_t a = 0; a < charges.rows(); ++a) v -= 2.0 * fi[a] * t[a];
  return v;
}

std::vector<double> kempf_ness_gradient(const IntMatrix& charges, const std::vector<double>& s,
                                        const std::vector<double>& fi, const std::vector<double>& t) {
  const std::size_t k = charges.rows();
  std::vector<double> g(k);
  for (std::size_t a = 0; a < k; ++a) g[a] = -fi[a];
  for (std::size_t i = 0; i < charges.cols(); ++i) {
    if (s[i] == 0.0) continue;
    double qt = 0.0;
    for (std::size_t a = 0; a < k; ++a) qt += charges(a, i).get_d() * t[a];
    const double si = s[i] * std::exp(2.0 * qt);
    for (std::size_t a = 0; a < k; ++a) g[a] += charges(a, i).get_d() * si;
  }
  for (auto& x : g) x *= 2.0;
  return g;
}

namespace {

double max_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

SolveReport kempf_ness_solve(const GLSMProblem& p, const SolverOptions& opts) {
  if (!(opts.tol > 0.0)) throw DomainError("kempf_ness_solve: tol must be positive");
  p.check();
  const std::size_t k = p.charges.rows();
  const std::size_t r = p.charges.cols();

  SolveReport rep;
  rep.t.assign(k, 0.0);
  RaySet support;
  for (std::size_t i = 0; i < r; ++i)
    if (p.amplitudes[i] > 0) support.push_back(i);

  std::vector<double> s(r), fi(k);
  for (std::size_t i = 0; i < r; ++i) s[i] = p.amplitudes[i].get_d();
  for (std::size_t a = 0; a < k; ++a) fi[a] = p.fi[a].get_d();

  auto verdict = stability_verdict(p.charges, support, p.fi);
  if (verdict.stability != Stability::InteriorStable) {
    rep.status = SolveReport::Status::Unstable;
    rep.certificate = std::move(verdict.certificate);
    rep.gradient_norm = max_norm(kempf_ness_gradient(p.charges, s, fi, rep.t));
    return rep;
  }

  Eigen::MatrixXd q(k, r);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t i = 0; i < r; ++i) q(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(i)) = p.charges(a, i).get_d();

  std::vector<double>& t = rep.t;
  for (rep.iterations = 0;; ++rep.iterations) {
    const std::vector<double> grad = kempf_ness_gradient(p.charges, s, fi, t);
    rep.gradient_norm = max_norm(grad);
    if (rep.gradient_norm < opts.tol) {
      rep.status = SolveReport::Status::Converged;
      return rep;
    }
    if (rep.iterations >= opts.max_iter) break;

    // Hessian 4 sum_i s_i(t) q_i q_i^T; singular along directions orthogonal
    // to every charge on the support, where f is constant.
    Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < r; ++i) {
      if (s[i] == 0.0) continue;
      const Eigen::VectorXd qi = q.col(static_cast<Eigen::Index>(i));
      hess += 4.0 * s[i] * std::exp(2.0 * qi.dot(Eigen::Map<const Eigen::VectorXd>(t.data(), static_cast<Eigen::Index>(k)))) * qi * qi.transpose();
    }
    const Eigen::Map<const Eigen::VectorXd> g(grad.data(), static_cast<Eigen::Index>(k));
    Eigen::VectorXd step = -hess.completeOrthogonalDecomposition().solve(g);
    double slope = g.dot(step);
    if (!(slope < 0.0) || !step.allFinite()) {
      step = -g;
      slope = -g.squaredNorm();
    }

    // Predicted decrease below the rounding level of f: backtrack on the
    // gradient norm.
    const double f0 = kempf_ness_value(p.charges, s, fi, t);
    const bool f_resolvable = -slope > 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(f0));
    double alpha = 1.0;
    std::vector<double> trial(k);
    bool accepted = false;
    for (int h = 0; h <= opts.max_halvings; ++h) {
      for (std::size_t a = 0; a < k; ++a) trial[a] = t[a] + alpha * step(static_cast<Eigen::Index>(a));
      if (f_resolvable) {
        const double f1 = kempf_ness_value(p.charges, s, fi, trial);
        accepted = std::isfinite(f1) && f1 <= f0 + opts.armijo * alpha * slope;
      } else {
        const double g1 = max_norm(kempf_ness_gradient(p.charges, s, fi, trial));
        accepted = std::isfinite(g1) && g1 <= (1.0 - opts.armijo * alpha) * rep.gradient_norm;
      }
      if (accepted) break;
      alpha *= 0.5;
    }
    if (!accepted) break;
    t = trial;
  }
  rep.status = SolveReport::Status::IterationLimit;
  return rep;
}

std::vector<RaySet> unstable_supports(const IntMatrix& charges, const RatVector& fi, std::size_t max_rays) {
  const std::size_t n = charges.cols();
  if (n > max_rays)
    throw DomainError("unstable_supports: " + std::to_string(n) + " fields exceeds the limit of " +
                      std::to_string(max_rays));
  if (n > 30) throw DomainError("unstable_supports: too many fields for subset enumeration");
  using Mask = std::uint32_t;
  const Mask all = (Mask{1} << n) - 1;

  std::vector<Mask> masks;
  for (Mask z = 0; z <= all; ++z) masks.push_back(z);
  std::stable_sort(masks.begin(), masks.end(),
                   [](Mask x, Mask y) { return __builtin_popcount(x) < __builtin_popcount(y); });

  std::vector<Mask> minimal;
  for (Mask z : masks) {
    if (std::any_of(minimal.begin(), minimal.end(), [z](Mask m) { return (z & m) == m; })) continue;
    RaySet support;
    for (std::size_t i = 0; i < n; ++i)
      if (!(z & (Mask{1} << i))) support.push_back(i);
    if (semistable(charges, support, fi) == Stability::Unstable) minimal.push_back(z);
  }

  std::vector<RaySet> out;
  for (Mask m : minimal) {
    RaySet s;
    for (std::size_t i = 0; i < n; ++i)
      if (m & (Mask{1} << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer pair_divisor_curve(const CoxPresentation& pres, const IntVector& divisor_class, const Multidegree& d) {
  const std::size_t n = pres.ray_matrix.rows();
  if (d.size() != n) throw DimensionError("pair_divisor_curve: multidegree length differs from ray count");
  if (divisor_class.size() != pres.pic_rank)
    throw DimensionError("pair_divisor_curve: divisor class length differs from Picard rank");
  IntVector dv(n);
  for (std::size_t r = 0; r < n; ++r) dv[r] = static_cast<long>(d[r]);
  for (std::size_t j = 0; j < pres.ray_matrix.cols(); ++j) {
    Integer s = 0;
    for (std::size_t r = 0; r < n; ++r) s += pres.ray_matrix(r, j) * dv[r];
    if (s != 0) throw DomainError("pair_divisor_curve: multidegree is not admissible");
  }
  const auto lift = solve_integer(pres.charge_matrix, divisor_class);
  if (!lift) throw DomainError("pair_divisor_curve: divisor class has no integer lift");
  return dot(*lift, dv);
}

bool kahler_cone_contains(const Fan& f, const CoxPresentation& pres, const IntVector& divisor_class) {
  for (const auto& w : walls(f)) {
    Multidegree curve;
    for (const auto& x : w.relation) curve.values.push_back(x.get_si());
    if (pair_divisor_curve(pres, divisor_class, curve) <= 0) return false;
  }
  return true;
}

}  // namespace amt
