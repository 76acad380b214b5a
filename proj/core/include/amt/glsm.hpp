#pragma once

// Bosonic vacuum equations of an abelian gauged linear sigma model with zero
// superpotential and equal gauge couplings: the D-term (moment map) level set
// sum_i Q_i^a |phi_i|^2 = r_a, its GIT stability, and the phase data.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amt/cox.hpp"
#include "amt/delta.hpp"
#include "amt/fan.hpp"
#include "amt/lattice.hpp"

namespace amt {

struct GLSMProblem {
  IntMatrix charges;     // k x r; column i is the charge q_i of field i
  RatVector fi;          // r_a, length k
  RatVector amplitudes;  // s_i = |phi_i|^2 >= 0, length r
  // sigma_a is pinned to 0: in the geometric phase that is the only solution
  // once the D-term and holomorphicity equations are solvable.
  bool sigma_fixed_zero = true;

  // Throws DimensionError/DomainError if the invariants fail.
  void check() const;
};

// Q s - r, exactly.
RatVector moment_map(const GLSMProblem& p);

enum class Stability { InteriorStable, BoundaryMarginal, Unstable };
const char* to_string(Stability s);

struct StabilityVerdict {
  Stability stability = Stability::Unstable;
  // For Unstable: u with <q_i, u> <= 0 on the support and <r, u> > 0.
  std::optional<RatVector> certificate;
};

// Where r sits relative to cone{q_i : i in support}: relative interior,
// relative boundary, or outside. Decided exactly on the dual side.
StabilityVerdict stability_verdict(const IntMatrix& charges, const RaySet& support, const RatVector& fi);
Stability semistable(const IntMatrix& charges, const RaySet& support, const RatVector& fi);

struct SolveReport {
  enum class Status { Converged, Unstable, IterationLimit };
  Status status = Status::IterationLimit;
  std::vector<double> t;  // length k; meaningful when Converged
  double gradient_norm = 0.0;  // max-norm of 2 (Q s(t) - r) at the last iterate
  std::size_t iterations = 0;
  std::optional<RatVector> certificate;  // recession direction when Unstable
};

const char* to_string(SolveReport::Status s);

struct SolverOptions {
  double tol = 1e-8;
  std::size_t max_iter = 200;
  double armijo = 1e-4;
  int max_halvings = 60;
};

// Kempf-Ness function f(t) = sum_i s_i exp(2 <q_i, t>) - 2 <r, t>.
double kempf_ness_value(const IntMatrix& charges, const std::vector<double>& s,
                        const std::vector<double>& fi, const std::vector<double>& t);
// Its gradient 2 (Q s(t) - r), s_i(t) = s_i exp(2 <q_i, t>).
std::vector<double> kempf_ness_gradient(const IntMatrix& charges, const std::vector<double>& s,
                                        const std::vector<double>& fi, const std::vector<double>& t);

// Damped Newton from t = 0 with Armijo backtracking. Exact stability is
// decided first on the support of s: anything but InteriorStable reports
// Unstable without iterating. Throws DomainError unless tol > 0.
SolveReport kempf_ness_solve(const GLSMProblem& p, const SolverOptions& opts = {});

// Minimal zero sets Z such that points vanishing exactly on Z are unstable.
std::vector<RaySet> unstable_supports(const IntMatrix& charges, const RatVector& fi,
                                      std::size_t max_rays = kMaxPrimitiveSearchRays);

// e . d for any integer lift e with Q e = a. Throws DomainError if d is not
// admissible or a has no integer lift.
Integer pair_divisor_curve(const CoxPresentation& pres, const IntVector& divisor_class,
                           const Multidegree& d);

// a pairs positively with every wall curve class.
bool kahler_cone_contains(const Fan& f, const CoxPresentation& pres, const IntVector& divisor_class);

}  // namespace amt
