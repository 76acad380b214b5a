// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "amt/collapse.hpp"
#include "amt/cox.hpp"
#include "amt/glsm.hpp"
#include "amt/io.hpp"
#include "amt/moduli.hpp"
#include "amt/polyhedral.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace amt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Shared by the sampling criteria: golden fans with a small admissible
// multidegree whose sections are generically all nonzero.
struct Target {
  Fan fan;
  Multidegree degree;
};

std::vector<Target> sampling_targets() {
  std::vector<Target> out;
  out.push_back({golden::p1_target(), {{1, 1}}});
  for (std::size_t n = 2; n <= 3; ++n) out.push_back({projective_space(n), {std::vector<std::int64_t>(n + 1, 1)}});
  out.push_back({product_p1_p1(), {{1, 1, 1, 1}}});
  for (long a = 0; a <= 2; ++a) out.push_back({hirzebruch(a), {{1, 1, 1, 1 + a}}});
  return out;
}

RaySet zero_set(const WeakDeltaCollection& c, const ProjectivePoint& p) {
  RaySet zs;
  for (std::size_t r = 0; r < c.sections().size(); ++r)
    if (vanishes_at(c.sections()[r], p)) zs.push_back(r);
  return zs;
}

ProjectivePoint random_point(Rng& rng) {
  if (rng() % 10 == 0) return {1, 0};
  Rational a(draw_bounded(rng, 50), 1 + static_cast<long>(rng() % 7));
  a.canonicalize();
  return {a, Rational(1 + static_cast<long>(rng() % 7))};
}

std::vector<RaySet> expected_primitive(const Fan& f) {
  if (f.name == "P1xP1") return {{0, 1}, {2, 3}};
  if (f.name[0] == 'F') return {{0, 2}, {1, 3}};
  RaySet all(f.ray_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return {all};
}

Outcome cox_golden() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& f : golden::fans()) {
    const auto pres = cox_presentation(f);
    const auto d = smith_normal_form(pres.charge_matrix).invariant_factors();
    const bool ok = pres.pic_rank == f.ray_count() - f.dim && (pres.charge_matrix * pres.ray_matrix).is_zero() &&
                    std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; }) &&
                    pres.primitive_collections == expected_primitive(f) &&
                    pres.primitive_collections == oracle::primitive_collections(f);
    if (!ok) {
      o.pass = false;
      o.detail += " mismatch on " + f.name;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 1.0) o.pass = false;
  o.detail = "8 fans, " + std::to_string(secs) + " s" + o.detail;
  return o;
}

Outcome dimension_formula() {
  Outcome o;
  int cases = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::int64_t k = 0; k <= 5; ++k) {
      const auto s = summarize(projective_space(n), {std::vector<std::int64_t>(n + 1, k)});
      o.pass &= s.w_dim == static_cast<std::int64_t>(n + 1) * (k + 1) - 1;
      ++cases;
    }
  o.detail = std::to_string(cases) + " (n, k) pairs";
  return o;
}

Outcome nondegeneracy() {
  Outcome o;
  Rng rng(3001);
  int detected = 0, planted = 0, contradictions = 0, points = 0;
  const std::vector<Target> targets{{projective_space(2), {{1, 1, 1}}}, {product_p1_p1(), {{1, 1, 1, 1}}}};
  for (int i = 0; i < 200; ++i) {
    const auto& t = targets[i % 2];
    const auto fan = golden::shared(t.fan);
    const auto pres = cox_presentation(t.fan);
    const auto c = sample(fan, t.degree, rng, 3);

    // Planted-free: the verdict must agree with pointwise evaluation.
    const bool nondeg = is_nondegenerate(c);
    const BinaryForm base = base_divisor(c);
    for (int k = 0; k < 50; ++k) {
      const auto p = random_point(rng);
      ++points;
      const bool outside = outside_irrelevant_locus(pres, zero_set(c, p));
      if (nondeg && !outside) ++contradictions;
      if (!vanishes_at(base, p) && !outside) ++contradictions;
    }
    if (!nondeg)
      for (const auto& p : rational_roots(base))
        if (outside_irrelevant_locus(pres, zero_set(c, p))) ++contradictions;

    // Planted: a common linear factor on every section.
    const ProjectivePoint p{Rational(draw_bounded(rng, 5)), Rational(1 + static_cast<long>(rng() % 3))};
    const BinaryForm ell = linear_form_at(p);
    std::vector<BinaryForm> secs;
    for (const auto& s : c.sections()) secs.push_back(mul(s, ell));
    const WeakDeltaCollection bad(fan, t.degree + Multidegree{std::vector<std::int64_t>(t.fan.ray_count(), 1)}, secs);
    ++planted;
    if (!is_nondegenerate(bad) && divides(ell, base_divisor(bad))) ++detected;
  }
  o.pass = detected == planted && contradictions == 0;
  o.detail = "planted " + std::to_string(detected) + "/" + std::to_string(planted) + ", " +
             std::to_string(points) + " evaluations, " + std::to_string(contradictions) + " contradictions";
  return o;
}

Outcome bridge() {
  Outcome o;
  Rng rng(3002);
  const auto targets = sampling_targets();
  int zero_cases = 0, in_f = 0, mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    const auto& t = targets[i % targets.size()];
    const auto fan = golden::shared(t.fan);
    std::vector<BinaryForm> secs;
    RaySet zero_sections;
    for (std::size_t r = 0; r < t.fan.ray_count(); ++r) {
      const auto deg = static_cast<std::size_t>(t.degree[r]);
      if (rng() % 3 == 0) {
        secs.push_back(BinaryForm::zero(deg));
        zero_sections.push_back(r);
        continue;
      }
      RatVector coeffs(deg + 1);
      do {
        for (auto& x : coeffs) x = draw_bounded(rng, 2);
      } while (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x == 0; }));
      secs.push_back(BinaryForm(coeffs));
    }
    const WeakDeltaCollection c(fan, t.degree, secs);
    // A generic point vanishes exactly on the zero sections.
    const auto pcs = oracle::primitive_collections(t.fan);
    const bool oracle_in_f = std::any_of(pcs.begin(), pcs.end(), [&](const RaySet& pc) {
      return std::includes(zero_sections.begin(), zero_sections.end(), pc.begin(), pc.end());
    });
    zero_cases += zero_sections.empty() ? 0 : 1;
    in_f += oracle_in_f ? 1 : 0;
    if (in_F_d(c) != !is_nonvanishing(c) || in_F_d(c) != oracle_in_f) ++mismatches;
  }
  o.pass = mismatches == 0;
  o.detail = "500 inputs, " + std::to_string(zero_cases) + " with zero sections, " + std::to_string(in_f) +
             " in F_d, " + std::to_string(mismatches) + " mismatches";
  return o;
}

GenusZeroStableMapData random_stable_map(Rng& rng, const Target& t, const std::vector<Multidegree>& trees) {
  const auto fan = golden::shared(t.fan);
  WeakDeltaCollection main = sample(fan, t.degree, rng, 3);
  while (!is_nondegenerate(main)) main = sample(fan, t.degree, rng, 3);
  GenusZeroStableMapData data{main, {}};
  std::vector<ProjectivePoint> used;
  const std::size_t n = rng() % 4;
  while (data.attachments.size() < n) {
    const auto p = random_point(rng);
    if (std::any_of(used.begin(), used.end(), [&](const ProjectivePoint& q) { return same_point(p, q); })) continue;
    used.push_back(p);
    data.attachments.push_back({p, trees[rng() % trees.size()]});
  }
  return data;
}

Outcome collapsing() {
  Outcome o;
  Rng rng(3003);
  struct Case {
    Target target;
    std::vector<Multidegree> trees;
  };
  const std::vector<Case> cases{
      {{projective_space(2), {{1, 1, 1}}}, {{{1, 1, 1}}, {{2, 2, 2}}}},
      {{projective_space(3), {{1, 1, 1, 1}}}, {{{1, 1, 1, 1}}}},
      {{product_p1_p1(), {{1, 1, 1, 1}}}, {{{1, 1, 0, 0}}, {{0, 0, 1, 1}}, {{2, 2, 1, 1}}}},
      {{golden::p1_target(), {{1, 1}}}, {{{1, 1}}, {{2, 2}}}}};

  // Identity case: serialized output equals serialized input.
  int identity_ok = 0;
  for (const auto& cs : cases) {
    const auto data = random_stable_map(rng, cs.target, cs.trees);
    const GenusZeroStableMapData bare{data.main, {}};
    identity_ok += collection_to_json(collapse(bare).collection).dump() == collection_to_json(data.main).dump() ? 1 : 0;
  }

  int additive = 0;
  for (int i = 0; i < 200; ++i) {
    const auto& cs = cases[i % cases.size()];
    const auto data = random_stable_map(rng, cs.target, cs.trees);
    Multidegree total = data.main.degree();
    for (const auto& a : data.attachments) total = total + a.degree;
    const auto out = collapse(data);
    additive += (out.total_degree == total && out.collection.degree() == total) ? 1 : 0;
  }

  int equivariant = 0;
  for (int i = 0; i < 50; ++i) {
    const auto& cs = cases[i % cases.size()];
    const auto data = random_stable_map(rng, cs.target, cs.trees);
    Rational a, b, c, d;
    do {
      a = draw_bounded(rng, 3), b = draw_bounded(rng, 3), c = draw_bounded(rng, 3), d = draw_bounded(rng, 3);
    } while (a * d - b * c == 0);
    const Mobius g(a, b, c, d);
    equivariant += collapse(reparametrize(data, g)).collection == reparametrize(collapse(data).collection, g) ? 1 : 0;
  }

  // Worked golden cases.
  const auto p2 = golden::shared(projective_space(2));
  const WeakDeltaCollection line(p2, {{1, 1, 1}}, {parse_form("z0"), parse_form("z1"), parse_form("z0 + z1")});
  const auto r1 = collapse({line, {{{0, 1}, {{1, 1, 1}}}}});
  const WeakDeltaCollection p1_line(golden::shared(golden::p1_target()), {{1, 1}}, {parse_form("z0"), parse_form("z1")});
  const auto r2 = collapse({p1_line, {{{1, 0}, {{2, 2}}}}});
  const bool golden_ok = base_divisor(r1.collection) == parse_form("z0") && vanishes_at(base_divisor(r1.collection), {0, 1}) &&
                         vanishes_at(base_divisor(r2.collection), {1, 0}) &&
                         r2.collection.sections() == std::vector<BinaryForm>{parse_form("z0*z1^2"), parse_form("z1^3")};

  o.pass = identity_ok == static_cast<int>(cases.size()) && additive == 200 && equivariant == 50 && golden_ok;
  o.detail = "identity " + std::to_string(identity_ok) + "/" + std::to_string(cases.size()) + ", additivity " +
             std::to_string(additive) + "/200, equivariance " + std::to_string(equivariant) + "/50, golden " +
             (golden_ok ? "ok" : "failed");
  return o;
}

Outcome isomorphism() {
  Outcome o;
  Rng rng(3004);
  static const std::vector<Rational> pool{2, -1, Rational(1, 3), 5, Rational(-2, 7), 3};
  const auto targets = sampling_targets();
  int verified = 0, rejected = 0;
  for (int i = 0; i < 200; ++i) {
    const auto& t = targets[i % targets.size()];
    const auto fan = golden::shared(t.fan);
    const auto pres = cox_presentation(t.fan);
    WeakDeltaCollection c = sample(fan, t.degree, rng, 3);
    while (std::any_of(c.sections().begin(), c.sections().end(), [](const BinaryForm& u) { return u.is_zero(); }))
      c = sample(fan, t.degree, rng, 3);
    RatVector s(pres.pic_rank);
    for (auto& x : s) x = pool[rng() % pool.size()];
    const RatVector lambda = gauge_element(pres, s);
    const auto moved = act(c, lambda);
    const auto v = isomorphic(c, moved);
    if (v.status == IsomorphismVerdict::Status::IsomorphicRational && v.witness && act(c, *v.witness) == moved) ++verified;

    // One coordinate doubled: off G.
    RatVector off = lambda;
    off[rng() % off.size()] *= 2;
    const WeakDeltaCollection perturbed(fan, t.degree, act(c, off).sections(), moved.trivializations());
    if (isomorphic(c, perturbed).status == IsomorphismVerdict::Status::NotIsomorphic) ++rejected;
  }
  o.pass = verified == 200 && rejected == 200;
  o.detail = "witnessed " + std::to_string(verified) + "/200, perturbations rejected " + std::to_string(rejected) + "/200";
  return o;
}

Outcome kempf_ness() {
  Outcome o;
  const IntMatrix p2{{1, 1, 1}};
  SolverOptions tight;
  tight.tol = 1e-10;
  const auto closed = kempf_ness_solve({p2, {1}, {1, 1, 1}}, tight);
  const double dt = closed.status == SolveReport::Status::Converged ? std::abs(closed.t[0] + 0.5 * std::log(3.0)) : 1.0;
  const bool closed_ok = dt < 1e-9;

  std::mt19937_64 rng(3005);
  std::uniform_real_distribution<double> unit(-1.0, 1.0), pos(0.1, 2.0);
  std::uniform_int_distribution<int> entry(-2, 2);
  double worst_fd = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = 1 + i % 3, n = 3 + i % 3;
    IntMatrix q(k, n);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t j = 0; j < n; ++j) q(a, j) = entry(rng);
    std::vector<double> s(n), r(k), t(k);
    for (auto& x : s) x = pos(rng);
    for (auto& x : r) x = 2 * unit(rng);
    for (auto& x : t) x = 0.5 * unit(rng);
    const auto g = kempf_ness_gradient(q, s, r, t);
    double err = 0, scale = 1.0;
    for (std::size_t a = 0; a < k; ++a) {
      const double h = 1e-6;
      auto tp = t, tm = t;
      tp[a] += h;
      tm[a] -= h;
      const double fd = (kempf_ness_value(q, s, r, tp) - kempf_ness_value(q, s, r, tm)) / (2 * h);
      err = std::max(err, std::abs(fd - g[a]));
      scale = std::max(scale, std::abs(g[a]));
    }
    worst_fd = std::max(worst_fd, err / scale);
  }

  std::vector<IntMatrix> charges;
  for (const auto& f : golden::fans()) charges.push_back(cox_presentation(f).charge_matrix);
  int agree = 0, converged = 0, residual_ok = 0;
  std::string first_disagreement;
  const SolverOptions opts;
  for (int i = 0; i < 1000; ++i) {
    const auto& q = charges[i % charges.size()];
    RatVector s(q.cols()), r(q.rows());
    RaySet support;
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (rng() % 3 != 0) {
        s[j] = Rational(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 3));
        support.push_back(j);
      }
    for (auto& x : r) x = static_cast<long>(rng() % 7) - 3;
    const auto rep = kempf_ness_solve({q, r, s}, opts);
    const bool conv = rep.status == SolveReport::Status::Converged;
    const Stability exact = semistable(q, support, r);
    if (conv == (exact == Stability::InteriorStable)) {
      ++agree;
    } else if (first_disagreement.empty()) {
      std::ostringstream os;
      os << " (first disagreement: instance " << i << ", solver " << to_string(rep.status) << ", exact "
         << to_string(exact) << ", gradient " << rep.gradient_norm << ")";
      first_disagreement = os.str();
    }
    if (!conv) continue;
    ++converged;
    double worst = 0;
    for (std::size_t a = 0; a < q.rows(); ++a) {
      double m = -r[a].get_d();
      for (std::size_t j = 0; j < q.cols(); ++j) {
        double dot = 0;
        for (std::size_t b = 0; b < q.rows(); ++b) dot += q(b, j).get_d() * rep.t[b];
        m += q(a, j).get_d() * s[j].get_d() * std::exp(2 * dot);
      }
      worst = std::max(worst, std::abs(m));
    }
    residual_ok += worst < opts.tol ? 1 : 0;
  }

  o.pass = closed_ok && worst_fd < 1e-5 && agree == 1000 && residual_ok == converged;
  std::ostringstream os;
  os << "|dt| " << dt << ", fd rel err " << worst_fd << ", agreement " << agree << "/1000, residual < tol "
     << residual_ok << "/" << converged << first_disagreement;
  o.detail = os.str();
  return o;
}

std::optional<IntVector> find_kahler_class(const Fan& f, const CoxPresentation& pres) {
  IntVector a(pres.pic_rank, -3);
  for (;;) {
    if (kahler_cone_contains(f, pres, a)) return a;
    std::size_t i = 0;
    while (i < a.size() && a[i] == 3) a[i++] = -3;
    if (i == a.size()) return std::nullopt;
    a[i] += 1;
  }
}

Outcome phases() {
  Outcome o;
  int matched = 0;
  const auto fans = golden::fans();
  for (const auto& f : fans) {
    const auto pres = cox_presentation(f);
    const auto a = find_kahler_class(f, pres);
    if (!a) {
      o.detail += " no Kahler class for " + f.name + ";";
      continue;
    }
    const auto supports = unstable_supports(pres.charge_matrix, to_rational(*a));
    if (supports == primitive_collections(f) && supports == oracle::primitive_collections(f)) ++matched;
    else o.detail += " mismatch on " + f.name + ";";
  }
  o.pass = matched == static_cast<int>(fans.size());
  o.detail = std::to_string(matched) + "/" + std::to_string(fans.size()) + " fans" + o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 cox golden suite", cox_golden},
      {"2 dimension formula", dimension_formula},
      {"3 nondegeneracy decision", nondegeneracy},
      {"4 F_d bridge", bridge},
      {"5 collapsing morphism", collapsing},
      {"6 isomorphism and G-orbits", isomorphism},
      {"7 Kempf-Ness solver", kempf_ness},
      {"8 phase and fan consistency", phases},
  };
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << secs << " s, " << failures << " failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
