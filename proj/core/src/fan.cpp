#include "amt/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "amt/error.hpp"
#include "amt/polyhedral.hpp"

namespace amt {

IntMatrix Fan::ray_matrix() const { return IntMatrix::from_rows(rays, dim); }

RaySet Fan::complement(const RaySet& cone) const {
  RaySet out;
  for (std::size_t r = 0; r < rays.size(); ++r)
    if (!std::binary_search(cone.begin(), cone.end(), r)) out.push_back(r);
  return out;
}

namespace {

std::string vec_str(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

IntMatrix cone_generators(const Fan& f, const RaySet& cone) {
  std::vector<IntVector> gens;
  for (auto r : cone) gens.push_back(f.rays[r]);
  return IntMatrix::from_rows(gens, f.dim);
}

RaySet intersect(const RaySet& a, const RaySet& b) {
  RaySet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RaySet difference(const RaySet& a, const RaySet& b) {
  RaySet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// For simplicial cones: cone(S) ∩ cone(T) = cone(S ∩ T) iff some m is zero on
// S ∩ T, positive on S \ T and negative on T \ S.
bool meet_in_common_face(const Fan& f, const RaySet& s, const RaySet& t) {
  std::vector<LinearConstraint> system;
  for (auto r : intersect(s, t)) system.push_back(equal(to_rational(f.rays[r])));
  for (auto r : difference(s, t)) system.push_back(greater(to_rational(f.rays[r])));
  for (auto r : difference(t, s)) system.push_back(less(to_rational(f.rays[r])));
  return find_feasible_point(f.dim, system).has_value();
}

void require_valid(const Fan& f, const char* op) {
  const FanReport rep = validate_fan(f);
  if (!rep.ok())
    throw DomainError(std::string(op) + ": invalid fan '" + f.name + "': " + rep.violations.front());
}

}  // namespace

FanReport validate_fan(const Fan& f) {
  FanReport rep;
  auto bad = [&rep](std::string s) { rep.violations.push_back(std::move(s)); };

  if (f.dim == 0) bad("lattice dimension must be positive");
  bool shapes_ok = true;
  for (std::size_t r = 0; r < f.rays.size(); ++r) {
    const auto& ray = f.rays[r];
    if (ray.size() != f.dim) {
      bad("ray " + std::to_string(r) + " has length " + std::to_string(ray.size()) +
          ", expected " + std::to_string(f.dim));
      shapes_ok = false;
      continue;
    }
    if (gcd_of(ray) == 0)
      bad("ray " + std::to_string(r) + " is zero");
    else if (!is_primitive(ray))
      bad("ray " + std::to_string(r) + " " + vec_str(ray) + " is not primitive");
  }
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& cone = f.max_cones[c];
    if (cone.empty()) bad("cone " + std::to_string(c) + " is empty");
    for (std::size_t i = 0; i < cone.size(); ++i) {
      if (cone[i] >= f.rays.size()) {
        bad("cone " + std::to_string(c) + " references missing ray " + std::to_string(cone[i]));
        shapes_ok = false;
      } else if (i > 0 && cone[i] <= cone[i - 1]) {
        bad("cone " + std::to_string(c) + " indices are not strictly increasing");
        shapes_ok = false;
      }
    }
  }
  if (!shapes_ok || f.dim == 0) return rep;

  for (std::size_t a = 0; a < f.rays.size(); ++a)
    for (std::size_t b = a + 1; b < f.rays.size(); ++b)
      if (f.rays[a] == f.rays[b])
        bad("rays " + std::to_string(a) + " and " + std::to_string(b) + " coincide");

  if (rank(f.ray_matrix()) != f.dim) bad("rays do not span the lattice");

  std::vector<bool> used(f.rays.size(), false);
  for (const auto& cone : f.max_cones)
    for (auto r : cone) used[r] = true;
  for (std::size_t r = 0; r < used.size(); ++r)
    if (!used[r]) bad("ray " + std::to_string(r) + " lies in no max cone");

  std::vector<bool> simplicial(f.max_cones.size(), false);
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& cone = f.max_cones[c];
    if (cone.empty()) continue;
    simplicial[c] = rank(cone_generators(f, cone)) == cone.size();
    if (!simplicial[c]) bad("cone " + std::to_string(c) + " is not simplicial");
  }

  for (std::size_t a = 0; a < f.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < f.max_cones.size(); ++b) {
      if (!simplicial[a] || !simplicial[b]) continue;
      const auto& s = f.max_cones[a];
      const auto& t = f.max_cones[b];
      const std::string pair = "cones " + std::to_string(a) + " and " + std::to_string(b);
      if (s == t) {
        bad(pair + " are identical");
      } else if (!meet_in_common_face(f, s, t)) {
        bad(pair + " intersect outside a common face");
      } else if (std::includes(s.begin(), s.end(), t.begin(), t.end()) ||
                 std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        bad(pair + ": one is a face of the other, so it is not maximal");
      }
    }
  return rep;
}

bool is_smooth(const Fan& f) {
  require_valid(f, "is_smooth");
  for (const auto& cone : f.max_cones) {
    for (const auto& d : smith_normal_form(cone_generators(f, cone)).invariant_factors())
      if (d != 1) return false;
  }
  return true;
}

namespace {

bool in_simplicial_cone(const Fan& f, const RaySet& cone, const IntVector& x) {
  // Full-dimensional and simplicial, so the coefficients are unique.
  std::vector<IntVector> cols;
  for (auto r : cone) cols.push_back(f.rays[r]);
  const auto coeffs = solve_rational(IntMatrix::from_columns(cols, f.dim), x);
  return coeffs && std::all_of(coeffs->begin(), coeffs->end(),
                               [](const Rational& c) { return c >= 0; });
}

std::map<RaySet, std::vector<std::size_t>> facet_owners(const Fan& f) {
  std::map<RaySet, std::vector<std::size_t>> owners;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& cone = f.max_cones[c];
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      RaySet facet;
      for (std::size_t i = 0; i < cone.size(); ++i)
        if (i != drop) facet.push_back(cone[i]);
      owners[facet].push_back(c);
    }
  }
  return owners;
}

}  // namespace

CompletenessReport completeness_report(const Fan& f, std::uint64_t seed, std::size_t samples) {
  require_valid(f, "is_complete");
  CompletenessReport rep;
  rep.full_dimensional = std::all_of(f.max_cones.begin(), f.max_cones.end(),
                                     [&](const RaySet& c) { return c.size() == f.dim; });

  const auto owners = facet_owners(f);
  rep.facets_shared_twice = std::all_of(owners.begin(), owners.end(),
                                        [](const auto& kv) { return kv.second.size() == 2; });

  const std::size_t m = f.max_cones.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [facet, cones] : owners)
    for (std::size_t i = 1; i < cones.size(); ++i) parent[find(cones[i])] = find(cones[0]);
  std::set<std::size_t> roots;
  for (std::size_t c = 0; c < m; ++c) roots.insert(find(c));
  rep.adjacency_connected = roots.size() == 1;

  if (!rep.full_dimensional) return rep;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    IntVector dir(f.dim);
    for (auto& x : dir) x = static_cast<long>(rng() % 2001) - 1000;
    ++rep.directions_sampled;
    bool covered = std::any_of(f.max_cones.begin(), f.max_cones.end(),
                               [&](const RaySet& c) { return in_simplicial_cone(f, c, dir); });
    if (!covered) ++rep.directions_uncovered;
  }
  return rep;
}

bool is_complete(const Fan& f) { return completeness_report(f).complete(); }

std::vector<Wall> walls(const Fan& f) {
  if (!is_smooth(f)) throw DomainError("walls: fan '" + f.name + "' is not smooth");
  if (!is_complete(f)) throw DomainError("walls: fan '" + f.name + "' is not complete");

  const auto owners = facet_owners(f);
  std::vector<Wall> out;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& cone = f.max_cones[c];
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      RaySet facet;
      for (std::size_t i = 0; i < cone.size(); ++i)
        if (i != drop) facet.push_back(cone[i]);
      const auto& pair = owners.at(facet);
      const std::size_t other = pair[0] == c ? pair[1] : pair[0];
      if (other < c) continue;

      const std::size_t left_ray = cone[drop];
      const std::size_t right_ray = difference(f.max_cones[other], facet).front();
      IntVector target(f.dim);
      for (std::size_t j = 0; j < f.dim; ++j)
        target[j] = -(f.rays[left_ray][j] + f.rays[right_ray][j]);
      std::vector<IntVector> cols;
      for (auto r : facet) cols.push_back(f.rays[r]);
      const auto coeffs = solve_integer(IntMatrix::from_columns(cols, f.dim), target);
      if (!coeffs)
        throw DomainError("walls: no integral wall relation across facet of cone " +
                          std::to_string(c));

      Wall w{facet, c, other, IntVector(f.rays.size(), Integer(0))};
      w.relation[left_ray] = 1;
      w.relation[right_ray] = 1;
      for (std::size_t i = 0; i < facet.size(); ++i) w.relation[facet[i]] = (*coeffs)[i];
      out.push_back(std::move(w));
    }
  }
  return out;
}

NefReport prime_divisors_nef(const Fan& f) {
  const auto ws = walls(f);
  NefReport rep;
  rep.divisor_nef.assign(f.rays.size(), true);
  rep.min_wall_degree.assign(f.rays.size(), Integer(0));
  for (std::size_t r = 0; r < f.rays.size(); ++r) {
    bool first = true;
    for (const auto& w : ws) {
      if (first || w.relation[r] < rep.min_wall_degree[r]) rep.min_wall_degree[r] = w.relation[r];
      first = false;
    }
    rep.divisor_nef[r] = rep.min_wall_degree[r] >= 0;
    rep.all_nef = rep.all_nef && rep.divisor_nef[r];
  }
  return rep;
}

Fan projective_space(std::size_t n) {
  Fan f;
  f.name = "P" + std::to_string(n);
  f.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    f.rays.push_back(std::move(e));
  }
  f.rays.push_back(IntVector(n, Integer(-1)));
  for (std::size_t skip = 0; skip <= n; ++skip) {
    RaySet cone;
    for (std::size_t r = 0; r <= n; ++r)
      if (r != skip) cone.push_back(r);
    f.max_cones.push_back(std::move(cone));
  }
  return f;
}

Fan product_p1_p1() {
  Fan f;
  f.name = "P1xP1";
  f.dim = 2;
  f.rays = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  f.max_cones = {{0, 2}, {1, 2}, {1, 3}, {0, 3}};
  return f;
}

Fan hirzebruch(long a) {
  Fan f;
  f.name = "F" + std::to_string(a);
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
  f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return f;
}

}  // namespace amt
