#include "amt/polyhedral.hpp"

#include <map>

#include "amt/error.hpp"

namespace amt {

LinearConstraint less_equal(RatVector coeffs, Rational rhs) {
  return {std::move(coeffs), Relation::LessEqual, std::move(rhs)};
}
LinearConstraint less(RatVector coeffs, Rational rhs) {
  return {std::move(coeffs), Relation::Less, std::move(rhs)};
}
LinearConstraint greater_equal(RatVector coeffs, Rational rhs) {
  for (auto& c : coeffs) c = -c;
  return {std::move(coeffs), Relation::LessEqual, -rhs};
}
LinearConstraint greater(RatVector coeffs, Rational rhs) {
  for (auto& c : coeffs) c = -c;
  return {std::move(coeffs), Relation::Less, -rhs};
}
LinearConstraint equal(RatVector coeffs, Rational rhs) {
  return {std::move(coeffs), Relation::Equal, std::move(rhs)};
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool satisfies(const RatVector& x, const LinearConstraint& c) {
  Rational lhs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) lhs += c.coeffs[i] * x[i];
  switch (c.relation) {
    case Relation::LessEqual: return lhs <= c.rhs;
    case Relation::Less: return lhs < c.rhs;
    case Relation::Equal: return lhs == c.rhs;
  }
  return false;
}

namespace {

// a . x <= b, or < b when strict.
struct Inequality {
  RatVector a;
  Rational b;
  bool strict = false;
};

// Keyed on the scaled coefficient vector; only the tightest bound is kept.
class InequalitySet {
 public:
  // Returns false if a constant constraint is violated.
  bool add(Inequality q) {
    std::size_t lead = 0;
    while (lead < q.a.size() && q.a[lead] == 0) ++lead;
    if (lead == q.a.size()) return q.strict ? (0 < q.b) : (0 <= q.b);
    const Rational scale = abs(q.a[lead]);
    for (auto& c : q.a) c /= scale;
    q.b /= scale;

    std::vector<mpq_class> key = q.a;
    auto it = rows_.find(key);
    if (it == rows_.end()) {
      rows_.emplace(std::move(key), Bound{q.b, q.strict});
    } else if (q.b < it->second.rhs || (q.b == it->second.rhs && q.strict)) {
      it->second = Bound{q.b, q.strict};
    }
    return true;
  }

  std::vector<Inequality> items() const {
    std::vector<Inequality> out;
    out.reserve(rows_.size());
    for (const auto& [a, bound] : rows_) out.push_back({a, bound.rhs, bound.strict});
    return out;
  }

 private:
  struct Bound {
    Rational rhs;
    bool strict;
  };
  struct Less {
    bool operator()(const RatVector& x, const RatVector& y) const {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < y[i]) return true;
        if (y[i] < x[i]) return false;
      }
      return false;
    }
  };
  std::map<RatVector, Bound, Less> rows_;
};

Rational pick_between(const std::optional<Rational>& lo, bool lo_strict,
                      const std::optional<Rational>& hi, bool hi_strict) {
  auto admits = [&](const Rational& v) {
    if (lo && (lo_strict ? !(v > *lo) : !(v >= *lo))) return false;
    if (hi && (hi_strict ? !(v < *hi) : !(v <= *hi))) return false;
    return true;
  };
  if (admits(0)) return 0;
  if (lo && hi) {
    if (!lo_strict) return *lo;
    if (!hi_strict) return *hi;
    return (*lo + *hi) / 2;
  }
  if (lo) return lo_strict ? *lo + 1 : *lo;
  return hi_strict ? *hi - 1 : *hi;
}

}  // namespace

std::optional<RatVector> find_feasible_point(std::size_t dimension,
                                             const std::vector<LinearConstraint>& system) {
  // stages[k] holds the system over variables 0..k-1.
  std::vector<std::vector<Inequality>> stages(dimension + 1);
  {
    InequalitySet initial;
    for (const auto& c : system) {
      if (c.coeffs.size() != dimension)
        throw DimensionError("find_feasible_point: constraint length mismatch");
      if (c.relation == Relation::Equal) {
        RatVector neg = c.coeffs;
        for (auto& x : neg) x = -x;
        if (!initial.add({c.coeffs, c.rhs, false})) return std::nullopt;
        if (!initial.add({std::move(neg), -c.rhs, false})) return std::nullopt;
      } else if (!initial.add({c.coeffs, c.rhs, c.relation == Relation::Less})) {
        return std::nullopt;
      }
    }
    stages[dimension] = initial.items();
  }

  for (std::size_t k = dimension; k > 0; --k) {
    const std::size_t var = k - 1;
    std::vector<const Inequality*> upper, lower;
    InequalitySet next;
    for (const auto& q : stages[k]) {
      if (q.a[var] > 0) {
        upper.push_back(&q);
      } else if (q.a[var] < 0) {
        lower.push_back(&q);
      } else if (!next.add(q)) {
        return std::nullopt;
      }
    }
    for (const auto* p : upper)
      for (const auto* n : lower) {
        const Rational cp = p->a[var];
        const Rational cn = -n->a[var];
        Inequality combined{RatVector(dimension, Rational(0)), cn * p->b + cp * n->b,
                            p->strict || n->strict};
        for (std::size_t i = 0; i < dimension; ++i)
          combined.a[i] = cn * p->a[i] + cp * n->a[i];
        combined.a[var] = 0;
        if (!next.add(std::move(combined))) return std::nullopt;
      }
    stages[var] = next.items();
  }
  for (const auto& q : stages[0])
    if (q.strict ? !(0 < q.b) : !(0 <= q.b)) return std::nullopt;

  RatVector x(dimension, Rational(0));
  for (std::size_t var = 0; var < dimension; ++var) {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& q : stages[var + 1]) {
      if (q.a[var] == 0) continue;
      Rational rest = q.b;
      for (std::size_t i = 0; i < var; ++i) rest -= q.a[i] * x[i];
      const Rational bound = rest / q.a[var];
      if (q.a[var] > 0) {
        if (!hi || bound < *hi || (bound == *hi && q.strict)) {
          hi = bound;
          hi_strict = q.strict;
        }
      } else if (!lo || bound > *lo || (bound == *lo && q.strict)) {
        lo = bound;
        lo_strict = q.strict;
      }
    }
    x[var] = pick_between(lo, lo_strict, hi, hi_strict);
  }
  return x;
}

}  // namespace amt
