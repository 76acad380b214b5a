#include "amt/forms.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "amt/error.hpp"

namespace amt {

bool same_point(const ProjectivePoint& p, const ProjectivePoint& q) {
  return p.a * q.b == p.b * q.a;
}

std::string to_string(const ProjectivePoint& p) {
  return "[" + to_string(p.a) + ":" + to_string(p.b) + "]";
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  auto digits = [&]() {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("expected digits in rational '" + std::string(text) + "'", i);
    return Integer(std::string(text.substr(start, i - start)));
  };
  Integer num = digits();
  Integer den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits();
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", i);
  }
  skip_ws();
  if (i != text.size())
    throw ParseError("trailing characters in rational '" + std::string(text) + "'", i);
  Rational q(negative ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Univariate helpers; coefficient i multiplies x^i, no trailing zeros.

namespace {

using Poly = RatVector;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  const std::size_t m = b.size();
  Poly q(a.size() - m + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t step = q.size(); step-- > 0;) {
    const std::size_t top = step + m - 1;
    if (a[top] == 0) continue;
    const Rational f = a[top] / lead;
    q[step] = f;
    for (std::size_t j = 0; j < m; ++j) a[step + j] -= f * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly monic(Poly p) {
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Dehomogenize at z1 = 1: coefficient of z0^j.
Poly dehomogenize_z1(const BinaryForm& f) {
  const std::size_t d = f.degree();
  Poly p(d + 1);
  for (std::size_t j = 0; j <= d; ++j) p[j] = f.coefficient(d - j);
  trim(p);
  return p;
}

// Coefficients read as a polynomial in z1 (z0 = 1).
Poly as_z1_poly(const BinaryForm& f) {
  Poly p = f.coefficients();
  trim(p);
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------

BinaryForm::BinaryForm(RatVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DimensionError("BinaryForm: need at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

BinaryForm BinaryForm::zero(std::size_t degree) {
  return BinaryForm(RatVector(degree + 1, Rational(0)));
}

BinaryForm BinaryForm::constant(const Rational& c) { return BinaryForm(RatVector{c}); }

BinaryForm BinaryForm::monomial(const Rational& c, std::size_t a, std::size_t b) {
  RatVector v(a + b + 1, Rational(0));
  v[b] = c;
  return BinaryForm(std::move(v));
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::size_t BinaryForm::z1_multiplicity() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k;
}

BinaryForm BinaryForm::operator-() const { return scaled(-1); }

BinaryForm BinaryForm::scaled(const Rational& c) const {
  RatVector v = coeffs_;
  for (auto& x : v) x *= c;
  return BinaryForm(std::move(v));
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) throw DimensionError("BinaryForm +: degrees differ");
  RatVector v = f.coefficients();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += g.coefficient(k);
  return BinaryForm(std::move(v));
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return f + (-g); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class FormParser {
 public:
  explicit FormParser(std::string_view text) : s_(text) {}

  BinaryForm parse(std::optional<std::size_t> expected) {
    struct Term {
      Rational coeff;
      std::size_t z0 = 0;
      std::size_t z1 = 0;
      std::size_t pos = 0;
    };
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty form", pos_);
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = get() == '-';
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      Term t{Rational(1), 0, 0, pos_};
      parse_term(t.coeff, t.z0, t.z1);
      if (negative) t.coeff = -t.coeff;
      terms.push_back(t);
      first = false;
      skip_ws();
    }

    const std::size_t degree = terms.front().z0 + terms.front().z1;
    for (const auto& t : terms)
      if (t.z0 + t.z1 != degree)
        throw ParseError("inhomogeneous form: term of degree " + std::to_string(t.z0 + t.z1) +
                             " in a form of degree " + std::to_string(degree),
                         t.pos);

    RatVector coeffs(degree + 1, Rational(0));
    for (const auto& t : terms) coeffs[t.z1] += t.coeff;
    BinaryForm f(std::move(coeffs));
    if (expected && *expected != degree) {
      if (degree == 0 && f.is_zero()) return BinaryForm::zero(*expected);
      throw ParseError("degree mismatch: expected " + std::to_string(*expected) + ", found " +
                           std::to_string(degree),
                       0);
    }
    return f;
  }

 private:
  void parse_term(Rational& coeff, std::size_t& z0, std::size_t& z1) {
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
      } else if (c == 'z') {
        const std::size_t var_pos = pos_;
        get();
        if (at_end() || (peek() != '0' && peek() != '1'))
          throw ParseError("expected variable z0 or z1", var_pos);
        const bool is_z0 = get() == '0';
        std::size_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          get();
          skip_ws();
          e = parse_exponent();
        }
        (is_z0 ? z0 : z1) += e;
      } else if (any && (c == '+' || c == '-')) {
        break;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        skip_ws();
        if (at_end() || peek() == '+' || peek() == '-')
          throw ParseError("expected factor after '*'", pos_);
      }
    }
    if (!any) throw ParseError("expected a term", pos_);
  }

  Integer parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Rational parse_number() {
    Integer num = parse_digits();
    Integer den = 1;
    if (!at_end() && peek() == '/') {
      get();
      const std::size_t at = pos_;
      den = parse_digits();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::size_t parse_exponent() {
    const std::size_t at = pos_;
    const Integer e = parse_digits();
    if (e > 100000) throw ParseError("exponent too large", at);
    return e.get_ui();
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BinaryForm parse_form(std::string_view text, std::optional<std::size_t> expected_degree) {
  return FormParser(text).parse(expected_degree);
}

std::string to_string(const BinaryForm& f) {
  if (f.is_zero()) return "0";
  const std::size_t d = f.degree();
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k <= d; ++k) {
    const Rational& c = f.coefficient(k);
    if (c == 0) continue;
    std::string mono;
    auto append_var = [&mono](const char* var, std::size_t e) {
      if (e == 0) return;
      if (!mono.empty()) mono += '*';
      mono += var;
      if (e > 1) mono += '^' + std::to_string(e);
    };
    append_var("z0", d - k);
    append_var("z1", k);

    const Rational mag = abs(c);
    std::string term;
    if (mono.empty())
      term = to_string(mag);
    else if (mag == 1)
      term = mono;
    else
      term = to_string(mag) + "*" + mono;

    if (first)
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic

BinaryForm mul(const BinaryForm& f, const BinaryForm& g) {
  RatVector v(f.degree() + g.degree() + 1, Rational(0));
  for (std::size_t i = 0; i <= f.degree(); ++i) {
    if (f.coefficient(i) == 0) continue;
    for (std::size_t j = 0; j <= g.degree(); ++j) v[i + j] += f.coefficient(i) * g.coefficient(j);
  }
  return BinaryForm(std::move(v));
}

BinaryForm pow(const BinaryForm& f, std::size_t e) {
  BinaryForm result = BinaryForm::constant(1);
  BinaryForm base = f;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

BinaryForm gcd(const std::vector<BinaryForm>& fs) {
  std::size_t common_z1 = 0;
  bool any = false;
  Poly g;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    const std::size_t m = f.z1_multiplicity();
    common_z1 = any ? std::min(common_z1, m) : m;
    g = poly_gcd(g, dehomogenize_z1(f));
    any = true;
  }
  if (!any) throw DomainError("gcd: all forms are zero");

  const std::size_t deg = (g.size() - 1) + common_z1;
  RatVector coeffs(deg + 1, Rational(0));
  for (std::size_t j = 0; j < g.size(); ++j) coeffs[deg - j] = g[j];
  return BinaryForm(std::move(coeffs));
}

std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw DomainError("divide_exact: division by the zero form");
  if (g.degree() > f.degree()) return std::nullopt;
  const std::size_t qdeg = f.degree() - g.degree();
  if (f.is_zero()) return BinaryForm::zero(qdeg);
  auto [q, r] = divmod(as_z1_poly(f), as_z1_poly(g));
  if (!r.empty() || q.size() > qdeg + 1) return std::nullopt;
  q.resize(qdeg + 1, Rational(0));
  return BinaryForm(std::move(q));
}

bool divides(const BinaryForm& g, const BinaryForm& f) { return divide_exact(f, g).has_value(); }

Rational evaluate(const BinaryForm& f, const ProjectivePoint& p) {
  if (p.a == 0 && p.b == 0) throw DomainError("evaluate: [0:0] is not a point of P^1");
  const std::size_t d = f.degree();
  Rational acc = 0;
  Rational bpow = 1;
  std::vector<Rational> apow(d + 1);
  apow[0] = 1;
  for (std::size_t i = 1; i <= d; ++i) apow[i] = apow[i - 1] * p.a;
  for (std::size_t k = 0; k <= d; ++k) {
    acc += f.coefficient(k) * apow[d - k] * bpow;
    bpow *= p.b;
  }
  return acc;
}

bool vanishes_at(const BinaryForm& f, const ProjectivePoint& p) { return evaluate(f, p) == 0; }

BinaryForm linear_form_at(const ProjectivePoint& p) {
  if (p.a == 0 && p.b == 0) throw DomainError("linear_form_at: [0:0] is not a point of P^1");
  return BinaryForm(RatVector{p.b, -p.a});
}

BinaryForm compose(const BinaryForm& f, const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw DimensionError("compose: substituted forms differ in degree");
  const std::size_t d = f.degree();
  const std::size_t k = a.degree();
  BinaryForm out = BinaryForm::zero(d * k);
  if (f.is_zero()) return out;
  std::vector<BinaryForm> apow{BinaryForm::constant(1)}, bpow{BinaryForm::constant(1)};
  for (std::size_t i = 1; i <= d; ++i) {
    apow.push_back(mul(apow.back(), a));
    bpow.push_back(mul(bpow.back(), b));
  }
  for (std::size_t j = 0; j <= d; ++j) {
    if (f.coefficient(j) == 0) continue;
    out = out + mul(apow[d - j], bpow[j]).scaled(f.coefficient(j));
  }
  return out;
}

BinaryForm derivative(const BinaryForm& f, int var) {
  if (var != 0 && var != 1) throw DomainError("derivative: variable must be 0 or 1");
  const std::size_t d = f.degree();
  if (d == 0) return BinaryForm::zero(0);
  RatVector v(d, Rational(0));
  for (std::size_t k = 0; k <= d; ++k) {
    if (var == 0 && k < d) v[k] = f.coefficient(k) * static_cast<unsigned long>(d - k);
    if (var == 1 && k > 0) v[k - 1] = f.coefficient(k) * static_cast<unsigned long>(k);
  }
  return BinaryForm(std::move(v));
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    small.push_back(i);
    if (i * i != n) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<ProjectivePoint> rational_roots(const BinaryForm& f) {
  if (f.is_zero()) throw DomainError("rational_roots: the zero form vanishes everywhere");
  std::vector<ProjectivePoint> out;
  if (f.z1_multiplicity() > 0) out.push_back({Rational(1), Rational(0)});

  Poly p = dehomogenize_z1(f);  // roots r give [r:1]
  Integer den = 1;
  for (const auto& c : p) den = lcm(den, c.get_den());
  std::vector<Integer> ip;
  for (const auto& c : p) ip.push_back(Integer(c * den));
  std::size_t low = 0;
  while (ip[low] == 0) ++low;

  std::set<Rational> roots;
  if (low > 0) roots.insert(Rational(0));
  const Integer& a0 = ip[low];
  const Integer& an = ip.back();
  if (ip.size() - low > 1) {
    for (const auto& u : positive_divisors(a0))
      for (const auto& v : positive_divisors(an))
        for (int sign : {1, -1}) {
          Rational r(sign * u, v);
          r.canonicalize();
          Rational acc = 0;
          for (std::size_t j = p.size(); j-- > 0;) acc = acc * r + p[j];
          if (acc == 0) roots.insert(r);
        }
  }
  for (const auto& r : roots) out.push_back({r, Rational(1)});
  return out;
}

// ---------------------------------------------------------------------------

Mobius::Mobius(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (determinant() == 0) throw DomainError("Mobius: singular matrix");
}

Mobius Mobius::identity() { return Mobius(1, 0, 0, 1); }
Mobius Mobius::swap() { return Mobius(0, 1, 1, 0); }

Mobius Mobius::inverse() const {
  const Rational det = determinant();
  return Mobius(d_ / det, -b_ / det, -c_ / det, a_ / det);
}

Mobius Mobius::adjugate() const { return Mobius(d_, -b_, -c_, a_); }

ProjectivePoint Mobius::apply(const ProjectivePoint& p) const {
  return {a_ * p.a + b_ * p.b, c_ * p.a + d_ * p.b};
}

BinaryForm substitute(const BinaryForm& f, const Mobius& g) {
  return compose(f, BinaryForm(RatVector{g.a(), g.b()}), BinaryForm(RatVector{g.c(), g.d()}));
}

}  // namespace amt
