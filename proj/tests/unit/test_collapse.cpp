#include <doctest.h>

#include <random>

#include "amt/collapse.hpp"
#include "amt/error.hpp"
#include "amt/moduli.hpp"
#include "golden.hpp"

using namespace amt;

namespace {

WeakDeltaCollection p2_line(const std::string& a, const std::string& b, const std::string& c) {
  return WeakDeltaCollection(golden::shared(projective_space(2)), {{1, 1, 1}},
                             {parse_form(a), parse_form(b), parse_form(c)});
}

Mobius random_mobius(std::mt19937_64& rng) {
  for (;;) {
    const Rational a = draw_bounded(rng, 3), b = draw_bounded(rng, 3), c = draw_bounded(rng, 3),
                   d = draw_bounded(rng, 3);
    if (a * d - b * c != 0) return Mobius(a, b, c, d);
  }
}

GenusZeroStableMapData random_stable_map(std::mt19937_64& rng, const std::shared_ptr<const Fan>& fan,
                                   const Multidegree& main_degree, const std::vector<Multidegree>& trees) {
  WeakDeltaCollection main = sample(fan, main_degree, rng, 3);
  while (!is_nondegenerate(main)) main = sample(fan, main_degree, rng, 3);
  GenusZeroStableMapData data{main, {}};
  const std::size_t n = rng() % 4;
  for (std::size_t i = 0; i < n; ++i) {
    ProjectivePoint p{Rational(static_cast<long>(i) * 2 - 3 + static_cast<long>(rng() % 2)), 1};
    if (rng() % 5 == 0 && i == 0) p = {1, 0};
    data.attachments.push_back({p, trees[rng() % trees.size()]});
  }
  return data;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate({p2_line("z0", "z1", "z0 + z1"), {}}).ok());
  CHECK_FALSE(validate({p2_line("z0", "z0", "z0"), {}}).ok());
  const Multidegree one{{1, 1, 1}};
  CHECK_FALSE(validate({p2_line("z0", "z1", "z0 + z1"), {{{0, 1}, one}, {{0, 2}, one}}}).ok());
  CHECK_FALSE(validate({p2_line("z0", "z1", "z0 + z1"), {{{0, 1}, {{0, 0, 0}}}}}).ok());
  CHECK_FALSE(validate({p2_line("z0", "z1", "z0 + z1"), {{{0, 1}, {{1, 0, 0}}}}}).ok());
  CHECK_FALSE(validate({p2_line("z0", "z1", "z0 + z1"), {{{0, 0}, one}}}).ok());
  CHECK_FALSE(validate({p2_line("z0", "z1", "z0 + z1"), {{{0, 1}, {{1, 1}}}}}).ok());
  const WeakDeltaCollection f1(golden::shared(hirzebruch(1)), {{1, 0, 1, 1}},
                               {parse_form("z0"), parse_form("1"), parse_form("z1"), parse_form("z0 + z1")});
  CHECK_FALSE(validate({f1, {}}).ok());
  CHECK_THROWS_AS(collapse({p2_line("z0", "z0", "z0"), {}}), DomainError);
}

TEST_CASE("collapse examples") {
  const auto main = p2_line("z0", "z1", "z0 + z1");
  const auto id = collapse({main, {}});
  CHECK(id.collection == main);
  CHECK(id.total_degree == Multidegree{{1, 1, 1}});

  const auto r = collapse({main, {{{0, 1}, {{1, 1, 1}}}}});
  CHECK(r.collection.sections() ==
        std::vector<BinaryForm>{parse_form("z0^2"), parse_form("z0*z1"), parse_form("z0^2 + z0*z1")});
  CHECK(r.total_degree == Multidegree{{2, 2, 2}});
  CHECK(base_divisor(r.collection) == parse_form("z0"));

  const WeakDeltaCollection line(golden::shared(golden::p1_target()), {{1, 1}}, {parse_form("z0"), parse_form("z1")});
  const auto s = collapse({line, {{{1, 0}, {{2, 2}}}}});
  CHECK(s.collection.sections() == std::vector<BinaryForm>{parse_form("z0*z1^2"), parse_form("z1^3")});
  CHECK(s.total_degree == Multidegree{{3, 3}});
  CHECK(base_divisor(s.collection) == parse_form("z1^2"));
}

TEST_CASE("reparametrization") {
  const auto main = p2_line("z0", "z1", "z0 + z1");
  CHECK(reparametrize(main, Mobius::identity()) == main);
  CHECK(reparametrize(main, Mobius::swap()).sections() ==
        std::vector<BinaryForm>{parse_form("z1"), parse_form("z0"), parse_form("z0 + z1")});
  const auto moved = reparametrize(GenusZeroStableMapData{main, {{{0, 1}, {{1, 1, 1}}}}}, Mobius::swap());
  CHECK(same_point(moved.attachments[0].point, {1, 0}));
}

TEST_CASE("collapse is additive, equivariant and lands outside F_d") {
  std::mt19937_64 rng(61);
  struct Case {
    Fan fan;
    Multidegree main;
    std::vector<Multidegree> trees;
  };
  const std::vector<Case> cases{
      {projective_space(2), {{1, 1, 1}}, {{{1, 1, 1}}, {{2, 2, 2}}}},
      {product_p1_p1(), {{1, 1, 1, 1}}, {{{1, 1, 0, 0}}, {{0, 0, 1, 1}}, {{1, 1, 2, 2}}}},
      {golden::p1_target(), {{1, 1}}, {{{1, 1}}, {{3, 3}}}}};
  for (int trial = 0; trial < 60; ++trial) {
    const auto& cs = cases[trial % cases.size()];
    const auto data = random_stable_map(rng, golden::shared(cs.fan), cs.main, cs.trees);
    REQUIRE(validate(data).ok());
    const auto out = collapse(data);
    Multidegree total = data.main.degree();
    for (const auto& a : data.attachments) total = total + a.degree;
    CHECK(out.total_degree == total);
    CHECK(out.collection.degree() == total);
    CHECK(is_nonvanishing(out.collection));
    CHECK_FALSE(in_F_d(out.collection));
    CHECK(is_nondegenerate(out.collection) == data.attachments.empty());
    for (const auto& a : data.attachments) CHECK(vanishes_at(base_divisor(out.collection), a.point));

    const auto g = random_mobius(rng);
    CHECK(collapse(reparametrize(data, g)).collection == reparametrize(out.collection, g));
  }
}
