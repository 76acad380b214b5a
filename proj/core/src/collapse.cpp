#include "amt/collapse.hpp"

#include "amt/error.hpp"

namespace amt {

CollapseReport validate(const GenusZeroStableMapData& data) {
  CollapseReport rep;
  auto bad = [&rep](std::string s) { rep.violations.push_back(std::move(s)); };
  const Fan& f = data.main.fan();

  try {
    if (!prime_divisors_nef(f).all_nef)
      bad("fan '" + f.name + "' fails the convexity proxy (some prime divisor is not nef)");
  } catch (const Error& e) {
    bad(std::string("fan check failed: ") + e.what());
  }

  if (!is_nondegenerate(data.main)) bad("main component is degenerate (has base points)");

  for (std::size_t i = 0; i < data.attachments.size(); ++i) {
    const auto& att = data.attachments[i];
    const std::string tag = "attachment " + std::to_string(i);
    if (att.point.a == 0 && att.point.b == 0) bad(tag + ": point [0:0] is not in P^1");
    if (att.degree.size() != f.ray_count()) {
      bad(tag + ": degree has " + std::to_string(att.degree.size()) + " entries, expected " +
          std::to_string(f.ray_count()));
      continue;
    }
    if (!admissible(f, att.degree)) bad(tag + ": degree is not admissible");
    if (!att.degree.nonnegative()) bad(tag + ": degree has a negative entry");
    if (att.degree.is_zero()) bad(tag + ": degree is zero (a contracted tree is unstable)");
  }
  for (std::size_t i = 0; i < data.attachments.size(); ++i)
    for (std::size_t j = i + 1; j < data.attachments.size(); ++j) {
      const auto& p = data.attachments[i].point;
      const auto& q = data.attachments[j].point;
      if ((p.a != 0 || p.b != 0) && (q.a != 0 || q.b != 0) && same_point(p, q))
        bad("attachments " + std::to_string(i) + " and " + std::to_string(j) +
            " share the point " + to_string(p));
    }
  return rep;
}

CollapseResult collapse(const GenusZeroStableMapData& data) {
  const CollapseReport rep = validate(data);
  if (!rep.ok()) {
    std::string msg = "collapse: invalid stable-map data";
    for (const auto& v : rep.violations) msg += "; " + v;
    throw DomainError(msg);
  }

  std::vector<BinaryForm> sections = data.main.sections();
  Multidegree total = data.main.degree();
  for (const auto& att : data.attachments) {
    const BinaryForm l = linear_form_at(att.point);
    for (std::size_t r = 0; r < sections.size(); ++r)
      if (att.degree[r] > 0) sections[r] = mul(sections[r], pow(l, static_cast<std::size_t>(att.degree[r])));
    total = total + att.degree;
  }
  WeakDeltaCollection out(data.main.fan_ptr(), total, std::move(sections), data.main.trivializations());
  return CollapseResult{std::move(out), std::move(total)};
}

WeakDeltaCollection reparametrize(const WeakDeltaCollection& c, const Mobius& g) {
  std::vector<BinaryForm> sections;
  for (const auto& u : c.sections()) sections.push_back(substitute(u, g));
  return WeakDeltaCollection(c.fan_ptr(), c.degree(), std::move(sections), c.trivializations());
}

GenusZeroStableMapData reparametrize(const GenusZeroStableMapData& data, const Mobius& g) {
  GenusZeroStableMapData out{reparametrize(data.main, g), {}};
  const Mobius adj = g.adjugate();
  for (const auto& att : data.attachments) out.attachments.push_back({adj.apply(att.point), att.degree});
  return out;
}

}  // namespace amt
