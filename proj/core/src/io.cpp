#include "amt/io.hpp"

#include <cmath>
#include <regex>
#include <sstream>

namespace amt {

namespace {

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

const Json& require(const Json& j, const std::string& pointer, const char* key) {
  if (!j.is_object()) throw JsonError(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(pointer, std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& require_array(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw JsonError(pointer, "expected an array");
  return j;
}

Integer read_integer(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    static const std::regex int_re("[+-]?[0-9]+");
    if (std::regex_match(s, int_re)) return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw JsonError(pointer, "expected an integer");
}

std::int64_t read_int64(const Json& j, const std::string& pointer) {
  const Integer v = read_integer(j, pointer);
  if (!v.fits_slong_p()) throw JsonError(pointer, "integer out of range");
  return v.get_si();
}

std::size_t read_index(const Json& j, const std::string& pointer) {
  const auto v = read_int64(j, pointer);
  if (v < 0) throw JsonError(pointer, "expected a nonnegative index");
  return static_cast<std::size_t>(v);
}

Rational read_rational(const Json& j, const std::string& pointer) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(read_integer(j, pointer));
  if (!j.is_string()) throw JsonError(pointer, "expected a rational string such as \"3/2\"");
  try {
    return parse_rational(j.get_ref<const std::string&>());
  } catch (const ParseError& e) {
    throw JsonError(pointer, e.what());
  }
}

RatVector read_rational_vector(const Json& j, const std::string& pointer) {
  require_array(j, pointer);
  RatVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_rational(j[i], child(pointer, i)));
  return out;
}

Multidegree read_multidegree(const Json& j, const std::string& pointer) {
  require_array(j, pointer);
  Multidegree d;
  for (std::size_t i = 0; i < j.size(); ++i) d.values.push_back(read_int64(j[i], child(pointer, i)));
  return d;
}

Json rational_vector_to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json double_vector_to_json(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(x);
  return out;
}

// Wraps any library error raised while building a value from `pointer`.
template <typename F>
auto at_pointer(const std::string& pointer, F&& build) {
  try {
    return build();
  } catch (const JsonError&) {
    throw;
  } catch (const Error& e) {
    throw JsonError(pointer, e.what());
  }
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json ray_sets_to_json(const std::vector<RaySet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

Json multidegree_to_json(const Multidegree& d) { return Json(d.values); }

std::optional<Fan> builtin_fan(const std::string& name) {
  static const std::regex proj("P([1-9][0-9]?)");
  static const std::regex hirz("F([0-9]{1,3})");
  std::smatch m;
  if (name == "P1xP1") return product_p1_p1();
  if (std::regex_match(name, m, proj)) return projective_space(std::stoul(m[1]));
  if (std::regex_match(name, m, hirz)) return hirzebruch(std::stol(m[1]));
  return std::nullopt;
}

Fan fan_from_json(const Json& j, const std::string& pointer) {
  Fan f;
  if (!j.is_object()) throw JsonError(pointer, "expected a fan object");
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw JsonError(child(pointer, "name"), "expected a string");
    f.name = it->get<std::string>();
  }
  const std::string rays_ptr = child(pointer, "rays");
  const Json& rays = require_array(require(j, pointer, "rays"), rays_ptr);
  if (rays.empty()) throw JsonError(rays_ptr, "a fan needs at least one ray");
  for (std::size_t r = 0; r < rays.size(); ++r) {
    const std::string rp = child(rays_ptr, r);
    require_array(rays[r], rp);
    IntVector v;
    for (std::size_t i = 0; i < rays[r].size(); ++i) v.push_back(read_integer(rays[r][i], child(rp, i)));
    if (r == 0) f.dim = v.size();
    if (v.size() != f.dim)
      throw JsonError(rp, "ray has " + std::to_string(v.size()) + " entries, expected " + std::to_string(f.dim));
    f.rays.push_back(std::move(v));
  }
  const std::string cones_ptr = child(pointer, "max_cones");
  const Json& cones = require_array(require(j, pointer, "max_cones"), cones_ptr);
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const std::string cp = child(cones_ptr, c);
    require_array(cones[c], cp);
    RaySet s;
    for (std::size_t i = 0; i < cones[c].size(); ++i) {
      const std::size_t idx = read_index(cones[c][i], child(cp, i));
      if (idx >= f.rays.size()) throw JsonError(child(cp, i), "ray index " + std::to_string(idx) + " out of range");
      s.push_back(idx);
    }
    f.max_cones.push_back(std::move(s));
  }
  return f;
}

Json fan_to_json(const Fan& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(integer_to_json(x));
    rays.push_back(std::move(row));
  }
  return Json{{"name", f.name}, {"rays", std::move(rays)}, {"max_cones", ray_sets_to_json(f.max_cones)}};
}

WeakDeltaCollection collection_from_json(const Json& j, const FanResolver& resolve, const std::string& pointer) {
  const std::string fan_ptr = child(pointer, "fan");
  const Json& fj = require(j, pointer, "fan");
  std::shared_ptr<const Fan> fan;
  if (fj.is_string()) {
    const auto& name = fj.get_ref<const std::string&>();
    std::optional<Fan> found = resolve ? resolve(name) : builtin_fan(name);
    if (!found) throw JsonError(fan_ptr, "unknown fan \"" + name + "\"");
    fan = std::make_shared<const Fan>(std::move(*found));
  } else {
    fan = std::make_shared<const Fan>(fan_from_json(fj, fan_ptr));
  }
  const FanReport rep = validate_fan(*fan);
  if (!rep.ok()) throw JsonError(fan_ptr, "invalid fan: " + rep.violations.front());

  const std::string deg_ptr = child(pointer, "degrees");
  const Multidegree degree = read_multidegree(require(j, pointer, "degrees"), deg_ptr);
  if (degree.size() != fan->ray_count())
    throw JsonError(deg_ptr, std::to_string(degree.size()) + " degrees for " +
                                 std::to_string(fan->ray_count()) + " rays");
  for (std::size_t r = 0; r < degree.size(); ++r)
    if (degree[r] < 0) throw JsonError(child(deg_ptr, r), "degree must be nonnegative");

  const std::string sec_ptr = child(pointer, "sections");
  const Json& secs = require_array(require(j, pointer, "sections"), sec_ptr);
  if (secs.size() != fan->ray_count())
    throw JsonError(sec_ptr, std::to_string(secs.size()) + " sections for " +
                                 std::to_string(fan->ray_count()) + " rays");
  std::vector<BinaryForm> sections;
  for (std::size_t r = 0; r < secs.size(); ++r) {
    const std::string sp = child(sec_ptr, r);
    if (!secs[r].is_string()) throw JsonError(sp, "expected a form string");
    try {
      sections.push_back(parse_form(secs[r].get_ref<const std::string&>(), static_cast<std::size_t>(degree[r])));
    } catch (const ParseError& e) {
      throw JsonError(sp, e.what());
    }
  }

  RatVector triv;
  if (auto it = j.find("trivializations"); it != j.end())
    triv = read_rational_vector(*it, child(pointer, "trivializations"));

  return at_pointer(pointer, [&] {
    return WeakDeltaCollection(fan, degree, std::move(sections), std::move(triv));
  });
}

Json collection_to_json(const WeakDeltaCollection& c) {
  Json fan;
  if (auto b = builtin_fan(c.fan().name); b && *b == c.fan())
    fan = c.fan().name;
  else
    fan = fan_to_json(c.fan());
  Json sections = Json::array();
  for (const auto& u : c.sections()) sections.push_back(to_string(u));
  return Json{{"fan", std::move(fan)},
              {"degrees", multidegree_to_json(c.degree())},
              {"sections", std::move(sections)},
              {"trivializations", rational_vector_to_json(c.trivializations())}};
}

GenusZeroStableMapData stable_map_from_json(const Json& j, const FanResolver& resolve, const std::string& pointer) {
  WeakDeltaCollection main = collection_from_json(require(j, pointer, "main"), resolve, child(pointer, "main"));
  GenusZeroStableMapData data{std::move(main), {}};
  if (auto it = j.find("attachments"); it != j.end()) {
    const std::string ap = child(pointer, "attachments");
    require_array(*it, ap);
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string ip = child(ap, i);
      const Json& aj = (*it)[i];
      const std::string pp = child(ip, "point");
      const Json& pj = require_array(require(aj, ip, "point"), pp);
      if (pj.size() != 2) throw JsonError(pp, "a point of P^1 has two coordinates");
      ProjectivePoint p{read_rational(pj[0], child(pp, 0)), read_rational(pj[1], child(pp, 1))};
      if (p.a == 0 && p.b == 0) throw JsonError(pp, "[0:0] is not a point of P^1");
      const std::string dp = child(ip, "degree");
      Multidegree d = read_multidegree(require(aj, ip, "degree"), dp);
      if (d.size() != data.main.fan().ray_count())
        throw JsonError(dp, std::to_string(d.size()) + " degrees for " +
                                std::to_string(data.main.fan().ray_count()) + " rays");
      data.attachments.push_back({std::move(p), std::move(d)});
    }
  }
  return data;
}

Json stable_map_to_json(const GenusZeroStableMapData& data) {
  Json atts = Json::array();
  for (const auto& a : data.attachments)
    atts.push_back(Json{{"point", Json::array({to_string(a.point.a), to_string(a.point.b)})},
                        {"degree", multidegree_to_json(a.degree)}});
  return Json{{"main", collection_to_json(data.main)}, {"attachments", std::move(atts)}};
}

GLSMProblem glsm_from_json(const Json& j, const std::string& pointer) {
  GLSMProblem p;
  const std::string cp = child(pointer, "charges");
  const Json& cj = require_array(require(j, pointer, "charges"), cp);
  std::vector<IntVector> rows;
  for (std::size_t a = 0; a < cj.size(); ++a) {
    const std::string rp = child(cp, a);
    require_array(cj[a], rp);
    IntVector row;
    for (std::size_t i = 0; i < cj[a].size(); ++i) row.push_back(read_integer(cj[a][i], child(rp, i)));
    if (!rows.empty() && row.size() != rows.front().size())
      throw JsonError(rp, "charge rows differ in length");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw JsonError(cp, "need at least one charge row");
  p.charges = IntMatrix::from_rows(rows, rows.front().size());
  p.fi = read_rational_vector(require(j, pointer, "fi"), child(pointer, "fi"));
  if (p.fi.size() != p.charges.rows())
    throw JsonError(child(pointer, "fi"), std::to_string(p.fi.size()) + " FI parameters for " +
                                              std::to_string(p.charges.rows()) + " charge rows");
  if (auto it = j.find("amplitudes"); it != j.end()) {
    const std::string ap = child(pointer, "amplitudes");
    p.amplitudes = read_rational_vector(*it, ap);
    if (p.amplitudes.size() != p.charges.cols())
      throw JsonError(ap, std::to_string(p.amplitudes.size()) + " amplitudes for " +
                              std::to_string(p.charges.cols()) + " fields");
    for (std::size_t i = 0; i < p.amplitudes.size(); ++i)
      if (p.amplitudes[i] < 0) throw JsonError(child(ap, i), "amplitude must be nonnegative");
  } else {
    p.amplitudes.assign(p.charges.cols(), Rational(0));
  }
  return p;
}

Json glsm_to_json(const GLSMProblem& p) {
  return Json{{"charges", int_matrix_to_json(p.charges)},
              {"fi", rational_vector_to_json(p.fi)},
              {"amplitudes", rational_vector_to_json(p.amplitudes)}};
}

Json fan_check_to_json(const Fan& f, std::uint64_t seed) {
  const FanReport rep = validate_fan(f);
  Json out{{"name", f.name}, {"valid", rep.ok()}, {"violations", rep.violations},
           {"smooth", nullptr}, {"complete", nullptr}, {"convexity_proxy", nullptr}};
  if (!rep.ok()) return out;
  const bool smooth = is_smooth(f);
  const CompletenessReport comp = completeness_report(f, seed);
  out["smooth"] = smooth;
  out["complete"] = comp.complete();
  out["completeness"] = Json{{"full_dimensional", comp.full_dimensional},
                             {"facets_shared_twice", comp.facets_shared_twice},
                             {"adjacency_connected", comp.adjacency_connected},
                             {"directions_sampled", comp.directions_sampled},
                             {"directions_uncovered", comp.directions_uncovered},
                             {"seed", seed}};
  if (smooth && comp.complete()) {
    const NefReport nef = prime_divisors_nef(f);
    Json failing = Json::array();
    Json mins = Json::array();
    for (std::size_t r = 0; r < nef.divisor_nef.size(); ++r) {
      if (!nef.divisor_nef[r]) failing.push_back(r);
      mins.push_back(integer_to_json(nef.min_wall_degree[r]));
    }
    out["convexity_proxy"] = Json{{"pass", nef.all_nef},
                                  {"label", "convexity proxy: every toric prime divisor is nef"},
                                  {"divisors_not_nef", std::move(failing)},
                                  {"min_wall_degree", std::move(mins)}};
  }
  return out;
}

Json cox_to_json(const CoxPresentation& pres) {
  return Json{{"pic_rank", pres.pic_rank},
              {"charge_matrix", int_matrix_to_json(pres.charge_matrix)},
              {"irrelevant_generators", ray_sets_to_json(pres.irrelevant_generators)},
              {"primitive_collections", ray_sets_to_json(pres.primitive_collections)}};
}

Json moduli_to_json(const ModuliSummary& s) {
  return Json{{"degree", multidegree_to_json(s.degree)},
              {"y_dim", s.y_dim},
              {"g_dim", s.g_dim},
              {"w_dim", s.w_dim},
              {"w_dim_note", kOrbitDimensionCaveat}};
}

Json delta_check_to_json(const WeakDeltaCollection& c) {
  const bool nonvanishing = is_nonvanishing(c);
  Json out{{"nonvanishing", nonvanishing}, {"in_F_d", !nonvanishing},
           {"nondegenerate", false}, {"base_divisor", nullptr}, {"base_points", Json::array()}};
  if (nonvanishing) {
    const BinaryForm base = base_divisor(c);
    out["nondegenerate"] = base.degree() == 0;
    out["base_divisor"] = to_string(base);
    Json pts = Json::array();
    if (base.degree() > 0)
      for (const auto& p : rational_roots(base)) pts.push_back(to_string(p));
    out["base_points"] = std::move(pts);
  }
  return out;
}

Json collapse_to_json(const CollapseResult& r) {
  Json out = collection_to_json(r.collection);
  out["total_degree"] = multidegree_to_json(r.total_degree);
  out["base_divisor"] = to_string(base_divisor(r.collection));
  return out;
}

Json solve_report_to_json(const SolveReport& r, const GLSMProblem& p) {
  Json out{{"status", to_string(r.status)},
           {"t", double_vector_to_json(r.t)},
           {"gradient_norm", r.gradient_norm},
           {"iterations", r.iterations}};
  if (r.status == SolveReport::Status::Converged) {
    std::vector<double> s(p.amplitudes.size()), fi(p.fi.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = p.amplitudes[i].get_d();
    for (std::size_t a = 0; a < fi.size(); ++a) fi[a] = p.fi[a].get_d();
    const auto g = kempf_ness_gradient(p.charges, s, fi, r.t);
    double res = 0.0;
    for (double x : g) res = std::max(res, std::abs(x) / 2.0);
    out["moment_map_residual"] = res;
  }
  if (r.certificate) out["certificate"] = rational_vector_to_json(*r.certificate);
  return out;
}

Json phase_to_json(const GLSMProblem& p, const std::vector<RaySet>& unstable) {
  return Json{{"fi", rational_vector_to_json(p.fi)}, {"unstable_supports", ray_sets_to_json(unstable)}};
}

Multidegree parse_multidegree_list(const std::string& text) {
  Multidegree d;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      d.values.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad degree entry '" + item + "'");
    }
  }
  if (d.values.empty()) throw ParseError("empty degree list");
  return d;
}

}  // namespace amt
