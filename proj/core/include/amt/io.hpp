#pragma once

// JSON schemas for every file the library reads or writes. Readers report the
// JSON pointer of the offending value; objects serialize with sorted keys.

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "amt/collapse.hpp"
#include "amt/cox.hpp"
#include "amt/delta.hpp"
#include "amt/error.hpp"
#include "amt/fan.hpp"
#include "amt/glsm.hpp"
#include "amt/moduli.hpp"

namespace amt {

using Json = nlohmann::json;

// Schema violation at a JSON pointer such as "/sections/1".
class JsonError : public Error {
 public:
  JsonError(const std::string& pointer, const std::string& what)
      : Error("at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

// "P<n>", "P1xP1" and "F<a>"; nullopt for anything else.
std::optional<Fan> builtin_fan(const std::string& name);

// Maps a fan name found in a collection file to a fan. The default resolver
// knows only the built-in names.
using FanResolver = std::function<std::optional<Fan>(const std::string&)>;

// {"name": str, "rays": [[int,...],...], "max_cones": [[int,...],...]}
Fan fan_from_json(const Json& j, const std::string& pointer = "");
Json fan_to_json(const Fan& f);

// {"fan": <name or inline fan>, "degrees": [int], "sections": [form],
//  "trivializations": [rational] (optional)}
WeakDeltaCollection collection_from_json(const Json& j, const FanResolver& resolve = {},
                                         const std::string& pointer = "");
Json collection_to_json(const WeakDeltaCollection& c);

// {"main": <collection>, "attachments": [{"point": [q, q], "degree": [int]}]}
GenusZeroStableMapData stable_map_from_json(const Json& j, const FanResolver& resolve = {},
                                            const std::string& pointer = "");
Json stable_map_to_json(const GenusZeroStableMapData& data);

// {"charges": [[int]], "fi": [rational], "amplitudes": [rational]}
// "amplitudes" may be omitted when only the phase structure is needed.
GLSMProblem glsm_from_json(const Json& j, const std::string& pointer = "");
Json glsm_to_json(const GLSMProblem& p);

Json fan_check_to_json(const Fan& f, std::uint64_t seed = 20021216);
Json cox_to_json(const CoxPresentation& pres);
Json moduli_to_json(const ModuliSummary& s);
Json delta_check_to_json(const WeakDeltaCollection& c);
Json collapse_to_json(const CollapseResult& r);
Json solve_report_to_json(const SolveReport& r, const GLSMProblem& p);
Json phase_to_json(const GLSMProblem& p, const std::vector<RaySet>& unstable);

Json ray_sets_to_json(const std::vector<RaySet>& sets);
Json int_matrix_to_json(const IntMatrix& m);
Json integer_to_json(const Integer& v);
Json multidegree_to_json(const Multidegree& d);

Multidegree parse_multidegree_list(const std::string& text);

}  // namespace amt
