#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "amt/error.hpp"
#include "amt/io.hpp"

namespace amt::cli {
namespace {

namespace fs = std::filesystem;

// Input failure already carrying the file name.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 20021216;
  std::int64_t bound = 3;
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

// Runs fn, prefixing any library error with the file name.
template <typename F>
auto with_file(const std::string& path, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const JsonError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const Error& e) {
    throw InputError(path + ": at /: " + e.what());
  }
}

// A fan argument is a JSON file, or a built-in name when no such file exists.
Fan load_fan(const std::string& arg) {
  if (!fs::exists(arg))
    if (auto b = builtin_fan(arg)) return *b;
  const Json j = load_json(arg);
  return with_file(arg, [&] { return fan_from_json(j); });
}

// Fan names in collection files: built-ins, then fan files next to the input.
FanResolver resolver_for(const std::string& path) {
  const fs::path dir = fs::path(path).parent_path();
  return [dir](const std::string& name) -> std::optional<Fan> {
    if (auto b = builtin_fan(name)) return b;
    const fs::path candidate = dir / name;
    if (!fs::is_regular_file(candidate)) return std::nullopt;
    const Json j = load_json(candidate.string());
    return with_file(candidate.string(), [&] { return fan_from_json(j); });
  };
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      flatten(*it, key, rows);
    else
      rows.emplace_back(key, scalar_text(*it));
  }
}

// Two-column key/value table, keys in sorted order.
std::string text_table(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
  return os.str();
}

std::string fan_headline(const Json& rep) {
  std::string line = rep["name"].get<std::string>() + ": ";
  if (!rep["valid"].get<bool>()) return line + "invalid";
  line += rep["smooth"].get<bool>() ? "valid, smooth" : "valid, not smooth";
  line += rep["complete"].get<bool>() ? ", complete" : ", not complete";
  if (rep["convexity_proxy"].is_object())
    line += rep["convexity_proxy"]["pass"].get<bool>() ? ", nef-proxy: pass" : ", nef-proxy: fail";
  return line;
}

std::string render(const Json& report, const Options& opt, const std::string& headline = {}) {
  if (opt.format == "json") return report.dump(2) + "\n";
  std::string text = headline.empty() ? "" : headline + "\n";
  return text + text_table(report);
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.output, std::ios::binary);
  if (!f) throw InputError(opt.output + ": cannot open for writing");
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus-0 A-twisted moduli toolkit: toric fans, Delta-collections and GLSM vacua", "amt"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", opt.output, "Write the report to this file instead of stdout");
  app.add_option("--seed", opt.seed, "Seed for randomized checks and sampling");
  app.add_option("--bound", opt.bound, "Coefficient bound for sampling")->check(CLI::NonNegativeNumber);

  std::string input;
  auto* fan_check = app.add_subcommand("fan-check", "Validate a fan: validity, smoothness, completeness, nef proxy");
  fan_check->add_option("fan", input, "Fan JSON file or built-in name (P<n>, P1xP1, F<a>)")->required();

  auto* cox = app.add_subcommand("cox", "Cox quotient presentation of a smooth complete fan");
  cox->add_option("fan", input, "Fan JSON file or built-in name")->required();

  std::string degrees;
  std::size_t samples = 0;
  auto* moduli = app.add_subcommand("moduli-dim", "Dimensions of Y_d, G and W_d");
  moduli->add_option("fan", input, "Fan JSON file or built-in name")->required();
  moduli->add_option("--degrees", degrees, "Comma-separated multidegree, one entry per ray")->required();
  moduli->add_option("--samples", samples, "Also draw this many seeded points of Y_d - F_d");

  auto* delta = app.add_subcommand("delta-check", "Nonvanishing, nondegeneracy and base divisor of a collection");
  delta->add_option("collection", input, "Collection JSON file")->required();

  auto* collapse_cmd = app.add_subcommand("collapse", "Collapse genus-0 stable map data to a collection");
  collapse_cmd->add_option("stable_map", input, "Stable map JSON file")->required();

  SolverOptions solver;
  auto* solve = app.add_subcommand("glsm-solve", "Solve the D-term equations by Kempf-Ness minimization");
  solve->add_option("problem", input, "GLSM JSON file")->required();
  solve->add_option("--tol", solver.tol, "Gradient tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--max-iter", solver.max_iter, "Newton iteration limit");

  auto* phase = app.add_subcommand("glsm-phase", "Minimal unstable coordinate zero sets for the FI parameters");
  phase->add_option("problem", input, "GLSM JSON file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n"
        << "Run with --help for more information.\n";
    return kExitUsage;
  }

  try {
    int code = kExitOk;
    std::string text;
    if (fan_check->parsed()) {
      const Fan f = load_fan(input);
      const Json rep = fan_check_to_json(f, opt.seed);
      text = render(rep, opt, fan_headline(rep));
      if (!rep["valid"].get<bool>()) code = kExitInput;
    } else if (cox->parsed()) {
      const Fan f = load_fan(input);
      text = render(with_file(input, [&] { return cox_to_json(cox_presentation(f)); }), opt);
    } else if (moduli->parsed()) {
      const Fan f = load_fan(input);
      Multidegree d;
      try {
        d = parse_multidegree_list(degrees);
      } catch (const ParseError& e) {
        throw InputError(std::string("--degrees: ") + e.what());
      }
      Json rep = with_file(input, [&] { return moduli_to_json(summarize(f, d)); });
      if (samples > 0) {
        Rng rng(opt.seed);
        const auto fan = std::make_shared<const Fan>(f);
        std::size_t nondegenerate = 0;
        Json drawn = Json::array();
        for (std::size_t i = 0; i < samples; ++i) {
          const auto c = with_file(input, [&] { return sample(fan, d, rng, opt.bound); });
          nondegenerate += is_nondegenerate(c) ? 1 : 0;
          drawn.push_back(collection_to_json(c)["sections"]);
        }
        rep["samples"] = Json{{"seed", opt.seed}, {"bound", opt.bound}, {"count", samples},
                              {"nondegenerate", nondegenerate}, {"sections", std::move(drawn)}};
      }
      text = render(rep, opt);
    } else if (delta->parsed()) {
      const Json j = load_json(input);
      const auto c = with_file(input, [&] { return collection_from_json(j, resolver_for(input)); });
      text = render(delta_check_to_json(c), opt);
    } else if (collapse_cmd->parsed()) {
      const Json j = load_json(input);
      const auto data = with_file(input, [&] { return stable_map_from_json(j, resolver_for(input)); });
      text = render(with_file(input, [&] { return collapse_to_json(collapse(data)); }), opt);
    } else if (solve->parsed()) {
      const Json j = load_json(input);
      const auto p = with_file(input, [&] { return glsm_from_json(j); });
      text = render(with_file(input, [&] { return solve_report_to_json(kempf_ness_solve(p, solver), p); }), opt);
    } else if (phase->parsed()) {
      const Json j = load_json(input);
      const auto p = with_file(input, [&] { return glsm_from_json(j); });
      text = render(with_file(input, [&] { return phase_to_json(p, unstable_supports(p.charges, p.fi)); }), opt);
    }
    emit(text, opt, out);
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << input << ": " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace amt::cli
