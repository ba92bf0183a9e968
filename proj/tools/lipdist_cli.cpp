#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lipdist/corpus.hpp"
#include "lipdist/distance.hpp"
#include "lipdist/error.hpp"
#include "lipdist/function_spec.hpp"
#include "lipdist/poisson.hpp"
#include "lipdist/report.hpp"
#include "lipdist/validation.hpp"

using namespace lipdist;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCriteriaFailed = 3;

// Flags shared by every command; each maps onto a configuration key so the
// config file and the command line go through one parser.
struct SharedFlags {
  std::optional<std::string> config_file;
  std::map<std::string, std::optional<std::string>> values;
  std::string spec;

  void attach(CLI::App& cmd, bool wants_spec) {
    cmd.add_option("--config", config_file, "key = value configuration file (flags override it)");
    static const std::pair<const char*, const char*> kKeys[] = {
        {"n", "dimension, 1 or 2"},
        {"jgrid", "grid depth J_grid (2^J_grid samples per axis)"},
        {"s", "smoothness exponent in (0, 1]"},
        {"wavelet-p", "Daubechies vanishing moments, 2..10"},
        {"theta", "divergence slope threshold"},
        {"jmin", "shallowest level of the Carleson range"},
        {"jmax", "deepest level of the Carleson range"},
        {"directions", "difference directions for n = 2"},
        {"probes", "x-probes per cell axis"},
        {"refine", "extra probe scales per octave"},
        {"seed", "random seed"},
        {"out", "output directory"},
        {"band", "ratio band for method comparisons"},
        {"eta", "coverage fraction for inclusion probes"},
    };
    for (const auto& [key, help] : kKeys) cmd.add_option(std::string("--") + key, values[key], help);
    if (wants_spec) cmd.add_option("--spec", spec, "function spec, e.g. \"trig k=1 a=1\"")->required();
  }

  RunConfig resolve() const {
    RunConfig config = config_file ? load_config_file(*config_file) : RunConfig{};
    for (const auto& [key, value] : values)
      if (value) apply_config_value(config, key, *value);
    config.validate();
    return config;
  }
};

GridFunction load_function(const std::string& spec, const RunConfig& config) {
  GridFunction f = synthesize(parse_function_spec(spec), config.n, config.jgrid);
  f.set_label(spec);
  return f;
}

nlohmann::json spec_inputs(const std::string& spec, nlohmann::json extra = nlohmann::json::object()) {
  extra["spec"] = spec;
  return extra;
}

std::string csv_number(double v) {
  if (!std::isfinite(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const RunConfig& config, const std::string& stem, const nlohmann::json& report, const std::string& csv) {
  const fs::path dir(config.out);
  write_file_atomic(dir / (stem + ".json"), dump_json(report));
  if (!csv.empty()) write_file_atomic(dir / (stem + ".csv"), csv);
  std::cout << (dir / (stem + ".json")).string() << "\n";
}

// --- seminorms ---------------------------------------------------------------

int run_seminorms(const SharedFlags& flags) {
  const RunConfig config = flags.resolve();
  const GridFunction f = load_function(flags.spec, config);
  const MethodSettings ms = config.method_settings();
  const WaveletCoefficients c = analyze(f, filter_bank(config.wavelet_p));
  const double s = config.s;

  const double sup = sup_norm(f);
  const double direct = holder_seminorm(f, s, ms.probes) + sup;
  std::vector<std::pair<std::string, double>> norms = {
      {"direct_holder", direct},
      {"wavelet_lip", lip_wavelet_norm(c, s)},
      {"wavelet_jbmo", jbmo_wavelet_norm(c, s)},
      {"direct_jbmo", jbmo_direct_norm(f, s, config.jgrid)},
      {"poisson", holder_poisson_norm(f, s, config.jgrid - 2, ms.probes)},
  };
  if (s == 1.0) norms.insert(norms.begin() + 1, {"zygmund", direct});

  nlohmann::json values = nlohmann::json::object();
  values["sup"] = sup;
  for (const auto& [name, v] : norms) values[name] = v;
  nlohmann::json ratios = nlohmann::json::array();
  std::string csv = "kind,name,value\nnorm,sup," + csv_number(sup) + "\n";
  for (const auto& [name, v] : norms) csv += "norm," + name + "," + csv_number(v) + "\n";
  for (std::size_t i = 0; i < norms.size(); ++i)
    for (std::size_t j = i + 1; j < norms.size(); ++j) {
      const auto& [a, va] = norms[i];
      const auto& [b, vb] = norms[j];
      const std::optional<double> r = vb != 0.0 ? std::optional<double>(va / vb)
                                      : va == 0.0 ? std::optional<double>(1.0)
                                                  : std::nullopt;
      ratios.push_back({{"numerator", a}, {"denominator", b}, {"value", r ? nlohmann::json(*r) : nlohmann::json()}});
      csv += "ratio," + a + "/" + b + "," + (r ? csv_number(*r) : "") + "\n";
    }
  const nlohmann::json body = {{"s", s},
                               {"wavelet_bank", {{"family", "daubechies"}, {"vanishing_moments", config.wavelet_p}}},
                               {"norms", values},
                               {"ratios", ratios}};
  emit(config, "seminorms", make_report("seminorms", config, spec_inputs(flags.spec), body), csv);
  return kExitOk;
}

// --- sets --------------------------------------------------------------------

int run_sets(const SharedFlags& flags, double epsilon, const std::string& method_text) {
  const RunConfig config = flags.resolve();
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw ValidationError("eps must be a finite value >= 0");
  const Method method = parse_method(method_text);
  const GridFunction f = load_function(flags.spec, config);
  const LevelRange range = config.resolved_range();
  if (range.hi > max_resolvable_level(method, config.jgrid))
    throw ValidationError("jmax exceeds the deepest level the grid resolves for " + method_text);
  const MethodField mf = method_field(f, config.s, method, range.hi, config.method_settings());
  const HalfSpaceSet set = mf.field.threshold(epsilon);
  const CarlesonReport carleson = carleson_sup(set, range, config.theta);

  const nlohmann::json body = {{"method", method_name(method)},
                               {"s", config.s},
                               {"epsilon", epsilon},
                               {"epsilon_hi", mf.epsilon_hi},
                               {"tail_slope", field_tail_slope(mf.field, range)},
                               {"set", to_json(set)},
                               {"carleson", to_json(carleson)}};
  std::ostringstream set_csv, field_csv;
  write_csv(set_csv, set);
  write_csv(field_csv, mf.field);
  emit(config, "sets", make_report("sets", config, spec_inputs(flags.spec, {{"epsilon", epsilon}, {"method", method_text}}), body),
       set_csv.str());
  write_file_atomic(fs::path(config.out) / "sets_field.csv", field_csv.str());
  return kExitOk;
}

// --- distance ----------------------------------------------------------------

std::string trace_csv(const std::array<DistanceEstimate, 3>& estimates) {
  std::string csv = "method,epsilon,slope,diverging\n";
  for (const auto& e : estimates)
    for (const auto& t : e.trace)
      csv += std::string(method_name(e.method)) + "," + csv_number(t.epsilon) + "," + csv_number(t.report.slope) +
             "," + (t.diverging ? "1" : "0") + "\n";
  return csv;
}

int run_distance(const SharedFlags& flags) {
  const RunConfig config = flags.resolve();
  const GridFunction f = load_function(flags.spec, config);
  const LevelRange range = config.resolved_range();
  const MethodComparison cmp = compare_methods(f, config.s, range, config.theta, config.method_settings(), config.band);
  emit(config, "distance", make_report("distance", config, spec_inputs(flags.spec), to_json(cmp)),
       trace_csv(cmp.estimates));
  return kExitOk;
}

// --- inclusion ---------------------------------------------------------------

int run_inclusion(const SharedFlags& flags, std::optional<double> epsilon, const std::string& source_text,
                  const std::string& target_text, const std::vector<double>& c_grid, const std::vector<double>& r_grid) {
  const RunConfig config = flags.resolve();
  const Method source = parse_method(source_text), target = parse_method(target_text);
  const GridFunction f = load_function(flags.spec, config);
  const LevelRange range = config.resolved_range();
  const MethodSettings ms = config.method_settings();
  if (!epsilon) epsilon = 0.5 * epsilon_star(f, config.s, source, range, config.theta, ms).epsilon_star;
  const InclusionReport rep =
      inclusion_probe(f, config.s, *epsilon, source, target, c_grid, r_grid, range.hi, config.eta, ms);
  std::string csv = "c,R,fraction\n";
  for (std::size_t i = 0; i < rep.c_grid.size(); ++i)
    for (std::size_t j = 0; j < rep.r_grid.size(); ++j)
      csv += csv_number(rep.c_grid[i]) + "," + csv_number(rep.r_grid[j]) + "," + csv_number(rep.fraction[i][j]) + "\n";
  const nlohmann::json inputs = spec_inputs(
      flags.spec, {{"epsilon", *epsilon}, {"source", source_text}, {"target", target_text}, {"c", c_grid}, {"R", r_grid}});
  emit(config, "inclusion", make_report("inclusion", config, inputs, to_json(rep)), csv);
  return kExitOk;
}

// --- validate ----------------------------------------------------------------

int run_validate(const SharedFlags& flags, const std::vector<int>& which) {
  const RunConfig config = flags.resolve();
  const ValidationSummary summary = run_validation(
      config, which.empty() ? all_criteria() : which,
      [](const CriterionResult& r) { std::cout << summary_line(r) << std::endl; });
  for (const auto& w : summary.warnings) std::cerr << "warning: " << w << "\n";
  std::string csv = "id,passed,seconds,title\n";
  for (const auto& r : summary.criteria)
    csv += std::to_string(r.id) + "," + (r.passed ? "1" : "0") + "," + csv_number(r.seconds) + ",\"" + r.title + "\"\n";
  nlohmann::json inputs = {{"criteria", which.empty() ? all_criteria() : which}};
  emit(config, "validate", make_report("validate", config, inputs, to_json(summary)), csv);
  return summary.all_passed() ? kExitOk : kExitCriteriaFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distances from Lipschitz functions to Jbmo via three half-space discretizations"};
  app.require_subcommand(1);

  SharedFlags seminorm_flags, sets_flags, distance_flags, inclusion_flags, validate_flags;
  double sets_eps = 0.0;
  std::string sets_method = "wavelet";
  std::optional<double> inclusion_eps;
  std::string inclusion_source = "wavelet", inclusion_target = "secdiff";
  std::vector<double> c_grid{1.0, 0.5, 0.25, 0.125}, r_grid{0.5, 1.0, 2.0, 4.0};
  std::vector<int> criteria;

  auto* seminorms = app.add_subcommand("seminorms", "all norm values and their pairwise ratios");
  seminorm_flags.attach(*seminorms, true);

  auto* sets = app.add_subcommand("sets", "threshold set and its Carleson report");
  sets_flags.attach(*sets, true);
  sets->add_option("--eps", sets_eps, "threshold")->required();
  sets->add_option("--method", sets_method, "secdiff, wavelet or poisson");

  auto* distance = app.add_subcommand("distance", "epsilon_star under all three methods");
  distance_flags.attach(*distance, true);

  auto* inclusion = app.add_subcommand("inclusion", "coverage of one set by a dilated other");
  inclusion_flags.attach(*inclusion, true);
  inclusion->add_option("--eps", inclusion_eps, "threshold (default: half the source method's epsilon_star)");
  inclusion->add_option("--source", inclusion_source, "method of the covered set");
  inclusion->add_option("--target", inclusion_target, "method of the covering set");
  inclusion->add_option("--c-grid", c_grid, "threshold factors in (0, 1]")->delimiter(',');
  inclusion->add_option("--r-grid", r_grid, "hyperbolic radii in [0, 5]")->delimiter(',');

  auto* validate = app.add_subcommand("validate", "acceptance suite");
  validate_flags.attach(*validate, false);
  validate->add_option("--criteria", criteria, "criterion ids (default: all)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*seminorms) return run_seminorms(seminorm_flags);
    if (*sets) return run_sets(sets_flags, sets_eps, sets_method);
    if (*distance) return run_distance(distance_flags);
    if (*inclusion)
      return run_inclusion(inclusion_flags, inclusion_eps, inclusion_source, inclusion_target, c_grid, r_grid);
    if (*validate) return run_validate(validate_flags, criteria);
  } catch (const SpecSyntaxError& e) {
    std::cerr << "error: " << e.what() << " (at offset " << e.position() << ")\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
