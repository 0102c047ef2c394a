#include "cpn/cli/app.hpp"

#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpn/charts.hpp"
#include "cpn/cli/checks.hpp"
#include "cpn/cli/complex_parse.hpp"
#include "cpn/cli/figures.hpp"
#include "cpn/entanglement.hpp"
#include "cpn/orbits.hpp"
#include "cpn/sampling.hpp"

namespace cpn::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Default, Csv, Json };

struct RunConfig {
  std::string format_name;
  std::string out_path;
  std::optional<double> tol;
  Tolerances tolerances;

  // distance / schmidt / project
  std::string state_a;
  std::string state_b;
  std::string chart = "gnomonic";
  int pole = 0;
  // figure
  std::string figure;
  FigureParams figure_params;
  // orbit-volume / curvature
  double sigma = std::numbers::pi / 8;
  // sample / check
  std::size_t count = 1000;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  std::string suite;
  std::string mutation;
};

Format parse_format(const std::string& name) {
  if (name.empty()) return Format::Default;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw UsageError("--format must be csv or json");
}

std::optional<double> env_double(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (*end != '\0' || !(v > 0.0)) throw UsageError(std::string(name) + " must be a positive number");
  return v;
}

Tolerances tolerances_from_env() {
  Tolerances t;
  if (auto v = env_double("CPN_TOL_NORM")) t.norm = *v;
  if (auto v = env_double("CPN_TOL_ZERO")) t.zero = *v;
  if (auto v = env_double("CPN_TOL_EDGE")) t.edge = *v;
  if (auto v = env_double("CPN_TOL_PREDICATE")) t.predicate = *v;
  if (auto v = env_double("CPN_TOL_SIGMA")) t.sigma = *v;
  return t;
}

ProjectiveState parse_state(const std::string& text, const Tolerances& tol) {
  return normalize_and_gauge(parse_amplitudes(text), tol);
}

json amplitudes_json(const ProjectiveState& s) {
  json list = json::array();
  for (int k = 0; k < s.dim(); ++k) list.push_back(format_complex(s[k]));
  return list;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Flat JSON object as a two-line CSV.
std::string as_csv(const json& j) {
  std::string header, row;
  for (const auto& [key, value] : j.items()) {
    if (key == "schema_version") continue;
    header += (header.empty() ? "" : ",") + key;
    row += (row.empty() ? "" : ",") + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return "# schema: cpn-" + j.value("command", std::string("result")) + " v" +
         std::to_string(kSchemaVersion) + "\n" + header + "\n" + row + "\n";
}

std::string scalar_output(json j, Format f) {
  return f == Format::Csv ? as_csv(j) : dump(j);
}

json envelope(const std::string& command) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

std::string cmd_distance(const RunConfig& cfg, Format f) {
  const ProjectiveState a = parse_state(cfg.state_a, cfg.tolerances);
  const ProjectiveState b = parse_state(cfg.state_b, cfg.tolerances);
  json j = envelope("distance");
  j["distance"] = fs_distance(a, b);
  return scalar_output(j, f);
}

std::string cmd_schmidt(const RunConfig& cfg, Format f) {
  const ProjectiveState s = parse_state(cfg.state_a, cfg.tolerances);
  if (s.dim() != 4) throw Error(ErrorCode::DimensionMismatch, "schmidt needs 4 amplitudes");
  const SchmidtData d = schmidt_decompose(s, cfg.tolerances);
  const ClosestSeparable c = closest_separable(s, cfg.tolerances);
  json j = envelope("schmidt");
  j["sigma"] = d.schmidt_angle;
  j["separable"] = is_separable(s, cfg.tolerances.predicate);
  j["max_entangled"] = is_max_entangled(s, cfg.tolerances.predicate);
  j["non_unique"] = d.non_unique;
  j["distance"] = c.distance;
  j["unique"] = c.unique;
  j["bloch_radius"] = partial_trace_A(s).bloch_radius;
  if (f == Format::Csv) {
    j["c0"] = d.coefficients[0];
    j["c1"] = d.coefficients[1];
    j["closest_separable"] = format_amplitudes(c.state.amplitudes());
    return as_csv(j);
  }
  j["coefficients"] = {d.coefficients[0], d.coefficients[1]};
  j["closest_separable"] = amplitudes_json(c.state);
  return dump(j);
}

std::string cmd_project(const RunConfig& cfg, Format f) {
  const ProjectiveState s = parse_state(cfg.state_a, cfg.tolerances);
  if (s.dim() != 3 && s.dim() != 4) throw Error(ErrorCode::DimensionMismatch, "charts cover CP² and CP³");
  const OctantTorusCoords c = to_octant_torus(s, cfg.tolerances);
  ChartPoint p;
  if (cfg.chart == "gnomonic") {
    p = gnomonic_project(c.radii);
  } else if (cfg.chart == "stereographic") {
    p = stereographic_project(c.radii, cfg.pole);
  } else {
    throw UsageError("--chart must be gnomonic or stereographic");
  }
  json phases = json::array();
  for (const auto& nu : c.phases) phases.push_back(nu ? json(*nu) : json(nullptr));
  json j = envelope("project");
  j["chart"] = cfg.chart;
  j["radii"] = c.radii;
  j["phases"] = phases;
  j["coords"] = p.coords;
  if (f == Format::Csv) {
    std::ostringstream os;
    os << "# schema: cpn-project v" << kSchemaVersion << "\nkind,index,value\n";
    for (std::size_t k = 0; k < c.radii.size(); ++k) os << "radius," << k << ',' << j["radii"][k].dump() << '\n';
    for (std::size_t k = 0; k < c.phases.size(); ++k) {
      os << "phase," << k + 1 << ',' << (c.phases[k] ? json(*c.phases[k]).dump() : "") << '\n';
    }
    for (std::size_t k = 0; k < p.coords.size(); ++k) os << cfg.chart << ',' << k + 1 << ',' << j["coords"][k].dump() << '\n';
    return os.str();
  }
  return dump(j);
}

std::string cmd_figure(const RunConfig& cfg, Format f) {
  if (f == Format::Json) throw UsageError("figures are emitted as CSV only");
  if (!is_figure(cfg.figure)) throw UsageError("unknown figure '" + cfg.figure + "'");
  std::ostringstream os;
  emit_figure(cfg.figure, cfg.figure_params, os);
  return os.str();
}

std::string cmd_orbit_volume(const RunConfig& cfg, Format f) {
  json j = envelope("orbit-volume");
  j["sigma"] = cfg.sigma;
  j["volume"] = orbit_volume(cfg.sigma);
  j["pdf"] = schmidt_pdf(cfg.sigma);
  j["cdf"] = schmidt_cdf(cfg.sigma);
  return scalar_output(j, f);
}

std::string cmd_curvature(const RunConfig& cfg, Format f) {
  json j = envelope("curvature");
  j["sigma"] = cfg.sigma;
  j["curvature"] = extrinsic_curvature_trace(cfg.sigma);
  return scalar_output(j, f);
}

std::string cmd_sample(const RunConfig& cfg, Format f) {
  if (cfg.count == 0) throw UsageError("--count must be at least 1");
  const SampleBatch b = sample_batch(cfg.seed, cfg.count, cfg.threads);
  const double ks_sigma = ks_statistic(
      b.sigmas, [](double s) { return schmidt_cdf(std::clamp(s, 0.0, std::numbers::pi / 4)); });
  const double ks_r = ks_statistic(b.bloch_radii, [](double r) { return std::pow(std::clamp(r, 0.0, 1.0), 3); });
  if (f == Format::Json) {
    json j = envelope("sample");
    j["seed"] = cfg.seed;
    j["count"] = cfg.count;
    j["sigmas"] = b.sigmas;
    j["bloch_radii"] = b.bloch_radii;
    j["ks_sigma"] = ks_sigma;
    j["ks_bloch_radius"] = ks_r;
    return dump(j);
  }
  std::ostringstream os;
  os.precision(17);
  os << "# schema: cpn-sample v" << kSchemaVersion << " seed=" << cfg.seed << " count=" << cfg.count << "\n";
  os << "index,sigma,bloch_radius\n";
  for (std::size_t i = 0; i < b.count; ++i) os << i << ',' << b.sigmas[i] << ',' << b.bloch_radii[i] << '\n';
  os << "# ks_sigma=" << ks_sigma << " ks_bloch_radius=" << ks_r << '\n';
  return os.str();
}

std::string cmd_check(const RunConfig& cfg, Format f, std::vector<std::string>& failures) {
  const auto suite = parse_suite(cfg.suite);
  if (!suite) throw UsageError("unknown suite '" + cfg.suite + "'");
  const CheckProviders providers = cfg.mutation.empty() ? CheckProviders{} : mutated_providers(cfg.mutation);
  const auto results = run_checks(*suite, cfg.seed, providers);
  for (const auto& c : results) {
    if (!c.passed) failures.push_back(c.suite + "/" + c.name);
  }
  const bool passed = failures.empty();
  if (f == Format::Json) {
    json j = envelope("check");
    j["suite"] = cfg.suite;
    j["seed"] = cfg.seed;
    j["passed"] = passed;
    json list = json::array();
    for (const auto& c : results) {
      list.push_back({{"suite", c.suite}, {"name", c.name}, {"measured", c.measured},
                      {"tolerance", c.tolerance}, {"relation", c.lower_bound ? ">" : "<="},
                      {"passed", c.passed}});
    }
    j["checks"] = list;
    return dump(j);
  }
  std::ostringstream os;
  os.precision(6);
  os << "# schema: cpn-check v" << kSchemaVersion << " suite=" << cfg.suite << " seed=" << cfg.seed << "\n";
  os << "suite,check,measured,relation,tolerance,status\n";
  for (const auto& c : results) {
    os << c.suite << ',' << c.name << ',' << std::scientific << c.measured << ','
       << (c.lower_bound ? ">" : "<=") << ',' << c.tolerance << ',' << (c.passed ? "PASS" : "FAIL") << '\n';
  }
  return os.str();
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw IoError("cannot open '" + cfg.out_path + "' for writing");
  file << text;
  if (!file) throw IoError("write to '" + cfg.out_path + "' failed");
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::DimensionMismatch ? kExitDimension : kExitUsage;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Geometry of CP^n as flat tori over an octant", "cpn"};
  app.require_subcommand(1, 1);
  app.option_defaults()->always_capture_default();
  app.add_option("--format", cfg.format_name, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
  app.add_option("--tol", cfg.tol, "Tolerance for entanglement predicates and the Schmidt angle")
      ->check(CLI::PositiveNumber);

  auto* distance = app.add_subcommand("distance", "Fubini-Study distance between two states");
  distance->add_option("state_a", cfg.state_a, "Comma-separated amplitudes, e.g. 1,0.5+2i")->required();
  distance->add_option("state_b", cfg.state_b, "Comma-separated amplitudes")->required();

  auto* schmidt = app.add_subcommand("schmidt", "Schmidt decomposition of a two-qubit state");
  schmidt->add_option("state", cfg.state_a, "Four comma-separated amplitudes")->required();

  auto* project = app.add_subcommand("project", "Octant-torus coordinates and chart position");
  project->add_option("state", cfg.state_a, "Three or four comma-separated amplitudes")->required();
  project->add_option("--chart", cfg.chart, "gnomonic or stereographic");
  project->add_option("--pole", cfg.pole, "Stereographic pole corner");

  auto* figure = app.add_subcommand("figure", "Emit figure data as CSV");
  figure->add_option("name", cfg.figure, "Figure name")->required();
  figure->add_option("--sigma", cfg.figure_params.sigma, "Schmidt angle (constant-sigma)");
  figure->add_option("--radius", cfg.figure_params.radius, "Distance from the corner (distance-sphere)");
  figure->add_option("--grid", cfg.figure_params.grid, "Grid resolution");
  figure->add_option("--samples", cfg.figure_params.samples, "Samples per curve");
  figure->add_option("--corner", cfg.figure_params.corner, "Corner index");

  auto* volume = app.add_subcommand("orbit-volume", "Orbit volume and Schmidt-angle density");
  volume->add_option("--sigma", cfg.sigma, "Schmidt angle in [0, pi/4]")->required();

  auto* curvature = app.add_subcommand("curvature", "Mean extrinsic curvature of the orbit");
  curvature->add_option("--sigma", cfg.sigma, "Schmidt angle in (0, pi/4)")->required();

  auto* sample = app.add_subcommand("sample", "Haar-random Schmidt angles");
  sample->add_option("--count", cfg.count, "Number of states")->required();
  sample->add_option("--seed", cfg.seed, "RNG seed");
  sample->add_option("--threads", cfg.threads, "Worker threads (results do not depend on it)");

  auto* check = app.add_subcommand("check", "Run an invariant suite");
  check->add_option("suite", cfg.suite, "metric, entanglement, orbits, symplectic, sampling or all")->required();
  check->add_option("--seed", cfg.seed, "RNG seed");
  check->add_option("--mutate", cfg.mutation)->group("");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    cfg.tolerances = tolerances_from_env();
    if (cfg.tol) {
      cfg.tolerances.predicate = *cfg.tol;
      cfg.tolerances.sigma = *cfg.tol;
    }
    const Format format = parse_format(cfg.format_name);
    const Format scalar = format == Format::Default ? Format::Json : format;
    const Format table = format == Format::Default ? Format::Csv : format;

    std::string text;
    std::vector<std::string> failures;
    if (*distance) text = cmd_distance(cfg, scalar);
    else if (*schmidt) text = cmd_schmidt(cfg, scalar);
    else if (*project) text = cmd_project(cfg, scalar);
    else if (*figure) text = cmd_figure(cfg, table);
    else if (*volume) text = cmd_orbit_volume(cfg, scalar);
    else if (*curvature) text = cmd_curvature(cfg, scalar);
    else if (*sample) text = cmd_sample(cfg, table);
    else if (*check) text = cmd_check(cfg, table, failures);

    write_output(cfg, text, out);
    if (!failures.empty()) {
      for (const auto& name : failures) err << "check failed: " << name << '\n';
      return kExitCheckFailed;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace cpn::cli
