#include "rydberg/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "rydberg/errors.hpp"

#ifndef RYDBERG_VERSION
#define RYDBERG_VERSION "unknown"
#endif

namespace rydberg::cli {

namespace {

constexpr double kFigureEccentricity = 0.8;

bool to_stdout(const std::string& path) { return path.empty() || path == "-"; }

void validate(const Scenario& s) {
  s.orbit.validate();
  s.quad.validate();
  if (s.name == ScenarioName::spectrum) return;
  const GridSpec& g = s.grid;
  if (g.points < 1) throw std::domain_error("grid needs at least one point");
  if (!std::isfinite(g.tau_min_scaled) || !std::isfinite(g.tau_max_scaled)) {
    throw std::domain_error("grid bounds must be finite");
  }
  if (g.points > 1 && !(g.tau_max_scaled > g.tau_min_scaled)) throw std::domain_error("tau-max must exceed tau-min");
}

RunMetadata metadata_for(const Scenario& s) {
  RunMetadata meta;
  meta.scenario = scenario_name(s.name);
  meta.kind = s.name == ScenarioName::spectrum ? "spectrum" : kind_name(s.kind);
  meta.orbit = s.orbit;
  meta.quad = s.quad;
  meta.tau_min = s.grid.tau_min_scaled;
  meta.tau_max = s.grid.tau_max_scaled;
  meta.points = s.grid.points;
  meta.version = RYDBERG_VERSION;
  return meta;
}

// body is fully rendered before any file is opened
int emit(const Scenario& s, const RunMetadata& meta, const std::string& body, std::ostream& out, std::ostream& diag) {
  if (to_stdout(s.output_path)) {
    out << body;
    out.flush();
    if (!out) {
      diag << "error: failed writing to standard output\n";
      return kExitIo;
    }
    if (s.format == OutputFormat::csv) diag << metadata_json(meta).dump() << '\n';
    return kExitOk;
  }

  std::ofstream file(s.output_path, std::ios::binary | std::ios::trunc);
  file << body;
  file.close();
  if (!file) {
    diag << "error: cannot write " << s.output_path << '\n';
    return kExitIo;
  }
  if (s.format == OutputFormat::csv) {
    const std::string sidecar = s.output_path + ".meta.json";
    std::ofstream meta_file(sidecar, std::ios::binary | std::ios::trunc);
    meta_file << metadata_json(meta).dump(2) << '\n';
    meta_file.close();
    if (!meta_file) {
      diag << "error: cannot write " << sidecar << '\n';
      return kExitIo;
    }
  }
  return kExitOk;
}

}  // namespace

const char* scenario_name(ScenarioName name) {
  switch (name) {
    case ScenarioName::fig1: return "fig1";
    case ScenarioName::fig2a: return "fig2a";
    case ScenarioName::fig2b: return "fig2b";
    case ScenarioName::spectrum: return "spectrum";
    case ScenarioName::custom: return "custom";
  }
  return "custom";
}

Scenario named_scenario(ScenarioName name) {
  Scenario s;
  s.name = name;
  s.orbit = OrbitParams{1.0, 1.0, kFigureEccentricity};
  constexpr double pi = std::numbers::pi;
  switch (name) {
    case ScenarioName::fig1:
      s.kind = CorrelationKind::first_order;
      s.grid = {0.0, 4.0 * pi, 1601};
      break;
    case ScenarioName::fig2a:
      s.kind = CorrelationKind::second_order;
      s.grid = {0.0, 2.0 * pi, 1601};
      break;
    case ScenarioName::fig2b:
      s.kind = CorrelationKind::second_order;
      s.grid = {0.0, 0.6, 601};
      break;
    case ScenarioName::spectrum:
      break;
    case ScenarioName::custom:
      s.orbit.epsilon = 0.0;
      break;
  }
  return s;
}

int run(const Scenario& scenario, std::ostream& out, std::ostream& diag) {
  try {
    validate(scenario);
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  RunMetadata meta = metadata_for(scenario);
  std::ostringstream body;
  try {
    if (scenario.name == ScenarioName::spectrum) {
      const auto lines = spectrum(scenario.orbit, scenario.quad.kmax);
      write_spectrum(lines, meta, scenario.format, body);
    } else {
      const Eigen::ArrayXd grid =
          uniform_grid(scenario.grid.tau_min_scaled, scenario.grid.tau_max_scaled, scenario.grid.points);
      const CorrelationSeries series = correlation_series(scenario.kind, scenario.orbit, grid, scenario.quad);
      meta.normalization = series.normalization;
      write_series(series, meta, scenario.format, body);
    }
  } catch (const ConvergenceError& e) {
    diag << "error: " << e.what() << "\n";
    diag << "failing omega_tau: " << format_value(e.omega_tau()) << '\n';
    return kExitConvergence;
  } catch (const std::domain_error& e) {
    diag << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return emit(scenario, meta, body.str(), out, diag);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& diag) {
  CLI::App app{"Phase-averaged radiation correlators of a Kepler orbit", "rydcorr"};

  const std::map<std::string, ScenarioName> scenarios{{"fig1", ScenarioName::fig1},
                                                      {"fig2a", ScenarioName::fig2a},
                                                      {"fig2b", ScenarioName::fig2b},
                                                      {"spectrum", ScenarioName::spectrum},
                                                      {"custom", ScenarioName::custom}};
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
  const std::map<std::string, CorrelationKind> kinds{{"first", CorrelationKind::first_order},
                                                     {"second", CorrelationKind::second_order}};

  ScenarioName name = ScenarioName::fig1;
  std::optional<double> epsilon, a, omega, tau_min, tau_max, tol;
  std::optional<int> points, phi_nodes, kmax;
  std::optional<OutputFormat> format;
  std::optional<CorrelationKind> kind;
  std::string output;

  app.add_option("--scenario", name, "fig1 | fig2a | fig2b | spectrum | custom")
      ->transform(CLI::CheckedTransformer(scenarios, CLI::ignore_case).description(""));
  app.add_option("--epsilon", epsilon, "orbit eccentricity, 0 <= eps < 1");
  app.add_option("--a", a, "semi-major axis (atomic units)");
  app.add_option("--omega", omega, "orbital angular frequency (atomic units)");
  app.add_option("--tau-min", tau_min, "first grid value of omega*tau");
  app.add_option("--tau-max", tau_max, "last grid value of omega*tau");
  app.add_option("--points", points, "number of grid points");
  app.add_option("--phi-nodes", phi_nodes, "phi quadrature nodes (power of two, >= 64)");
  app.add_option("--kmax", kmax, "harmonic cutoff");
  app.add_option("--convergence-tol", tol, "relative tolerance of the node-doubling check");
  app.add_option("--kind", kind, "correlator for the custom scenario: first | second")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case).description(""));
  app.add_option("--format", format, "csv | json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""));
  app.add_option("--output", output, "output file, '-' for stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    diag << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Scenario s = named_scenario(name);
  if (name == ScenarioName::custom && (!epsilon || !tau_min || !tau_max || !points)) {
    diag << "error: custom scenario requires --epsilon, --tau-min, --tau-max and --points\n";
    return kExitUsage;
  }
  if (kind && name != ScenarioName::custom) {
    diag << "error: --kind only applies to the custom scenario\n";
    return kExitUsage;
  }
  if (epsilon) s.orbit.epsilon = *epsilon;
  if (a) s.orbit.a = *a;
  if (omega) s.orbit.omega = *omega;
  if (tau_min) s.grid.tau_min_scaled = *tau_min;
  if (tau_max) s.grid.tau_max_scaled = *tau_max;
  if (points) s.grid.points = *points;
  if (phi_nodes) s.quad.phi_nodes = *phi_nodes;
  if (kmax) s.quad.kmax = *kmax;
  if (tol) s.quad.convergence_tol = *tol;
  if (kind) s.kind = *kind;
  if (format) s.format = *format;
  s.output_path = output;
  return run(s, out, diag);
}

}  // namespace rydberg::cli
