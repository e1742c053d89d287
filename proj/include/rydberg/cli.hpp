#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rydberg/correlators.hpp"
#include "rydberg/series_io.hpp"

namespace rydberg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitIo = 4;

enum class ScenarioName { fig1, fig2a, fig2b, spectrum, custom };

struct GridSpec {
  double tau_min_scaled = 0.0;
  double tau_max_scaled = 0.0;
  int points = 0;
};

struct Scenario {
  ScenarioName name = ScenarioName::custom;
  CorrelationKind kind = CorrelationKind::first_order;
  OrbitParams orbit;
  QuadratureConfig quad;
  GridSpec grid;
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  ///< empty or "-" writes to stdout
};

const char* scenario_name(ScenarioName name);

/// Pre-filled figure scenarios (eccentricity 0.8, a = omega = 1).
/// `custom` returns an empty shell that needs an explicit orbit and grid.
Scenario named_scenario(ScenarioName name);

/// Runs the scenario and writes its artifact. CSV output to a file gets a
/// `<path>.meta.json` sidecar; CSV on stdout gets its metadata on `diag`.
/// Returns one of the kExit* codes.
int run(const Scenario& scenario, std::ostream& out, std::ostream& diag);

/// Flag parsing front end for the rydcorr tool.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& diag);

}  // namespace rydberg::cli
