#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rydberg/correlators.hpp"

namespace rydberg {

enum class OutputFormat { csv, json };

/// Everything needed to regenerate an output file.
struct RunMetadata {
  std::string scenario;
  std::string kind;  ///< "first_order", "second_order" or "spectrum"
  OrbitParams orbit;
  QuadratureConfig quad;
  double tau_min = 0.0;
  double tau_max = 0.0;
  int points = 0;
  double normalization = 1.0;
  std::string version;
};

/// Decimal text with 12 significant digits.
std::string format_value(double value);

/// value rounded to what format_value prints
double round_to_printed(double value);

const char* kind_name(CorrelationKind kind);

nlohmann::json metadata_json(const RunMetadata& meta);

/// CSV: header `omega_tau,value`, one LF-terminated row per point.
void write_series_csv(const CorrelationSeries& series, std::ostream& out);

/// JSON: kind, epsilon, normalization, omega_tau, value, quadrature, metadata.
nlohmann::json series_json(const CorrelationSeries& series, const RunMetadata& meta);

void write_series(const CorrelationSeries& series, const RunMetadata& meta, OutputFormat format, std::ostream& out);

/// Spectrum table; CSV header `k,weight`.
void write_spectrum(const std::vector<SpectrumLine>& lines, const RunMetadata& meta, OutputFormat format,
                    std::ostream& out);

/// Reads back a JSON document written by write_series.
CorrelationSeries read_series_json(const nlohmann::json& doc);

}  // namespace rydberg
