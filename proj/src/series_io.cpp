#include "rydberg/series_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace rydberg {

std::string format_value(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double round_to_printed(double value) { return std::strtod(format_value(value).c_str(), nullptr); }

const char* kind_name(CorrelationKind kind) {
  return kind == CorrelationKind::first_order ? "first_order" : "second_order";
}

nlohmann::json metadata_json(const RunMetadata& meta) {
  return {
      {"scenario", meta.scenario},
      {"kind", meta.kind},
      {"epsilon", meta.orbit.epsilon},
      {"omega", meta.orbit.omega},
      {"a", meta.orbit.a},
      {"phi_nodes", meta.quad.phi_nodes},
      {"convergence_tol", meta.quad.convergence_tol},
      {"kmax", meta.quad.kmax},
      {"tau_min", meta.tau_min},
      {"tau_max", meta.tau_max},
      {"points", meta.points},
      {"normalization", meta.normalization},
      {"version", meta.version},
  };
}

void write_series_csv(const CorrelationSeries& series, std::ostream& out) {
  out << "omega_tau,value\n";
  for (Eigen::Index i = 0; i < series.values.size(); ++i) {
    out << format_value(series.tau_scaled(i)) << ',' << format_value(series.values(i)) << '\n';
  }
}

nlohmann::json series_json(const CorrelationSeries& series, const RunMetadata& meta) {
  nlohmann::json tau = nlohmann::json::array();
  nlohmann::json values = nlohmann::json::array();
  for (Eigen::Index i = 0; i < series.values.size(); ++i) {
    tau.push_back(round_to_printed(series.tau_scaled(i)));
    values.push_back(round_to_printed(series.values(i)));
  }
  return {
      {"kind", kind_name(series.kind)},
      {"epsilon", meta.orbit.epsilon},
      {"normalization", series.normalization},
      {"omega_tau", std::move(tau)},
      {"value", std::move(values)},
      {"quadrature",
       {{"phi_nodes", meta.quad.phi_nodes}, {"convergence_tol", meta.quad.convergence_tol}, {"kmax", meta.quad.kmax}}},
      {"metadata", metadata_json(meta)},
  };
}

void write_series(const CorrelationSeries& series, const RunMetadata& meta, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv) {
    write_series_csv(series, out);
  } else {
    out << series_json(series, meta).dump(2) << '\n';
  }
}

void write_spectrum(const std::vector<SpectrumLine>& lines, const RunMetadata& meta, OutputFormat format,
                    std::ostream& out) {
  if (format == OutputFormat::csv) {
    out << "k,weight\n";
    for (const SpectrumLine& line : lines) out << line.k << ',' << format_value(line.weight) << '\n';
    return;
  }
  nlohmann::json k = nlohmann::json::array();
  nlohmann::json weight = nlohmann::json::array();
  for (const SpectrumLine& line : lines) {
    k.push_back(line.k);
    weight.push_back(round_to_printed(line.weight));
  }
  nlohmann::json doc = {
      {"kind", "spectrum"},
      {"epsilon", meta.orbit.epsilon},
      {"normalization", meta.normalization},
      {"k", std::move(k)},
      {"weight", std::move(weight)},
      {"quadrature",
       {{"phi_nodes", meta.quad.phi_nodes}, {"convergence_tol", meta.quad.convergence_tol}, {"kmax", meta.quad.kmax}}},
      {"metadata", metadata_json(meta)},
  };
  out << doc.dump(2) << '\n';
}

CorrelationSeries read_series_json(const nlohmann::json& doc) {
  CorrelationSeries series;
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "first_order") {
    series.kind = CorrelationKind::first_order;
  } else if (kind == "second_order") {
    series.kind = CorrelationKind::second_order;
  } else {
    throw std::invalid_argument("read_series_json: unknown kind " + kind);
  }
  const auto tau = doc.at("omega_tau").get<std::vector<double>>();
  const auto values = doc.at("value").get<std::vector<double>>();
  if (tau.size() != values.size()) throw std::invalid_argument("read_series_json: array length mismatch");
  series.tau_scaled = Eigen::Map<const Eigen::ArrayXd>(tau.data(), static_cast<Eigen::Index>(tau.size()));
  series.values = Eigen::Map<const Eigen::ArrayXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  series.normalization = doc.at("normalization").get<double>();
  return series;
}

}  // namespace rydberg
