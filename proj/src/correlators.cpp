#include "rydberg/correlators.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rydberg/errors.hpp"
#include "rydberg/fourier.hpp"

namespace rydberg {

void QuadratureConfig::validate() const {
  if (phi_nodes < 64 || !std::has_single_bit(static_cast<unsigned>(phi_nodes))) {
    throw std::domain_error("QuadratureConfig: phi_nodes must be a power of two >= 64");
  }
  if (!(convergence_tol > 0.0)) throw std::domain_error("QuadratureConfig: convergence_tol must be positive");
  if (kmax < 1) throw std::domain_error("QuadratureConfig: kmax must be >= 1");
}

namespace {

// Accelerations on the doubled phi grid, columns j = 0..2N-1 at mean anomaly
// offset + 2 pi j / (2N).
Eigen::Matrix2Xd acceleration_table(double offset, const OrbitParams& orbit, int nodes) {
  Eigen::Matrix2Xd table(2, nodes);
  const double step = 2.0 * std::numbers::pi / nodes;
  for (int j = 0; j < nodes; ++j) table.col(j) = acceleration_at_anomaly(offset + step * j, orbit);
  return table;
}

enum class Moment { second, fourth };

// Shares the t1 table across a grid of tau values.
class PhaseAverager {
 public:
  PhaseAverager(const OrbitParams& orbit, const QuadratureConfig& quad, double t0)
      : orbit_(orbit), quad_(quad), t0_(t0) {
    orbit_.validate();
    quad_.validate();
    fine_nodes_ = 2 * quad_.phi_nodes;
    start_ = acceleration_table(orbit_.omega * t0_, orbit_, fine_nodes_);
  }

  double operator()(double tau, Moment moment) const {
    const Eigen::Matrix2Xd later = acceleration_table(orbit_.omega * (t0_ + tau), orbit_, fine_nodes_);
    Eigen::ArrayXd integrand(fine_nodes_);
    for (int j = 0; j < fine_nodes_; ++j) {
      const double u = start_(0, j), v = start_(1, j);
      const double p = later(0, j), q = later(1, j);
      integrand(j) = moment == Moment::second ? chi_avg_second(u, v, p, q) : chi_avg_fourth(u, v, p, q);
    }
    const Eigen::Map<const Eigen::ArrayXd, 0, Eigen::InnerStride<2>> coarse(integrand.data(), quad_.phi_nodes);
    const double coarse_mean = coarse.mean();
    const double fine_mean = integrand.mean();
    // |a1| |a2| (or its square) bounds the integrand, so the tolerance stays
    // meaningful where the average itself passes through zero.
    const Eigen::ArrayXd bound = start_.colwise().norm().array() * later.colwise().norm().array();
    const double scale = moment == Moment::second ? bound.mean() : bound.square().mean();
    if (std::abs(fine_mean - coarse_mean) > quad_.convergence_tol * scale) {
      std::ostringstream msg;
      msg << "phi quadrature not converged at omega*tau = " << orbit_.omega * tau << " (" << quad_.phi_nodes
          << " vs " << fine_nodes_ << " nodes)";
      throw ConvergenceError(msg.str(), orbit_.omega * tau);
    }
    return coarse_mean;
  }

 private:
  OrbitParams orbit_;
  QuadratureConfig quad_;
  double t0_;
  int fine_nodes_ = 0;
  Eigen::Matrix2Xd start_;
};

}  // namespace

double first_order(double tau, const OrbitParams& orbit, const QuadratureConfig& quad, double t0) {
  return PhaseAverager(orbit, quad, t0)(tau, Moment::second);
}

double second_order(double tau, const OrbitParams& orbit, const QuadratureConfig& quad, double t0) {
  return PhaseAverager(orbit, quad, t0)(tau, Moment::fourth);
}

std::vector<SpectrumLine> spectrum(const OrbitParams& orbit, int kmax) {
  orbit.validate();
  if (kmax < 1) throw std::domain_error("spectrum: kmax must be >= 1");
  std::vector<SpectrumLine> lines;
  lines.reserve(kmax);
  for (int k = 1; k <= kmax; ++k) {
    const double kw = k * orbit.omega;
    const double xk = coeff_x(k, orbit);
    const double weight = kw * kw * kw * kw * (xk * xk + std::norm(coeff_y(k, orbit)));
    lines.push_back({k, weight});
  }
  return lines;
}

double first_order_fourier(double tau, const OrbitParams& orbit, const QuadratureConfig& quad) {
  quad.validate();
  const double phase = orbit.omega * tau;
  double sum = 0.0;
  for (const SpectrumLine& line : spectrum(orbit, quad.kmax)) sum += line.weight * std::cos(line.k * phase);
  return sum;
}

Eigen::ArrayXd uniform_grid(double lo, double hi, int points) {
  if (points < 1) throw std::domain_error("uniform_grid: need at least one point");
  if (points == 1) return Eigen::ArrayXd::Constant(1, lo);
  if (!(hi > lo)) throw std::domain_error("uniform_grid: grid must be increasing");
  Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(points, lo, hi);
  grid(points - 1) = hi;
  return grid;
}

CorrelationSeries correlation_series(CorrelationKind kind, const OrbitParams& orbit, const Eigen::ArrayXd& tau_scaled,
                                     const QuadratureConfig& quad) {
  if (tau_scaled.size() == 0) throw std::domain_error("correlation_series: empty grid");
  for (Eigen::Index i = 1; i < tau_scaled.size(); ++i) {
    if (!(tau_scaled(i) > tau_scaled(i - 1))) throw std::domain_error("correlation_series: grid must be strictly increasing");
  }
  const PhaseAverager average(orbit, quad, 0.0);
  const double mean_square = average(0.0, Moment::second);
  const Moment moment = kind == CorrelationKind::first_order ? Moment::second : Moment::fourth;

  CorrelationSeries series;
  series.kind = kind;
  series.tau_scaled = tau_scaled;
  series.normalization = kind == CorrelationKind::first_order ? mean_square : mean_square * mean_square;
  series.values.resize(tau_scaled.size());
  for (Eigen::Index i = 0; i < tau_scaled.size(); ++i) {
    series.values(i) = average(tau_scaled(i) / orbit.omega, moment) / series.normalization;
  }
  return series;
}

}  // namespace rydberg
