#pragma once

#include <Eigen/Core>

#include <vector>

#include "rydberg/kepler.hpp"

namespace rydberg {

/// Settings of the numerical phase average.
struct QuadratureConfig {
  int phi_nodes = 2048;           ///< uniform phi nodes; power of two, >= 64
  double convergence_tol = 1e-8;  ///< relative change allowed when the node count is doubled
  int kmax = 200;                 ///< harmonic cutoff for the Fourier-sum route

  void validate() const;
};

enum class CorrelationKind { first_order, second_order };

/// Correlation values on a grid of scaled time differences omega * tau.
struct CorrelationSeries {
  CorrelationKind kind = CorrelationKind::first_order;
  Eigen::ArrayXd tau_scaled;
  Eigen::ArrayXd values;
  double normalization = 1.0;  ///< constant the raw correlator was divided by
};

struct SpectrumLine {
  int k = 1;
  double weight = 0.0;
};

/// <[u cos chi + v sin chi][p cos chi + q sin chi]>_chi = (u p + v q) / 2
inline double chi_avg_second(double u, double v, double p, double q) { return 0.5 * (u * p + v * q); }

/// <[u cos chi + v sin chi]^2 [p cos chi + q sin chi]^2>_chi from the moments
/// <cos^4> = <sin^4> = 3/8 and <cos^2 sin^2> = 1/8.
inline double chi_avg_fourth(double u, double v, double p, double q) {
  const double up = u * p;
  const double vq = v * q;
  const double uq = u * q;
  const double vp = v * p;
  return 0.375 * (up * up + vq * vq) + 0.125 * (uq * uq + vp * vp + 4.0 * up * vq);
}

/// Phase-averaged <a_X(t0 + tau) a_X(t0)> over the orientation chi (closed
/// form) and the phase of motion phi (periodic trapezoid). The value uses
/// quad.phi_nodes nodes; a rerun with twice as many nodes must agree within
/// quad.convergence_tol relative to the mean of |a(t0)| |a(t0 + tau)|, otherwise
/// ConvergenceError is thrown.
double first_order(double tau, const OrbitParams& orbit, const QuadratureConfig& quad = {}, double t0 = 0.0);

/// sum_{k=1..kmax} (k omega)^4 (|x_k|^2 + |y_k|^2) cos(k omega tau)
double first_order_fourier(double tau, const OrbitParams& orbit, const QuadratureConfig& quad = {});

/// Lines k = 1..kmax of the radiation spectrum with weight
/// (k omega)^4 (|x_k|^2 + |y_k|^2); the weights sum to first_order(0).
std::vector<SpectrumLine> spectrum(const OrbitParams& orbit, int kmax);

/// Phase-averaged <a_X(t0)^2 a_X(t0 + tau)^2>, chi in closed form, phi numerically.
double second_order(double tau, const OrbitParams& orbit, const QuadratureConfig& quad = {}, double t0 = 0.0);

/// n points from lo to hi inclusive (n == 1 gives {lo}).
Eigen::ArrayXd uniform_grid(double lo, double hi, int points);

/// Evaluates the chosen correlator on the omega*tau grid and normalizes:
/// by first_order(0) for first order, by first_order(0)^2 for second order.
CorrelationSeries correlation_series(CorrelationKind kind, const OrbitParams& orbit,
                                     const Eigen::ArrayXd& tau_scaled, const QuadratureConfig& quad = {});

}  // namespace rydberg
