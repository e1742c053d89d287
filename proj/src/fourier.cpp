#include "rydberg/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rydberg/errors.hpp"
#include "rydberg/specfun.hpp"

namespace rydberg {

namespace {

std::complex<double> trapezoid_coeff(Component component, int k, const OrbitParams& orbit, int nodes) {
  const double step = 2.0 * std::numbers::pi / nodes;
  std::complex<double> sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double m = step * j;
    const PlaneVector<double> pos = position_at_anomaly(m, orbit);
    const double value = component == Component::x ? pos.x() : pos.y();
    sum += value * std::polar(1.0, -k * m);
  }
  return sum / static_cast<double>(nodes);
}

}  // namespace

double coeff_x(int k, const OrbitParams& orbit) {
  if (k == 0) throw std::domain_error("coeff_x: k must be nonzero");
  orbit.validate();
  const double z = k * orbit.epsilon;
  return orbit.a / (2.0 * k) * (bessel_j(k - 1, z) - bessel_j(k + 1, z));
}

std::complex<double> coeff_y(int k, const OrbitParams& orbit) {
  if (k == 0) throw std::domain_error("coeff_y: k must be nonzero");
  orbit.validate();
  const double z = k * orbit.epsilon;
  double ratio;  // J_k(z) / z
  if (z == 0.0) {
    ratio = std::abs(k) == 1 ? 0.5 / k : 0.0;
  } else {
    ratio = bessel_j(k, z) / z;
  }
  const double amplitude = orbit.a * std::sqrt(1.0 - orbit.epsilon * orbit.epsilon) * ratio;
  return {0.0, -amplitude};
}

double mean_x(const OrbitParams& orbit) { return -1.5 * orbit.a * orbit.epsilon; }

std::complex<double> numeric_fourier_coeff(Component component, int k, const OrbitParams& orbit, int nodes) {
  orbit.validate();
  if (nodes < 8 * (std::abs(k) + 1)) throw std::domain_error("numeric_fourier_coeff: too few nodes for this harmonic");
  const std::complex<double> coarse = trapezoid_coeff(component, k, orbit, nodes);
  const std::complex<double> fine = trapezoid_coeff(component, k, orbit, 2 * nodes);
  if (std::abs(fine - coarse) > 1e-10) {
    throw ConvergenceError("numeric_fourier_coeff: node doubling changed the coefficient by more than 1e-10",
                           std::numeric_limits<double>::quiet_NaN());
  }
  return coarse;
}

double reconstruct_x(double t, const OrbitParams& orbit, double phi, int kmax) {
  orbit.validate();
  if (kmax < 0) throw std::domain_error("reconstruct_x: kmax must be non-negative");
  const double m = orbit.omega * t + phi;
  double sum = mean_x(orbit);
  for (int k = 1; k <= kmax; ++k) sum += 2.0 * coeff_x(k, orbit) * std::cos(k * m);
  return sum;
}

}  // namespace rydberg
