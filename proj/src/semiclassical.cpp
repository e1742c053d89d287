#include "rydberg/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rydberg/fourier.hpp"
#include "rydberg/specfun.hpp"

namespace rydberg {

void RydbergState::validate() const {
  if (n < 1) throw std::domain_error("RydbergState: n must be >= 1");
  if (l < 0 || l >= n) throw std::domain_error("RydbergState: l must lie in [0, n-1]");
}

double RydbergState::eccentricity() const {
  validate();
  const double ratio = static_cast<double>(l) / n;
  return std::sqrt(1.0 - ratio * ratio);
}

OrbitParams OrbitCorrespondence::orbit() const {
  const double n = n0;
  return OrbitParams{n * n, omega0, epsilon};
}

double transition_eccentricity(const RydbergState& initial, const RydbergState& final_state, EccentricityMode mode) {
  initial.validate();
  final_state.validate();
  if (mode == EccentricityMode::initial_state) return initial.eccentricity();

  // E = -1/(2 n^2) inverted at the mean energy; L taken as the mean l.
  const double energy = 0.5 * (-0.5 / (static_cast<double>(initial.n) * initial.n) -
                               0.5 / (static_cast<double>(final_state.n) * final_state.n));
  const double n_eff = 1.0 / std::sqrt(-2.0 * energy);
  const double l_avg = 0.5 * (initial.l + final_state.l);
  const double ratio = l_avg / n_eff;
  return std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
}

OrbitCorrespondence make_correspondence(const RydbergState& initial, const RydbergState& final_state,
                                        EccentricityMode mode) {
  OrbitCorrespondence c;
  c.n0 = initial.n;
  const double n0 = initial.n;
  c.omega0 = 1.0 / (n0 * n0 * n0);
  c.epsilon = transition_eccentricity(initial, final_state, mode);
  return c;
}

double linearized_energy(int n, int n0) {
  if (n0 < 1) throw std::domain_error("linearized_energy: n0 must be >= 1");
  const double m = n0;
  return -0.5 / (m * m) + (n - m) / (m * m * m);
}

double radial_matelem_classical(int n, int n_prime, double epsilon) {
  if (n == n_prime) throw std::domain_error("radial_matelem_classical: n == n' is not a transition");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw std::domain_error("radial_matelem_classical: eccentricity must lie in [0, 1)");
  const int k = n - n_prime;
  const double z = k * epsilon;
  const double nn = static_cast<double>(n) * n;
  return nn / (2.0 * k) * (bessel_j(k + 1, z) - bessel_j(k - 1, z));
}

double x_transition_element(int n, int n_prime, const OrbitParams& orbit) {
  if (n == n_prime) throw std::domain_error("x_transition_element: n == n' is not a transition");
  return coeff_x(n - n_prime, orbit);
}

std::complex<double> accel_matelem(int n, int n_prime, double t, const OrbitCorrespondence& correspondence,
                                   const OrbitParams& orbit) {
  if (n == n_prime) throw std::domain_error("accel_matelem: n == n' is not a transition");
  const int k = n - n_prime;
  const double w = correspondence.omega0;
  const double scale = -static_cast<double>(k) * k * w * w * coeff_x(k, orbit);
  return scale * std::polar(1.0, -k * w * t);
}

double angular_factor(int l) {
  if (l < 1) throw std::domain_error("angular_factor: l must be >= 1");
  // c_l = sqrt((2l+1)!/(4 pi)) / (2^l l!), and the theta integral is
  // int sin^{2l+1} = 2^{2l+1} (l!)^2 / (2l+1)!. The product
  // 2 pi c_l c_{l-1} 2^{2l+1} (l!)^2 / (2l+1)! collapses to sqrt(2l / (2l+1)).
  const double two_l = 2.0 * l;
  return std::sqrt(two_l / (two_l + 1.0));
}

}  // namespace rydberg
