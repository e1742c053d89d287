#pragma once

#include <complex>

#include "rydberg/kepler.hpp"

namespace rydberg {

/// Hydrogen state |n, l, m = l>.
struct RydbergState {
  int n = 1;
  int l = 0;

  void validate() const;
  /// sqrt(1 - (l/n)^2)
  double eccentricity() const;
};

/// Reference quantum number n0 with omega0 = 1/n0^3 and the eccentricity
/// assigned to the transition.
struct OrbitCorrespondence {
  int n0 = 1;
  double omega0 = 1.0;
  double epsilon = 0.0;

  /// Classical orbit a = n0^2 a0, omega = 1/n0^3.
  OrbitParams orbit() const;
};

enum class EccentricityMode {
  initial_state,   ///< eps from the initial (n, l)
  average_energy,  ///< eps at the mean energy and mean angular momentum of both states
};

/// Eccentricity used for the transition (n, l) -> (n', l').
double transition_eccentricity(const RydbergState& initial, const RydbergState& final_state,
                               EccentricityMode mode = EccentricityMode::initial_state);

OrbitCorrespondence make_correspondence(const RydbergState& initial, const RydbergState& final_state,
                                        EccentricityMode mode = EccentricityMode::initial_state);

/// E_n linearized about n0: -1/(2 n0^2) + (n - n0)/n0^3.
double linearized_energy(int n, int n0);

/// Classical limit of <n', l +- 1| r |n, l> in Bohr radii:
/// n^2 / (2 (n - n')) [J_{n-n'+1}((n-n') eps) - J_{n-n'-1}((n-n') eps)].
double radial_matelem_classical(int n, int n_prime, double epsilon);

/// Summed x transition element, equal to the Fourier coefficient x_{n-n'}.
double x_transition_element(int n, int n_prime, const OrbitParams& orbit);

/// -(n-n')^2 omega0^2 exp(-i (n-n') omega0 t) x_{n-n'}
std::complex<double> accel_matelem(int n, int n_prime, double t, const OrbitCorrespondence& correspondence,
                                   const OrbitParams& orbit);

/// Angular overlap int dOmega conj(Y_{l,l}) sin(theta) e^{i phi} Y_{l-1,l-1}
/// with the positive normalization Y_{l,l} = c_l sin^l(theta) e^{i l phi}.
/// Throws std::domain_error for l < 1.
double angular_factor(int l);

}  // namespace rydberg
