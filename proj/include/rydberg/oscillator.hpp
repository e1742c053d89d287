#pragma once

#include <complex>

namespace rydberg {

/// Harmonic oscillator reference model. Field quantities are in units where
/// e / (4 pi eps0 R) = 1 and t stands for the retarded time.
struct OscillatorState {
  int n = 0;             ///< excitation number
  double omega = 1.0;
  double x0 = 1.0;       ///< sqrt(hbar / (M omega))
  double amplitude = 1.0;  ///< classical amplitude A

  void validate() const;
};

/// -omega^2 A cos(omega t)
double classical_field_x(double t, double amplitude, double omega);

/// (1/2) omega^4 x0^2 [n e^{i omega tau} + (n + 1/2) e^{-i omega tau}]
std::complex<double> first_corr_exact(double tau, const OscillatorState& state);

/// Large-n second-order correlator n^2 [1 + cos(2 omega tau)], dimensional
/// prefactors omitted. The formula is only meaningful for n >> 1, so
/// n < 10 is rejected with std::domain_error.
double second_corr_large_n(double tau, const OscillatorState& state);

}  // namespace rydberg
