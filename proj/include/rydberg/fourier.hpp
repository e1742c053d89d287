#pragma once

#include <complex>

#include "rydberg/kepler.hpp"

namespace rydberg {

enum class Component { x, y };

/// Harmonic coefficients of the orbit coordinates in the expansion
///   x(t) = sum_k x_k exp(i k (omega t + phi)),
/// with perihelion at t = 0 for phi = 0. Coefficients do not depend on phi.
///
/// x_k = a/(2k) [J_{k-1}(k eps) - J_{k+1}(k eps)], real and even in k.
/// Throws std::domain_error for k == 0; the static offset lives in
/// numeric_fourier_coeff / reconstruct_x.
double coeff_x(int k, const OrbitParams& orbit);

/// y_k = -i a sqrt(1 - eps^2) J_k(k eps) / (k eps), so y_{-k} = conj(y_k).
/// Follows from sin(xi) = sum_{k>=1} 2 J_k(k eps)/(k eps) sin(k M).
std::complex<double> coeff_y(int k, const OrbitParams& orbit);

/// Orbit-averaged x, -(3/2) a eps.
double mean_x(const OrbitParams& orbit);

/// (1/T) int_0^T c(t) exp(-i k omega t) dt by the periodic trapezoidal rule.
///
/// Requires nodes >= 8 (|k| + 1). The estimate is repeated with 2*nodes
/// and ConvergenceError is thrown if the two differ by more than 1e-10.
std::complex<double> numeric_fourier_coeff(Component component, int k, const OrbitParams& orbit, int nodes);

/// x0 + sum_{k=1..kmax} 2 Re[x_k exp(i k (omega t + phi))].
double reconstruct_x(double t, const OrbitParams& orbit, double phi, int kmax);

}  // namespace rydberg
