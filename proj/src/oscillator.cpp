#include "rydberg/oscillator.hpp"

#include <cmath>
#include <stdexcept>

namespace rydberg {

void OscillatorState::validate() const {
  if (n < 0) throw std::domain_error("oscillator: n must be non-negative");
  if (!(omega > 0.0)) throw std::domain_error("oscillator: omega must be positive");
  if (!(x0 > 0.0)) throw std::domain_error("oscillator: x0 must be positive");
}

double classical_field_x(double t, double amplitude, double omega) {
  return -omega * omega * amplitude * std::cos(omega * t);
}

std::complex<double> first_corr_exact(double tau, const OscillatorState& state) {
  state.validate();
  const double w2 = state.omega * state.omega;
  const double scale = 0.5 * w2 * w2 * state.x0 * state.x0;
  const double phase = state.omega * tau;
  const double n = state.n;
  return scale * (n * std::polar(1.0, phase) + (n + 0.5) * std::polar(1.0, -phase));
}

double second_corr_large_n(double tau, const OscillatorState& state) {
  state.validate();
  if (state.n < 10) throw std::domain_error("second_corr_large_n: requires n >= 10");
  const double n = state.n;
  return n * n * (1.0 + std::cos(2.0 * state.omega * tau));
}

}  // namespace rydberg
