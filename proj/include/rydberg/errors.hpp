#pragma once

#include <stdexcept>
#include <string>

namespace rydberg {

/// Raised when a node-doubling check on a periodic quadrature fails.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double omega_tau)
      : std::runtime_error(what), omega_tau_(omega_tau) {}

  /// Scaled time difference at which the check failed (NaN when not tied to a grid point).
  double omega_tau() const noexcept { return omega_tau_; }

 private:
  double omega_tau_;
};

}  // namespace rydberg
