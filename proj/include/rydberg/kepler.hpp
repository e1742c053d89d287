#pragma once

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rydberg {

template <typename Scalar>
using PlaneVector = Eigen::Matrix<Scalar, 2, 1>;

/// Bound Kepler orbit: semi-major axis, angular frequency, eccentricity (atomic units).
template <typename Scalar>
struct BasicOrbit {
  Scalar a = Scalar(1);
  Scalar omega = Scalar(1);
  Scalar epsilon = Scalar(0);

  /// Throws std::domain_error unless a > 0, omega > 0 and 0 <= epsilon < 1.
  void validate() const {
    using std::isfinite;
    if (!(isfinite(a) && a > Scalar(0))) throw std::domain_error("orbit: semi-major axis must be positive");
    if (!(isfinite(omega) && omega > Scalar(0))) throw std::domain_error("orbit: frequency must be positive");
    if (!(epsilon >= Scalar(0) && epsilon < Scalar(1))) throw std::domain_error("orbit: eccentricity must lie in [0, 1)");
  }

  Scalar period() const { return Scalar(2) * std::numbers::pi_v<Scalar> / omega; }
};

using OrbitParams = BasicOrbit<double>;

/// Reduce an angle to [0, 2pi).
template <typename Scalar>
Scalar reduce_angle(Scalar angle) {
  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  Scalar r = angle - two_pi * std::floor(angle / two_pi);
  if (r >= two_pi) r -= two_pi;
  if (r < Scalar(0)) r = Scalar(0);
  return r;
}

/// The two random phases of the trajectory ensemble: phase of motion and in-plane orientation.
template <typename Scalar>
struct BasicPhaseSample {
  Scalar phi = Scalar(0);
  Scalar chi = Scalar(0);

  BasicPhaseSample() = default;
  BasicPhaseSample(Scalar phase, Scalar orientation)
      : phi(reduce_angle(phase)), chi(reduce_angle(orientation)) {}
};

using PhaseSample = BasicPhaseSample<double>;

/// Solve M = xi - epsilon sin(xi) for the eccentric anomaly xi.
///
/// M is reduced to [0, 2pi) first and the removed winding is added back,
/// so xi is continuous in M. Newton iterations are kept inside the bracket
/// [0, 2pi] and replaced by bisection whenever a step leaves it; after
/// 60 iterations without convergence the remaining work is pure bisection.
template <typename Scalar>
Scalar solve_kepler(Scalar mean_anomaly, Scalar epsilon) {
  using std::abs;
  using std::cos;
  using std::sin;
  if (!(epsilon >= Scalar(0) && epsilon < Scalar(1))) throw std::domain_error("solve_kepler: eccentricity must lie in [0, 1)");
  if (!std::isfinite(mean_anomaly)) throw std::domain_error("solve_kepler: mean anomaly must be finite");

  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  const Scalar winding = std::floor(mean_anomaly / two_pi);
  const Scalar m = reduce_angle(mean_anomaly);
  if (epsilon == Scalar(0)) return m + two_pi * winding;

  const Scalar tol = std::max(Scalar(1e-13), Scalar(16) * std::numeric_limits<Scalar>::epsilon());
  auto residual = [&](Scalar xi) { return xi - epsilon * sin(xi) - m; };

  Scalar lo = Scalar(0);
  Scalar hi = two_pi;
  Scalar xi = m + epsilon * sin(m);
  Scalar f = residual(xi);
  constexpr int kNewtonIterations = 60;
  int iter = 0;
  for (; iter < kNewtonIterations && abs(f) > tol; ++iter) {
    if (f < Scalar(0)) lo = xi; else hi = xi;
    const Scalar step = f / (Scalar(1) - epsilon * cos(xi));
    Scalar candidate = xi - step;
    if (!(candidate > lo && candidate < hi)) candidate = Scalar(0.5) * (lo + hi);
    if (candidate == xi) break;
    xi = candidate;
    f = residual(xi);
  }
  // bisection fallback
  while (abs(f) > tol && hi - lo > std::numeric_limits<Scalar>::epsilon() * two_pi) {
    if (f < Scalar(0)) lo = xi; else hi = xi;
    xi = Scalar(0.5) * (lo + hi);
    f = residual(xi);
  }
  return xi + two_pi * winding;
}

template <typename Scalar>
Scalar eccentric_anomaly(Scalar t, const BasicOrbit<Scalar>& orbit, Scalar phi) {
  return solve_kepler(orbit.omega * t + phi, orbit.epsilon);
}

/// Position in the orbital plane at mean anomaly M (focus at the origin, perihelion on +x).
template <typename Scalar>
PlaneVector<Scalar> position_at_anomaly(Scalar mean_anomaly, const BasicOrbit<Scalar>& orbit) {
  const Scalar xi = solve_kepler(mean_anomaly, orbit.epsilon);
  const Scalar e = orbit.epsilon;
  return {orbit.a * (std::cos(xi) - e), orbit.a * std::sqrt(Scalar(1) - e * e) * std::sin(xi)};
}

/// Central-force acceleration -omega^2 a^3 r / |r|^3 at mean anomaly M.
template <typename Scalar>
PlaneVector<Scalar> acceleration_at_anomaly(Scalar mean_anomaly, const BasicOrbit<Scalar>& orbit) {
  const Scalar xi = solve_kepler(mean_anomaly, orbit.epsilon);
  const Scalar e = orbit.epsilon;
  const Scalar c = std::cos(xi);
  const Scalar r = orbit.a * (Scalar(1) - e * c);
  const PlaneVector<Scalar> pos(orbit.a * (c - e), orbit.a * std::sqrt(Scalar(1) - e * e) * std::sin(xi));
  const Scalar gm = orbit.omega * orbit.omega * orbit.a * orbit.a * orbit.a;
  return -gm / (r * r * r) * pos;
}

template <typename Scalar>
PlaneVector<Scalar> position(Scalar t, const BasicOrbit<Scalar>& orbit, Scalar phi) {
  orbit.validate();
  return position_at_anomaly(orbit.omega * t + phi, orbit);
}

template <typename Scalar>
Scalar radius(Scalar t, const BasicOrbit<Scalar>& orbit, Scalar phi) {
  orbit.validate();
  return orbit.a * (Scalar(1) - orbit.epsilon * std::cos(eccentric_anomaly(t, orbit, phi)));
}

template <typename Scalar>
PlaneVector<Scalar> acceleration(Scalar t, const BasicOrbit<Scalar>& orbit, Scalar phi) {
  orbit.validate();
  return acceleration_at_anomaly(orbit.omega * t + phi, orbit);
}

/// Second time derivative of X(t) = x cos(chi) + y sin(chi).
template <typename Scalar>
Scalar rotated_x_accel(Scalar t, const BasicOrbit<Scalar>& orbit, const BasicPhaseSample<Scalar>& sample) {
  const PlaneVector<Scalar> acc = acceleration(t, orbit, sample.phi);
  return acc.x() * std::cos(sample.chi) + acc.y() * std::sin(sample.chi);
}

}  // namespace rydberg
