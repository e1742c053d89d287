#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "rydberg/fourier.hpp"
#include "rydberg/kepler.hpp"
#include "rydberg/semiclassical.hpp"
#include "rydberg/specfun.hpp"

using namespace rydberg;
constexpr double pi = std::numbers::pi;

namespace {

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    nodes[i] = z;
    weights[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

// 2D quadrature of conj(Y_ll) sin(theta) e^{i phi} Y_{l-1,l-1} dOmega on a
// grid x grid mesh (Gauss-Legendre in cos(theta), uniform in phi), with
// both harmonics normalized numerically on the same mesh.
double angular_factor_quadrature(int l, int grid = 400) {
  std::vector<double> u, w;
  gauss_legendre(grid, u, w);
  const double dp = 2.0 * pi / grid;
  auto norm2 = [&](int m) {
    double s = 0.0;
    for (int i = 0; i < grid; ++i) s += w[i] * std::pow(1.0 - u[i] * u[i], m);
    return s * 2.0 * pi;
  };
  const double cl = 1.0 / std::sqrt(norm2(l));
  const double cm = 1.0 / std::sqrt(norm2(l - 1));
  std::complex<double> sum = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double s = std::sqrt(1.0 - u[i] * u[i]);
    const double radial = w[i] * cl * std::pow(s, l) * s * cm * std::pow(s, l - 1);
    for (int j = 0; j < grid; ++j) {
      const double ph = (j + 0.5) * dp;
      sum += radial * std::polar(1.0, -l * ph) * std::polar(1.0, ph) * std::polar(1.0, (l - 1) * ph);
    }
  }
  sum *= dp;
  return sum.real();
}

}  // namespace

TEST_CASE("linearized energy") {
  CHECK(linearized_energy(100, 100) == -0.5 / 10000.0);
  CHECK(linearized_energy(101, 100) == doctest::Approx(-1.0 / 20000.0 + 1e-6).epsilon(1e-15));
  for (int n0 : {50, 100, 400}) {
    for (int n = n0 - n0 / 10; n <= n0 + n0 / 10; ++n) {
      const double exact = -0.5 / (static_cast<double>(n) * n);
      const double dn = n - n0;
      CHECK(std::abs(linearized_energy(n, n0) - exact) <= 3.0 * dn * dn / std::pow(n0, 4) + 1e-18);
    }
  }
  CHECK_THROWS_AS(linearized_energy(1, 0), std::domain_error);
}

TEST_CASE("radial matrix element") {
  CHECK(radial_matelem_classical(10, 9, 0.0) == doctest::Approx(-50.0));
  // mpmath: 100^2/2 (J_2(0.6) - J_0(0.6)) = -4341.6988339068454305
  CHECK(radial_matelem_classical(100, 99, 0.6) == doctest::Approx(-4341.6988339068454305).epsilon(1e-13));
  CHECK_THROWS_AS(radial_matelem_classical(5, 5, 0.3), std::domain_error);
  CHECK_THROWS_AS(radial_matelem_classical(5, 4, 1.0), std::domain_error);
}

TEST_CASE("radial element equals minus x_k on the orbit a = n^2") {
  for (int n : {30, 100}) {
    for (int np = n - 12; np <= n + 12; ++np) {
      if (np == n) continue;
      for (double eps : {0.0, 0.3, 0.6, 0.9}) {
        const OrbitParams orbit{static_cast<double>(n) * n, 1.0, eps};
        const double radial = radial_matelem_classical(n, np, eps);
        const double xk = coeff_x(n - np, orbit);
        CHECK(std::abs(radial + xk) <= 1e-12 * std::max(1.0, std::abs(xk)));
      }
    }
  }
}

TEST_CASE("x transition element") {
  const OrbitParams circ{1.0, 1.0, 0.0};
  CHECK(x_transition_element(20, 19, circ) == doctest::Approx(0.5));
  const OrbitParams ecc{1.0, 1.0, 0.8};
  CHECK(x_transition_element(40, 35, ecc) == coeff_x(5, ecc));
  CHECK(x_transition_element(35, 40, ecc) == doctest::Approx(x_transition_element(40, 35, ecc)).epsilon(1e-13));
  CHECK_THROWS_AS(x_transition_element(3, 3, ecc), std::domain_error);
}

TEST_CASE("acceleration matrix element") {
  const RydbergState initial{100, 100 - 1};
  const OrbitCorrespondence c = make_correspondence(initial, RydbergState{99, 98});
  CHECK(c.omega0 == 1e-6);
  const OrbitParams circ{1.0, c.omega0, 0.0};
  const auto a0 = accel_matelem(100, 99, 0.0, c, circ);
  CHECK(a0.real() == doctest::Approx(-c.omega0 * c.omega0 * 0.5));
  CHECK(a0.imag() == 0.0);
  const OrbitParams ecc{1.0, c.omega0, 0.8};
  const double mag = std::abs(accel_matelem(100, 95, 0.0, c, ecc));
  for (double t : {1.0, 1e3, 7.7e5}) CHECK(std::abs(accel_matelem(100, 95, t, c, ecc)) == doctest::Approx(mag));
  CHECK_THROWS_AS(accel_matelem(3, 3, 0.0, c, ecc), std::domain_error);
}

TEST_CASE("Parseval: summed |accel_matelem|^2 equals <a_x^2>") {
  OrbitCorrespondence c;
  c.n0 = 1;
  c.omega0 = 1.0;
  c.epsilon = 0.8;
  const OrbitParams orbit{1.0, 1.0, 0.8};
  double sum = 0.0;
  const int n = 1000;
  for (int np = n - 200; np <= n + 200; ++np) {
    if (np != n) sum += std::norm(accel_matelem(n, np, 0.3, c, orbit));
  }
  constexpr int nodes = 8192;
  double mean_square = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double ax = acceleration_at_anomaly(2.0 * pi * j / nodes, orbit).x();
    mean_square += ax * ax;
  }
  mean_square /= nodes;
  CHECK(std::abs(sum - mean_square) <= 0.01 * mean_square);
}

TEST_CASE("angular factor") {
  for (int l = 1; l <= 20; ++l) CHECK(std::abs(angular_factor(l) - angular_factor_quadrature(l)) <= 1e-8);
  CHECK(angular_factor(1) == doctest::Approx(0.81649658092772603273).epsilon(1e-15));
  CHECK(std::abs(angular_factor(50) - angular_factor(49)) <= 0.01 * angular_factor(50));
  CHECK(std::abs(angular_factor(10000) - angular_factor(1000)) <= 1e-3);
  for (int l = 2; l < 500; ++l) CHECK(angular_factor(l + 1) > angular_factor(l));
  CHECK_THROWS_AS(angular_factor(0), std::domain_error);
}

TEST_CASE("eccentricity conventions") {
  const RydbergState s{100, 60};
  CHECK(s.eccentricity() == doctest::Approx(0.8));
  CHECK(transition_eccentricity(s, RydbergState{99, 59}) == doctest::Approx(0.8));
  const double avg = transition_eccentricity(s, RydbergState{99, 59}, EccentricityMode::average_energy);
  CHECK(std::abs(avg - 0.8) < 0.01);
  CHECK(avg != 0.8);
  CHECK(transition_eccentricity(s, s, EccentricityMode::average_energy) == doctest::Approx(0.8));
  CHECK_THROWS_AS((RydbergState{5, 5}.validate()), std::domain_error);

  const OrbitCorrespondence c = make_correspondence(s, RydbergState{99, 59});
  const OrbitParams orbit = c.orbit();
  CHECK(orbit.a == 10000.0);
  CHECK(orbit.omega == 1e-6);
  CHECK(orbit.epsilon == doctest::Approx(0.8));
}
