#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rydberg/oscillator.hpp"

using namespace rydberg;
constexpr double pi = std::numbers::pi;

TEST_CASE("classical field") {
  CHECK(classical_field_x(0.0, 1.0, 1.0) == -1.0);
  CHECK(classical_field_x(pi / 2.0, 1.0, 2.0) == doctest::Approx(4.0));
  CHECK(std::abs(classical_field_x(pi / 4.0, 1.0, 2.0)) < 1e-15);
}

TEST_CASE("exact first-order correlator") {
  OscillatorState s{0, 2.0, 0.5, 1.0};
  const double w4x2 = std::pow(2.0, 4) * 0.25;
  CHECK(first_corr_exact(0.0, s).real() == w4x2 / 4.0);
  CHECK(first_corr_exact(0.0, s).imag() == 0.0);
  s.n = 10;
  // n + (n + 1/2) = 41/2 for n = 10
  CHECK(first_corr_exact(0.0, s).real() == 41.0 / 4.0 * w4x2);
  const auto value = first_corr_exact(0.3, s);
  CHECK(value.imag() == doctest::Approx(-0.5 * w4x2 * 0.5 * std::sin(0.6)));
}

TEST_CASE("first-order correlator approaches the classical form at large n") {
  for (int n : {10, 100, 1000, 100000}) {
    const OscillatorState s{n, 1.0, 1.0, 1.0};
    const double classical = n * 1.0;
    const double rel = std::abs(first_corr_exact(0.0, s).real() - classical) / classical;
    CHECK(rel <= 1.0 / (2.0 * n) + 1e-15);
    for (double tau : {0.4, 1.1, 2.9}) {
      CHECK(first_corr_exact(tau, s).real() / n == doctest::Approx(std::cos(tau)).epsilon(1.0 / n));
    }
  }
}

TEST_CASE("large-n second-order correlator") {
  const OscillatorState s{12, 1.0, 1.0, 1.0};
  CHECK(second_corr_large_n(0.0, s) == 2.0 * 144.0);
  CHECK(second_corr_large_n(pi / 2.0, s) == 0.0);
  CHECK(second_corr_large_n(pi, s) == doctest::Approx(2.0 * 144.0));
  for (double tau = 0.0; tau < 10.0; tau += 0.37) {
    CHECK(second_corr_large_n(tau, s) >= 0.0);
    CHECK(second_corr_large_n(tau + pi, s) == doctest::Approx(second_corr_large_n(tau, s)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(second_corr_large_n(0.0, OscillatorState{3, 1.0, 1.0, 1.0}), std::domain_error);
}

TEST_CASE("oscillator state validation") {
  CHECK_THROWS_AS(first_corr_exact(0.0, OscillatorState{-1, 1.0, 1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(first_corr_exact(0.0, OscillatorState{1, 0.0, 1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(first_corr_exact(0.0, OscillatorState{1, 1.0, 0.0, 1.0}), std::domain_error);
}
