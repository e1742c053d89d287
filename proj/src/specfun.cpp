#include "rydberg/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace rydberg {

namespace {

constexpr int kMaxOrder = 1'000'000;
constexpr double kSeriesLimit = 2.0;
constexpr double kBig = 1e250;

// (x/2)^k / k! sum_m (-x^2/4)^m / (m! (m+k)!). All terms share one sign
// pattern with |term| monotonically decreasing for x <= 2, so no cancellation.
double ascending_series(int k, double x) {
  const double half = 0.5 * x;
  double lead = 1.0;
  for (int i = 1; i <= k; ++i) {
    lead *= half / i;
    if (lead == 0.0) return 0.0;
  }
  const double q = -half * half;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < 200; ++m) {
    term *= q / (static_cast<double>(m) * (m + k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return lead * sum;
}

double miller(int k, double x) {
  const double top = std::max(static_cast<double>(k), x);
  int start = static_cast<int>(top + std::sqrt(160.0 * top)) + 20;
  start += start % 2;

  const double two_over_x = 2.0 / x;
  double next = 0.0;  // J_{j+1}
  double cur = 1.0;   // J_j, arbitrary scale
  double even_sum = 0.0;
  double result = 0.0;
  for (int j = start; j > 0; --j) {
    const double prev = j * two_over_x * cur - next;
    next = cur;
    cur = prev;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      next /= kBig;
      result /= kBig;
      even_sum /= kBig;
    }
    // cur now holds J_{j-1}
    if (j - 1 == k) result = cur;
    if ((j - 1) % 2 == 0 && j - 1 > 0) even_sum += cur;
  }
  const double norm = cur + 2.0 * even_sum;
  return result / norm;
}

}  // namespace

double bessel_j(int k, double x) {
  if (!std::isfinite(x)) throw std::domain_error("bessel_j: argument must be finite");
  if (std::abs(k) > kMaxOrder) throw std::domain_error("bessel_j: order out of range");

  int sign = 1;
  if (k < 0) {
    k = -k;
    if (k % 2 != 0) sign = -sign;
  }
  if (x < 0.0) {
    x = -x;
    if (k % 2 != 0) sign = -sign;
  }

  if (x == 0.0) return k == 0 ? 1.0 : 0.0;
  const double value = x <= kSeriesLimit ? ascending_series(k, x) : miller(k, x);
  return sign * value;
}

}  // namespace rydberg
