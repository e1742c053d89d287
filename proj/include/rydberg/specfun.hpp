#pragma once

namespace rydberg {

/// Bessel function of the first kind J_k(x) for integer order k.
///
/// Small arguments use the ascending series; everything else goes through
/// Miller's backward recurrence normalized with J_0 + 2 sum J_2m = 1.
/// Negative orders and arguments are folded by J_{-k}(x) = (-1)^k J_k(x)
/// and J_k(-x) = (-1)^k J_k(x).
///
/// Throws std::domain_error for non-finite x or |k| > 10^6.
double bessel_j(int k, double x);

}  // namespace rydberg
