#pragma once

#include <cstddef>

namespace gkl {

/// The root x of 5^x = 2^x + 1 and the erosion exponent alpha = 1/x, with
/// the certified half-width of the final bracketing interval.
struct AlphaConstant {
  double x = 0.0;
  double alpha = 0.0;
  double tolerance = 0.0;
};

/// Bisection on f(x) = 5^x - 2^x - 1 over [0,1]; f(0) = -1, f(1) = 2 and f
/// is strictly increasing, so the bracket is valid throughout. Requires
/// tolerance > 0 (throws std::invalid_argument otherwise).
AlphaConstant solve_alpha(double tolerance);

/// The erosion bound 3 * k^alpha; 0 for k = 0.
double bound_for(std::size_t k, const AlphaConstant& alpha);

}  // namespace gkl
