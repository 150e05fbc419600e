#include "gkl/alpha.hpp"

#include <cmath>
#include <stdexcept>

namespace gkl {

AlphaConstant solve_alpha(double tolerance) {
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  auto f = [](double x) { return std::pow(5.0, x) - std::pow(2.0, x) - 1.0; };
  double lo = 0.0;  // f(0) = -1
  double hi = 1.0;  // f(1) = 2
  while ((hi - lo) / 2.0 > tolerance) {
    double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;  // bracket is as tight as doubles get
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  double x = lo + (hi - lo) / 2.0;
  return {x, 1.0 / x, (hi - lo) / 2.0};
}

double bound_for(std::size_t k, const AlphaConstant& alpha) {
  if (k == 0) return 0.0;
  return 3.0 * std::pow(static_cast<double>(k), alpha.alpha);
}

}  // namespace gkl
