#include "plate/profile_types.hpp"

#include <cmath>
#include <limits>

namespace plate {

namespace {

// sinh(u)/u
double s1(double u) {
  if (std::abs(u) < 1e-3) {
    const double u2 = u * u;
    return 1.0 + u2 / 6.0 * (1.0 + u2 / 20.0);
  }
  return std::sinh(u) / u;
}

// 2(cosh u − 1)/u² = (sinh(u/2)/(u/2))²
double s2(double u) {
  const double t = s1(0.5 * u);
  return t * t;
}

}  // namespace

double HyperbolicProfile::xi() const {
  if (H == 0.0) return std::numeric_limits<double>::infinity();
  return slope / (2.0 * H);
}

double HyperbolicProfile::value(double x) const {
  const double k = 2.0 * H;
  if (series) {
    return slope * (x + k * k * x * x * x / 6.0) + beta_bar * x * x * (1.0 + k * k * x * x / 12.0);
  }
  return beta_bar * x * x * s2(k * x) + slope * x * s1(k * x);
}

double HyperbolicProfile::d1(double x) const {
  const double k = 2.0 * H;
  if (series) {
    return slope * (1.0 + k * k * x * x / 2.0) + beta_bar * x * (2.0 + k * k * x * x / 3.0);
  }
  return 2.0 * beta_bar * x * s1(k * x) + slope * std::cosh(k * x);
}

double HyperbolicProfile::d2(double x) const {
  const double k = 2.0 * H;
  if (series) return slope * k * k * x + beta_bar * (2.0 + k * k * x * x);
  return 2.0 * beta_bar * std::cosh(k * x) + slope * k * k * x * s1(k * x);
}

}  // namespace plate
