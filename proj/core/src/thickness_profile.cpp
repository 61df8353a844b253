#include "plate/thickness_profile.hpp"

#include <cmath>
#include <sstream>

#include "plate/errors.hpp"
#include "plate/quadrature.hpp"

namespace plate {

PolyProfile incompressible_profile(const SurfaceJet& jet, double det_tolerance) {
  if (std::abs(jet.detC - 1.0) > det_tolerance) {
    std::ostringstream os;
    os << "incompressible profile needs det C = 1 (got " << jet.detC
       << "); use incompressible_profile_general";
    throw PreconditionError(os.str());
  }
  return {1.0, -jet.H, (6.0 * jet.H * jet.H - jet.K) / 3.0};
}

PolyProfile incompressible_profile_general(const SurfaceJet& jet) {
  const double d = jet.detC;
  if (!(d > 0.0)) throw DomainError("det C must be positive");
  const double s = std::sqrt(d);
  return {1.0 / s, -jet.H / d, (6.0 * jet.H * jet.H - jet.K) / (3.0 * d * s)};
}

PolyProfile cg_profile(const SurfaceJet& jet, const CiarletGeymonat& m) {
  if (!(m.a > 0.0 && m.b > 0.0)) throw DomainError("Ciarlet-Geymonat a, b must be positive");
  if (!(jet.detC > 0.0)) throw DomainError("det C must be positive");
  const double D = m.a + m.b * jet.detC;
  const double ab = m.a + m.b;
  PolyProfile p;
  p.alpha = std::sqrt(ab / D);
  p.beta = -m.a / (8.0 * D) * jet.b1 + ab * (m.a - 4.0 * m.b * jet.detC) / (4.0 * D * D) * jet.H;
  p.gamma = 0.0;
  return p;
}

double svk_slope(double H, double lambda, double mu, double h) {
  const double c = std::cosh(2.0 * H * h);
  const double s = 2.0 * mu + lambda;
  return (lambda * lambda * c + 4.0 * mu * (lambda + mu)) / (s * s * c);
}

HyperbolicProfile svk_profile(double H, double lambda, double mu, double h) {
  if (!(mu > 0.0) || !(lambda >= 0.0)) throw DomainError("SVK needs mu > 0 and lambda >= 0");
  if (!(h > 0.0)) throw DomainError("half thickness h must be positive");
  HyperbolicProfile p;
  p.H = H;
  p.lambda = lambda;
  p.mu = mu;
  p.h = h;
  p.beta_bar = -lambda * H / (2.0 * mu + lambda);
  p.slope = svk_slope(H, lambda, mu, h);
  p.series = std::abs(H) * h < svk_series_threshold;
  return p;
}

double deformed_thickness(const ThicknessProfile& profile, double h, int order) {
  if (!(h > 0.0)) throw DomainError("half thickness h must be positive");
  const GaussLegendreRule rule = gauss_legendre(order);
  return integrate(rule, [&](double x3) { return profile_d1(profile, x3); }, -h, h);
}

}  // namespace plate
