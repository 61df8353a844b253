#pragma once

// Brute-force verifiers. Nothing here may depend on reduced_energy or
// thickness_profile; the tests grep for it.

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "plate/errors.hpp"
#include "plate/materials.hpp"
#include "plate/profile_types.hpp"
#include "plate/surface.hpp"

namespace plate::oracle {

/// ∫_{−h}^{h} W(C_f) dx3 by Gauss-Legendre, with C_f built from the exact deformation gradient.
/// Admissibility failures are rethrown with the offending x3 appended.
[[nodiscard]] double through_thickness_energy(const SurfaceJet& jet, const MaterialModel& material,
                                              const ThicknessProfile& profile, double h,
                                              int quad_order = 16);
[[nodiscard]] double through_thickness_energy(const ParametricSurface& surface, const Vec2& x,
                                              const MaterialModel& material,
                                              const ThicknessProfile& profile, double h,
                                              int quad_order = 16);

/// energy ≈ c1 h + c3 h³, least squares on energy/h (so every sample counts equally).
struct HFit {
  std::vector<double> h_samples;  // strictly decreasing
  std::vector<double> energies;
  double c1 = 0.0;
  double c3 = 0.0;
  double residual_norm = 0.0;
};

/// Needs ≥ 4 distinct positive h spanning a decade; samples may come in any order.
[[nodiscard]] HFit fit_h_powers(std::vector<std::pair<double, double>> samples);

/// General-purpose sample set for stretching fits.
[[nodiscard]] std::vector<double> default_h_set();
/// Smaller set for h³ fits; with h_max = 2e-3 the h⁵ term biases c3 by about 1e-6 relative.
[[nodiscard]] std::vector<double> bending_h_set();

/// Fits the h-powers of h ↦ energy(h) over `hs`.
[[nodiscard]] HFit fit_energy(const std::function<double(double)>& energy,
                              const std::vector<double>& hs);

template <class Real>
struct ScalarMin {
  Real argmin;
  Real min;
};

/// Golden-section search down to an interval of width `tol`. Throws
/// BracketingError when the minimum sits at either end of the bracket.
template <class Real, class F>
[[nodiscard]] ScalarMin<Real> minimize_scalar(F&& f, Real lo, Real hi, Real tol = Real(1e-12)) {
  if (!(hi > lo)) throw BracketingError("empty bracket");
  const Real inv_phi = (std::sqrt(Real(5)) - Real(1)) / Real(2);
  const Real a0 = lo, b0 = hi;
  Real a = lo, b = hi;
  Real c = b - inv_phi * (b - a);
  Real d = a + inv_phi * (b - a);
  Real fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const Real x = (a + b) / Real(2);
  const Real fx = f(x);
  // A minimum that slid onto the original endpoint means no interior descent.
  const Real edge = Real(4) * tol + Real(1e-9) * (b0 - a0);
  if (x - a0 < edge || b0 - x < edge) {
    throw BracketingError("no interior minimum on the bracket");
  }
  return {x, fx};
}

/// Samples of an SVK through-thickness profile on a uniform grid over [−h, h].
struct OdeProfile {
  double H = 0.0;
  double lambda = 0.0;
  double mu = 1.0;
  double h = 0.0;
  double slope = 1.0;  // φ'(0)
  std::vector<double> x3;
  std::vector<double> phi;
  std::vector<double> dphi;
  double energy = 0.0;        // ∫ W_SVK over the fiber, composite Simpson
  double ode_residual = 0.0;  // max |φ'' − 4H²φ − forcing| from a 5-point stencil on the samples

  /// Sample index nearest to x3 = 0 is n_steps / 2.
  [[nodiscard]] std::size_t size() const { return x3.size(); }
};

/// Mid-surface jet of a cylinder with mean curvature H at the origin (C = I, K = 0).
[[nodiscard]] SurfaceJet isometric_jet(double H);

/// RK4 for φ'' = 4H²φ − 2λH/(2μ+λ) from x3 = 0 with φ(0) = 0, φ'(0) = slope,
/// n_steps/2 steps each way. Throws ResolutionError when n_steps < 100 or the step is too coarse.
[[nodiscard]] OdeProfile integrate_svk_ode(double H, double lambda, double mu, double h, int n_steps,
                                           double slope);

/// Shooting: minimizes the fiber energy over the initial slope. Slope bracket defaults to (0, 2).
[[nodiscard]] OdeProfile solve_svk_profile_ode(double H, double lambda, double mu, double h,
                                               int n_steps = 400,
                                               std::pair<double, double> bracket = {0.0, 2.0},
                                               double tol = 1e-12);

struct OrderEstimate {
  double slope = 0.0;
  std::vector<double> h_used;
  std::vector<double> residuals;
  std::vector<std::string> warnings;
};

/// Least-squares slope of log residual against log h. Nonpositive residuals
/// are dropped with a warning. Needs ≥ 2 usable points and 1.5 decades in h_set.
[[nodiscard]] OrderEstimate order_of_residual(const std::function<double(double)>& residual,
                                              const std::vector<double>& h_set);

/// Exact incompressible fiber: φ + Hφ² + Kφ³/3 = x3/√det C, solved by Newton from φ = x3.
[[nodiscard]] double exact_incompressible_phi(double H, double K, double detC, double x3);
/// φ' = 1 / (√det C (1 + 2Hφ + Kφ²)).
[[nodiscard]] double exact_incompressible_dphi(double H, double K, double detC, double x3);

/// Inputs of the CG profile objectives.
struct CgPoint {
  double a = 0.5;
  double b = 0.25;
  double trC = 2.0;
  double detC = 1.0;
  double H = 0.0;
  double K = 0.0;
  double b1 = 0.0;
};

/// 2 W_CG at x3 = 0 with φ'(0) = α: the h-coefficient as a function of α.
[[nodiscard]] long double cg_h1_objective(const CgPoint& p, long double alpha);
/// (2/3) × second x3-Taylor coefficient of W_CG along the fiber φ = α x3 + β x3²,
/// i.e. the h³-coefficient as a function of β.
[[nodiscard]] long double cg_h3_objective(const CgPoint& p, long double alpha, long double beta);

}  // namespace plate::oracle
