#pragma once

#include "plate/materials.hpp"
#include "plate/profile_types.hpp"
#include "plate/surface.hpp"

namespace plate {

/// Profile forced by det C_f = 1 on an area-preserving mid surface: {1, −H, (6H² − K)/3}.
/// Throws PreconditionError when |det C − 1| > det_tolerance.
[[nodiscard]] PolyProfile incompressible_profile(const SurfaceJet& jet, double det_tolerance = 1e-8);

/// Incompressible profile for any det C > 0:
/// {1/√det C, −H/det C, (6H² − K)/(3 det C^{3/2})}.
[[nodiscard]] PolyProfile incompressible_profile_general(const SurfaceJet& jet);

/// Energy-minimizing coefficients for the Ciarlet-Geymonat material; γ = 0.
[[nodiscard]] PolyProfile cg_profile(const SurfaceJet& jet, const CiarletGeymonat& m);

/// Hyperbolic SVK profile on an isometry, at the energy-minimizing family member.
/// Uses the truncated series when |H| h < svk_series_threshold.
inline constexpr double svk_series_threshold = 1e-4;
[[nodiscard]] HyperbolicProfile svk_profile(double H, double lambda, double mu, double h);

/// Slope φ'(0) of the minimizing SVK family member,
/// [λ² cosh(2Hh) + 4μ(λ+μ)] / ((2μ+λ)² cosh(2Hh)).
[[nodiscard]] double svk_slope(double H, double lambda, double mu, double h);

/// ∫_{-h}^{h} φ' dx3 by Gauss-Legendre quadrature.
[[nodiscard]] double deformed_thickness(const ThicknessProfile& profile, double h, int order = 16);

}  // namespace plate
