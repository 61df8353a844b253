#pragma once

#include <string>
#include <vector>

#include "plate/materials.hpp"
#include "plate/quadrature.hpp"
#include "plate/surface.hpp"

namespace plate {

/// Per-point contents: the energy per unit area is h·stretching + h³·bending.
struct EnergyContents {
  double stretching = 0.0;
  double bending = 0.0;
  std::string formula_id;
};

namespace formula {
inline constexpr const char* gent_unit_det = "gent_unit_det";
inline constexpr const char* gent_general_det = "gent_general_det";
inline constexpr const char* neo_hookean_limit = "neo_hookean_limit";
inline constexpr const char* cg_proof_path = "cg_proof_path";
inline constexpr const char* cg_small_strain = "cg_small_strain";
inline constexpr const char* svk_isometry = "svk_isometry";
}  // namespace formula

/// Gent contents. |det C − 1| ≤ unit_det_tolerance selects the det C = 1 formulas,
/// otherwise the general-det C ones. Throws AdmissibilityError at the stiffening limit.
[[nodiscard]] EnergyContents gent_contents(const SurfaceJet& jet, double mu, double Jm,
                                           double unit_det_tolerance = 1e-8);
/// Force one branch regardless of det C (for branch-consistency checks).
[[nodiscard]] EnergyContents gent_contents_unit_det(const SurfaceJet& jet, double mu, double Jm);
[[nodiscard]] EnergyContents gent_contents_general(const SurfaceJet& jet, double mu, double Jm);

/// J_m → ∞ limit of the Gent contents (the neo-Hookean plate).
[[nodiscard]] EnergyContents neo_hookean_contents(const SurfaceJet& jet, double mu);

/// ŵ_s = −μ J_m ln(1 − (λ1 − 1/λ1)²/J_m) for det C = 1.
[[nodiscard]] double gent_stretching_reduced(double mu, double Jm, double lambda1);
/// ŵ_b = (16/3) μ H², the bending content on isometries as J_m → ∞.
[[nodiscard]] double gent_bending_isometric(double mu, double H);

/// Ciarlet-Geymonat contents: w1 from the closed-form α and w3 by substituting
/// the closed-form α, β into the β-quadratic pre-form of w3.
[[nodiscard]] EnergyContents cg_contents(const SurfaceJet& jet, const CiarletGeymonat& m);

/// Fully expanded closed forms in the (a, b) and Lamé parametrizations.
[[nodiscard]] double cg_w1_closed(const SurfaceJet& jet, const CiarletGeymonat& m);
[[nodiscard]] double cg_w3_closed(const SurfaceJet& jet, const CiarletGeymonat& m);
[[nodiscard]] double cg_w1_lame(const SurfaceJet& jet, double lambda, double mu);
[[nodiscard]] double cg_w3_lame(const SurfaceJet& jet, double lambda, double mu);

/// The w3 pre-form as a function of β (α already at its optimum).
[[nodiscard]] double cg_w3_preform(const SurfaceJet& jet, const CiarletGeymonat& m, double beta);

/// Small-strain forms with E = ½(C − I2).
[[nodiscard]] EnergyContents cg_small_strain_contents(const Mat2& E, double H, double K, double lambda,
                                                      double mu);

/// Bending on isometries: (16/3) μ(λ+μ)/(2μ+λ) H² − (4/3) μ K; stretching 0.
[[nodiscard]] EnergyContents svk_content(double H, double K, double lambda, double mu);

/// w_φ = [A cos²φ + B sin²φ]² with λ2 = 1/λ1.
[[nodiscard]] double eigenframe_coupling(double kappa1, double kappa2, double lambda1, double angle);

/// {0, π/2} plus the interior stationary angle in (0, π/2) when it exists.
[[nodiscard]] std::vector<double> coupling_stationary_angles(double kappa1, double kappa2,
                                                             double lambda1);

/// Contents per jet for any material with a closed form (Gent, NeoHookean, CG, SVK).
/// MooneyRivlin has none and throws PreconditionError.
[[nodiscard]] EnergyContents material_contents(const SurfaceJet& jet, const MaterialModel& m);

/// Area integrals of the two contents; total = h·total_stretch + h³·total_bend.
struct IntegratedEnergy {
  double total_stretch = 0.0;
  double total_bend = 0.0;
  double total = 0.0;
};

/// Area integral of the contents. Admissibility errors are rethrown with the node attached.
[[nodiscard]] IntegratedEnergy integrate_contents(const ParametricSurface& surface,
                                                  const MaterialModel& m, double h,
                                                  const AreaGrid& grid);

}  // namespace plate
