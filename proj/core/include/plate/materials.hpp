#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "plate/profile_types.hpp"
#include "plate/surface.hpp"

namespace plate {

struct Gent {
  double mu = 1.0;
  double Jm = 10.0;
};
struct NeoHookean {
  double mu = 1.0;
};
struct MooneyRivlin {
  double mu = 1.0;
  double chi = 1.0;
};
/// a I1 + b I3 − (c/2) ln I3 + d, with c = 2(a+b) and d = −(3a+b).
struct CiarletGeymonat {
  double a = 0.5;
  double b = 0.25;
  double c = 1.5;
  double d = -1.75;
};
/// (λ/2) tr²(√C_f − I) + μ tr(√C_f − I)².
struct SVK {
  double lambda = 1.0;
  double mu = 1.0;
};

using MaterialModel = std::variant<Gent, NeoHookean, MooneyRivlin, CiarletGeymonat, SVK>;

/// Lowercase model name as used in configs ("gent", "neo_hookean", ...).
[[nodiscard]] std::string material_name(const MaterialModel& m);

/// Throws DomainError when a parameter is outside its admissible range.
void validate(const MaterialModel& m);

[[nodiscard]] CiarletGeymonat make_cg(double a, double b);
/// a = μ/2, b = λ/4.
[[nodiscard]] CiarletGeymonat make_cg_lame(double lambda, double mu);
/// Rejects (c, d) that differ from 2(a+b), −(3a+b) by more than 1e-12 relative.
[[nodiscard]] CiarletGeymonat make_cg_checked(double a, double b, double c, double d);

struct Lame {
  double lambda;
  double mu;
};
/// Lamé pair of the small-strain limit: λ = 4b, μ = 2a for CG.
[[nodiscard]] Lame lame(const CiarletGeymonat& m);
[[nodiscard]] inline Lame lame(const SVK& m) { return {m.lambda, m.mu}; }

struct Invariants {
  double I1;
  double I2;
  double I3;
};

/// Principal invariants of a 3×3 matrix, I2 = ½(tr² − tr of the square).
[[nodiscard]] Invariants principal_invariants(const Mat3& C);

/// x3-polynomials of the invariants of C_f for a polynomial profile.
/// I1 keeps every term through x3²; I2 and I3 are truncated after x3².
struct InvariantSeries {
  std::array<double, 3> I1{};
  std::array<double, 3> I2{};
  std::array<double, 3> I3{};
  /// Exact invariants of C_f along the same fiber.
  std::function<Invariants(double)> exact;

  [[nodiscard]] static double eval(const std::array<double, 3>& c, double x3) {
    return c[0] + x3 * (c[1] + x3 * c[2]);
  }
  [[nodiscard]] Invariants at(double x3) const { return {eval(I1, x3), eval(I2, x3), eval(I3, x3)}; }
};

[[nodiscard]] InvariantSeries invariant_series(const SurfaceJet& jet, const PolyProfile& profile);

/// F = ∇y + φ∇ν + φ'ν⊗e3 (+ ν⊗∇φ when grad_phi is given).
[[nodiscard]] Mat3 deformation_gradient(const SurfaceJet& jet, double phi, double dphi,
                                        const std::optional<Vec2>& grad_phi = std::nullopt);

struct ExactInvariants {
  Invariants inv;
  Mat3 F;
  Mat3 Cf;
};

/// Exact invariants of C_f = FᵀF. Throws DegenerateDeformationError when det F = 0.
[[nodiscard]] ExactInvariants exact_invariants(const SurfaceJet& jet, double phi, double dphi,
                                               const std::optional<Vec2>& grad_phi = std::nullopt);
[[nodiscard]] ExactInvariants exact_invariants(const ParametricSurface& surface, const Vec2& x,
                                               const ThicknessProfile& profile, double x3);

/// Stored energy per unit reference volume. SVK needs C_f.
/// Throws AdmissibilityError outside the material's domain (Gent stiffening
/// limit, I3 ≤ 0 for CG, missing or indefinite C_f for SVK).
[[nodiscard]] double volumetric_energy(const MaterialModel& m, const Invariants& inv,
                                       const std::optional<Mat3>& Cf = std::nullopt);

/// Symmetric positive-definite square root by eigendecomposition.
[[nodiscard]] Mat3 sqrt_spd(const Mat3& C);

/// μ = n k T, J_m = 3(N − 1).
[[nodiscard]] std::pair<double, double> molecular_params(double n, double N, double k, double T);

/// (λ/2) tr²E + μ tr E² with the material's Lamé pair.
[[nodiscard]] double small_strain_energy(const std::variant<CiarletGeymonat, SVK>& m, const Mat3& E);

}  // namespace plate
