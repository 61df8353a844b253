#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>

#include "plate/types.hpp"

namespace plate {

/// Axis-aligned rectangle [x1_min, x1_max] × [x2_min, x2_max] in the reference plane.
struct Rect {
  double x1_min = -0.5;
  double x1_max = 0.5;
  double x2_min = -0.5;
  double x2_max = 0.5;

  [[nodiscard]] bool contains(const Vec2& x, double margin = 0.0) const {
    return x(0) >= x1_min + margin && x(0) <= x1_max - margin && x(1) >= x2_min + margin &&
           x(1) <= x2_max - margin;
  }
  [[nodiscard]] Vec2 center() const { return {0.5 * (x1_min + x1_max), 0.5 * (x2_min + x2_max)}; }
  [[nodiscard]] double area() const { return (x1_max - x1_min) * (x2_max - x2_min); }
};

struct AnalyticDerivatives {};

/// Central differences; second derivatives by nested first differences.
struct FiniteDifferenceDerivatives {
  double step = 1e-4;
};

using DerivativeMode = std::variant<AnalyticDerivatives, FiniteDifferenceDerivatives>;

/// A mid-surface deformation y : S -> R^3 with access to its first and second derivatives.
///
/// Analytic derivatives are optional; a surface without them can only be used
/// in finite-difference mode.
class ParametricSurface {
 public:
  using Map = std::function<Vec3(const Vec2&)>;
  using Gradient = std::function<Mat32(const Vec2&)>;
  using Hessian = std::function<Hess32(const Vec2&)>;

  ParametricSurface(std::string name, Rect domain, Map map, Gradient gradient = {},
                    Hessian hessian = {});

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const Rect& domain() const { return domain_; }
  [[nodiscard]] const DerivativeMode& mode() const { return mode_; }
  [[nodiscard]] bool is_analytic() const { return std::holds_alternative<AnalyticDerivatives>(mode_); }
  [[nodiscard]] bool has_analytic_derivatives() const { return gradient_ && hessian_; }

  /// Copy of this surface with a different derivative mode.
  [[nodiscard]] ParametricSurface with_mode(DerivativeMode mode) const;
  /// Copy of this surface restricted to / extended to another domain.
  [[nodiscard]] ParametricSurface with_domain(Rect domain) const;

  /// Distance from the boundary a point needs for the current derivative mode.
  [[nodiscard]] double required_margin() const;

  [[nodiscard]] Vec3 point(const Vec2& x) const { return map_(x); }
  [[nodiscard]] Mat32 gradient(const Vec2& x) const;
  [[nodiscard]] Hess32 hessian(const Vec2& x) const;

 private:
  std::string name_;
  Rect domain_;
  Map map_;
  Gradient gradient_;
  Hessian hessian_;
  DerivativeMode mode_ = AnalyticDerivatives{};
};

/// All point-local geometry of the deformed mid surface at a reference point x.
struct SurfaceJet {
  Vec2 x = Vec2::Zero();
  Mat32 grad_y = Mat32::Zero();  ///< ∇y, columns a1, a2
  Hess32 hess_y{Mat32::Zero(), Mat32::Zero()};
  Vec3 a1 = Vec3::Zero();
  Vec3 a2 = Vec3::Zero();
  Vec3 normal = Vec3::Zero();     ///< ν = a1×a2 / |a1×a2|
  Mat32 grad_nu = Mat32::Zero();  ///< ∇ν
  Mat2 C = Mat2::Identity();      ///< right Cauchy-Green tensor on the reference plane
  Mat3 B = Mat3::Zero();          ///< left Cauchy-Green tensor, (∇y)(∇y)^T
  double lambda1 = 1.0;           ///< λ1 ≥ λ2 > 0
  double lambda2 = 1.0;
  Vec2 r1 = Vec2::UnitX();  ///< right principal directions, e3 = r1 × r2
  Vec2 r2 = Vec2::UnitY();
  Vec3 l1 = Vec3::UnitX();  ///< left principal directions, ν = l1 × l2
  Vec3 l2 = Vec3::UnitY();
  Mat3 curvature = Mat3::Zero();  ///< ∇_s ν = (∇ν)(∇y)^+ as a 3×3 tensor
  Mat2 shape_op = Mat2::Zero();   ///< ∇_s ν in the (l1, l2) frame
  double H = 0.0;                 ///< ½ tr ∇_s ν
  double K = 0.0;                 ///< det ∇_s ν
  double b1 = 0.0;                ///< tr(B ∇_s ν)
  double trC = 2.0;
  double detC = 1.0;
  bool umbilic = false;  ///< λ1 = λ2 to round-off; r1 = e1 by convention
};

/// Agreement tolerances used by cross-checks (analytic vs finite-difference mode).
struct GeometryTolerances {
  double analytic = 1e-8;
  double finite_difference = 1e-4;
  /// Tolerance on |det C − 1| for formulas that assume area preservation.
  double unit_det = 1e-8;

  [[nodiscard]] double for_surface(const ParametricSurface& s) const {
    return s.is_analytic() ? analytic : finite_difference;
  }
};

/// Principal stretches and right principal directions of a 2×2 SPD tensor.
/// Ordered λ1 ≥ λ2; r1·e1 ≥ 0 (r1 = e2 when r1 ⟂ e1); r1 = e1 at umbilics.
struct StretchFrame {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  Vec2 r1 = Vec2::UnitX();
  Vec2 r2 = Vec2::UnitY();
  bool umbilic = false;
};
[[nodiscard]] StretchFrame principal_stretches(const Mat2& C);

/// Builds the full jet from ∇y and ∇²y. Throws DegenerateImmersionError when rank ∇y < 2.
[[nodiscard]] SurfaceJet assemble_jet(const Vec2& x, const Mat32& grad_y, const Hess32& hess_y);

/// Evaluates the jet of `surface` at x. Throws DomainError when x is outside the
/// domain (or closer than 2·step to its boundary in finite-difference mode).
[[nodiscard]] SurfaceJet evaluate_jet(const ParametricSurface& surface, const Vec2& x);

/// Mean and Gaussian curvature from the Cartesian formulae valid for
/// area-preserving maps, using only a1, a2, ν = a1 × a2 and ∇²y.
/// Throws PreconditionError when |det C − 1| exceeds `det_tolerance`.
[[nodiscard]] std::pair<double, double> appendix_H_K(const SurfaceJet& jet,
                                                     double det_tolerance = 1e-8);

}  // namespace plate
