#pragma once

#include <variant>

namespace plate {

/// φ(x3) = α x3 + β x3² + γ x3³.
struct PolyProfile {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;

  [[nodiscard]] double value(double x3) const { return x3 * (alpha + x3 * (beta + x3 * gamma)); }
  [[nodiscard]] double d1(double x3) const { return alpha + x3 * (2.0 * beta + 3.0 * gamma * x3); }
  [[nodiscard]] double d2(double x3) const { return 2.0 * beta + 6.0 * gamma * x3; }
};

/// Member of the family φ = β̄ x3² S2(2H x3) + s x3 S1(2H x3), with
/// S1(u) = sinh(u)/u and S2(u) = 2(cosh u − 1)/u². The slope s = φ'(0) equals 2Hξ
/// for the family parameter ξ; β̄ = −λH/(2μ+λ) is fixed by the material.
///
/// `series` selects the truncated expansion used when |H|h is tiny.
struct HyperbolicProfile {
  double H = 0.0;
  double lambda = 0.0;
  double mu = 1.0;
  double h = 0.0;
  double slope = 1.0;
  double beta_bar = 0.0;
  bool series = false;

  /// ξ = s / (2H); infinite when H = 0.
  [[nodiscard]] double xi() const;
  [[nodiscard]] double value(double x3) const;
  [[nodiscard]] double d1(double x3) const;
  [[nodiscard]] double d2(double x3) const;
};

using ThicknessProfile = std::variant<PolyProfile, HyperbolicProfile>;

[[nodiscard]] inline double profile_value(const ThicknessProfile& p, double x3) {
  return std::visit([x3](const auto& q) { return q.value(x3); }, p);
}
[[nodiscard]] inline double profile_d1(const ThicknessProfile& p, double x3) {
  return std::visit([x3](const auto& q) { return q.d1(x3); }, p);
}

}  // namespace plate
