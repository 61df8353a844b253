#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plate/surface.hpp"

namespace plate {

/// Connector fields at one point. Vectors are planar with components in (e1, e2).
struct ConnectorFrame {
  Vec2 x = Vec2::Zero();
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  Vec2 r1 = Vec2::UnitX();
  Vec2 r2 = Vec2::UnitY();
  Vec3 l1 = Vec3::UnitX();
  Vec3 l2 = Vec3::UnitY();
  /// (∇y)⁻¹ l_i; equals r_i / λ_i for principal frames.
  Vec2 m1 = Vec2::UnitX();
  Vec2 m2 = Vec2::UnitY();
  Vec2 c = Vec2::Zero();       ///< (∇r1)ᵀ r2
  Vec2 c_star = Vec2::Zero();  ///< (∇l1)ᵀ l2
  Vec2 d1_star = Vec2::Zero(); ///< −(∇ν)ᵀ l1
  Vec2 d2_star = Vec2::Zero(); ///< −(∇ν)ᵀ l2
  Mat2 dij = Mat2::Zero();     ///< dij(i, j) = d_i* · r_j
  double c1 = 0.0;
  double c2 = 0.0;
  double c12 = 0.0;  ///< r1 · (∇c) r2; NaN on the grid boundary
  bool ill_conditioned = false;
  std::string warning;
};

/// Uniform grid of nx × ny nodes spanning `region` (boundary included).
struct FrameGridSpec {
  Rect region{0.15, 0.45, 0.15, 0.45};
  int nx = 61;
  int ny = 61;
  /// Constant rotation applied to both (r1, r2) and (l1, l2) after sign propagation.
  double gauge_angle = 0.0;
};

/// Sampled frame field with continuous signs, ready for differencing.
/// Differences are fourth order: central inside, one-sided near the boundary.
/// Curls, ∇c and ∇λ are only available at interior nodes.
class FrameGrid {
 public:
  FrameGrid(const ParametricSurface& surface, const FrameGridSpec& spec = {});

  [[nodiscard]] int nx() const { return spec_.nx; }
  [[nodiscard]] int ny() const { return spec_.ny; }
  [[nodiscard]] double dx() const { return dx_; }
  [[nodiscard]] double dy() const { return dy_; }
  [[nodiscard]] const FrameGridSpec& spec() const { return spec_; }
  /// Nodes at least two away from the boundary, where every difference
  /// used for second-level quantities is central.
  [[nodiscard]] bool interior(int i, int j) const {
    return i > 1 && j > 1 && i < nx() - 2 && j < ny() - 2;
  }

  [[nodiscard]] const ConnectorFrame& frame(int i, int j) const { return frames_[index(i, j)]; }
  [[nodiscard]] const SurfaceJet& jet(int i, int j) const { return jets_[index(i, j)]; }

  /// Rows ∇λ1, ∇λ2. Throws DomainError on the boundary.
  [[nodiscard]] Mat2 grad_lambdas(int i, int j) const;
  /// Scalar curls ∂1v2 − ∂2v1 of c, c*, d1*, d2*. Throw DomainError on the boundary.
  [[nodiscard]] double curl_c(int i, int j) const;
  [[nodiscard]] double curl_c_star(int i, int j) const;
  [[nodiscard]] double curl_d1_star(int i, int j) const;
  [[nodiscard]] double curl_d2_star(int i, int j) const;

  /// Index of the node closest to x.
  [[nodiscard]] std::pair<int, int> nearest(const Vec2& x) const;

 private:
  [[nodiscard]] std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx() + i; }
  void require_interior(int i, int j) const;

  FrameGridSpec spec_;
  double dx_ = 0.0;
  double dy_ = 0.0;
  std::vector<SurfaceJet> jets_;
  std::vector<ConnectorFrame> frames_;
};

/// Connector frame at x, computed on a small grid centred at x with spacing `spacing`.
[[nodiscard]] ConnectorFrame compute_frame(const ParametricSurface& surface, const Vec2& x,
                                           double spacing = 1e-3);

/// c* = C c / √det C − (∇λ1·r2) r1 / λ2 + (∇λ2·r1) r2 / λ1. grad_lambdas rows are ∇λ1, ∇λ2.
[[nodiscard]] Vec2 c_star_from_metric(const ConnectorFrame& frame, const SurfaceJet& jet,
                                      const Mat2& grad_lambdas);

/// K = −curl c* / (λ1 λ2). Throws DomainError on boundary nodes.
[[nodiscard]] double gauss_from_connectors(const FrameGrid& grid, int i, int j);

/// K = (1/λ2² − 1/λ1²)(c2² − c1² + c12) with λ2 = 1/λ1.
[[nodiscard]] double gauss_uniform_stretch(const ConnectorFrame& frame, double lambda1);

/// H = −½(d11/λ1 + d22/λ2), K = (d11 d22 − d12 d21)/(λ1 λ2). Principal frames only.
[[nodiscard]] std::pair<double, double> curvatures_from_d(const ConnectorFrame& frame);
/// Same quantities from d_i* and m_j = (∇y)⁻¹ l_j; valid for any gauge.
[[nodiscard]] std::pair<double, double> curvatures_from_d_gauge(const ConnectorFrame& frame);

struct CodazziReport {
  double curl_c_star = 0.0;  ///< max |curl c* − d2* × d1*|
  double curl_d1 = 0.0;      ///< max |curl d1* − c* × d2*|
  double curl_d2 = 0.0;      ///< max |curl d2* − d1* × c*|
  double curl_c = 0.0;       ///< max |curl c| (compatibility of c)
  int points = 0;

  [[nodiscard]] double max() const;
};

/// Residuals of the curl identities over the interior nodes.
[[nodiscard]] CodazziReport check_codazzi(const FrameGrid& grid);

}  // namespace plate
