#pragma once

#include <array>

#include <Eigen/Dense>

namespace plate {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat32 = Eigen::Matrix<double, 3, 2>;

/// Second gradient of a map R^2 -> R^3. `hess[j].col(i)` is ∂_j ∂_i y,
/// i.e. `hess[j]` is the derivative of ∇y along x_j.
using Hess32 = std::array<Mat32, 2>;

/// Scalar 2D cross product a × b = a1 b2 − a2 b1.
inline double cross2(const Vec2& a, const Vec2& b) { return a(0) * b(1) - a(1) * b(0); }

/// Rotation of a planar vector by +π/2 (e3 × v).
inline Vec2 perp(const Vec2& v) { return {-v(1), v(0)}; }

}  // namespace plate
