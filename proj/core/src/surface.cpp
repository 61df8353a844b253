#include "plate/surface.hpp"

#include <cmath>
#include <sstream>

#include "plate/errors.hpp"

namespace plate {

namespace {

constexpr double kUmbilicRelTol = 1e-12;

std::string format_point(const Vec2& x) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << x(0) << ", " << x(1) << ")";
  return os.str();
}

}  // namespace

ParametricSurface::ParametricSurface(std::string name, Rect domain, Map map, Gradient gradient,
                                     Hessian hessian)
    : name_(std::move(name)),
      domain_(domain),
      map_(std::move(map)),
      gradient_(std::move(gradient)),
      hessian_(std::move(hessian)) {
  if (!has_analytic_derivatives()) mode_ = FiniteDifferenceDerivatives{};
}

ParametricSurface ParametricSurface::with_mode(DerivativeMode mode) const {
  if (const auto* fd = std::get_if<FiniteDifferenceDerivatives>(&mode)) {
    if (!(fd->step > 0.0)) throw DomainError("finite-difference step must be positive");
  } else if (!has_analytic_derivatives()) {
    throw PreconditionError("surface '" + name_ + "' has no analytic derivatives");
  }
  ParametricSurface copy = *this;
  copy.mode_ = mode;
  return copy;
}

ParametricSurface ParametricSurface::with_domain(Rect domain) const {
  ParametricSurface copy = *this;
  copy.domain_ = domain;
  return copy;
}

double ParametricSurface::required_margin() const {
  if (const auto* fd = std::get_if<FiniteDifferenceDerivatives>(&mode_)) return 2.0 * fd->step;
  return 0.0;
}

Mat32 ParametricSurface::gradient(const Vec2& x) const {
  if (const auto* fd = std::get_if<FiniteDifferenceDerivatives>(&mode_)) {
    const double d = fd->step;
    Mat32 g;
    for (int i = 0; i < 2; ++i) {
      Vec2 e = Vec2::Zero();
      e(i) = d;
      g.col(i) = (map_(x + e) - map_(x - e)) / (2.0 * d);
    }
    return g;
  }
  return gradient_(x);
}

Hess32 ParametricSurface::hessian(const Vec2& x) const {
  if (const auto* fd = std::get_if<FiniteDifferenceDerivatives>(&mode_)) {
    const double d = fd->step;
    Hess32 h;
    for (int j = 0; j < 2; ++j) {
      Vec2 e = Vec2::Zero();
      e(j) = d;
      h[j] = (gradient(x + e) - gradient(x - e)) / (2.0 * d);
    }
    return h;
  }
  return hessian_(x);
}

StretchFrame principal_stretches(const Mat2& C) {
  const double a = C(0, 0);
  const double b = 0.5 * (C(0, 1) + C(1, 0));
  const double c = C(1, 1);
  const double mean = 0.5 * (a + c);
  const double disc = std::hypot(0.5 * (a - c), b);
  const double e1 = mean + disc;
  const double e2 = mean - disc;
  if (!(e2 > 0.0)) throw DegenerateImmersionError("right Cauchy-Green tensor is not positive definite");

  StretchFrame f;
  f.lambda1 = std::sqrt(e1);
  f.lambda2 = std::sqrt(e2);
  if (e1 - e2 <= kUmbilicRelTol * (e1 + e2)) {
    f.umbilic = true;
    f.r1 = Vec2::UnitX();
  } else {
    const Vec2 v1(b, e1 - a);
    const Vec2 v2(e1 - c, b);
    Vec2 v = v1.squaredNorm() >= v2.squaredNorm() ? v1 : v2;
    v.normalize();
    if (v(0) < 0.0 || (v(0) == 0.0 && v(1) < 0.0)) v = -v;
    f.r1 = v;
  }
  f.r2 = perp(f.r1);
  return f;
}

SurfaceJet assemble_jet(const Vec2& x, const Mat32& grad_y, const Hess32& hess_y) {
  SurfaceJet j;
  j.x = x;
  j.grad_y = grad_y;
  j.hess_y = hess_y;
  j.a1 = grad_y.col(0);
  j.a2 = grad_y.col(1);

  const Vec3 n = j.a1.cross(j.a2);
  const double area = n.norm();
  if (!(area > 1e-14 * j.a1.norm() * j.a2.norm()) || area == 0.0) {
    throw DegenerateImmersionError("rank ∇y < 2 at " + format_point(x));
  }
  j.normal = n / area;

  const Mat3 tangent_proj = Mat3::Identity() - j.normal * j.normal.transpose();
  for (int k = 0; k < 2; ++k) {
    const Vec3 dn = hess_y[k].col(0).cross(j.a2) + j.a1.cross(hess_y[k].col(1));
    j.grad_nu.col(k) = tangent_proj * dn / area;
  }

  j.C = grad_y.transpose() * grad_y;
  j.B = grad_y * grad_y.transpose();
  j.trC = j.C.trace();
  j.detC = j.C.determinant();

  const StretchFrame sf = principal_stretches(j.C);
  j.lambda1 = sf.lambda1;
  j.lambda2 = sf.lambda2;
  j.r1 = sf.r1;
  j.r2 = sf.r2;
  j.umbilic = sf.umbilic;
  j.l1 = grad_y * j.r1 / j.lambda1;
  j.l2 = grad_y * j.r2 / j.lambda2;

  const Eigen::Matrix<double, 2, 3> pinv = j.C.inverse() * grad_y.transpose();
  j.curvature = j.grad_nu * pinv;

  const Vec3 gr1 = j.grad_nu * j.r1 / j.lambda1;
  const Vec3 gr2 = j.grad_nu * j.r2 / j.lambda2;
  j.shape_op << j.l1.dot(gr1), j.l1.dot(gr2), j.l2.dot(gr1), j.l2.dot(gr2);

  j.H = 0.5 * j.shape_op.trace();
  j.K = j.shape_op.determinant();
  j.b1 = (j.B * j.curvature).trace();
  return j;
}

SurfaceJet evaluate_jet(const ParametricSurface& surface, const Vec2& x) {
  if (!surface.domain().contains(x, surface.required_margin())) {
    throw DomainError("point " + format_point(x) + " outside the domain of surface '" +
                      surface.name() + "'");
  }
  return assemble_jet(x, surface.gradient(x), surface.hessian(x));
}

std::pair<double, double> appendix_H_K(const SurfaceJet& jet, double det_tolerance) {
  if (std::abs(jet.detC - 1.0) > det_tolerance) {
    std::ostringstream os;
    os << "Cartesian H, K formulae assume an area-preserving map (det C = 1); got det C = "
       << jet.detC;
    throw PreconditionError(os.str());
  }
  const Vec3& a1 = jet.a1;
  const Vec3& a2 = jet.a2;
  const Vec3 nu = a1.cross(a2);
  // ∂_j a_i = hess_y[j].col(i)
  const double n11 = nu.dot(jet.hess_y[0].col(0));
  const double n12 = nu.dot(jet.hess_y[1].col(0));  // ν·(∇a1)e2
  const double n21 = nu.dot(jet.hess_y[0].col(1));  // ν·(∇a2)e1
  const double n22 = nu.dot(jet.hess_y[1].col(1));
  const double two_h = a1.dot(a2) * (n12 + n21) - a1.squaredNorm() * n22 - a2.squaredNorm() * n11;
  const double k = n11 * n22 - n21 * n12;
  return {0.5 * two_h, k};
}

}  // namespace plate
