#include "plate/connectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "plate/errors.hpp"

namespace plate {

namespace {

// d/dx along one grid axis at position k of n samples spaced h apart:
// fourth-order stencils, central where possible and one-sided near the ends.
template <class F>
auto axis_diff(F&& f, int k, int n, double h) {
  const double s = 1.0 / (12.0 * h);
  if (k == 0) return ((-25.0 * f(0) + 48.0 * f(1) - 36.0 * f(2) + 16.0 * f(3) - 3.0 * f(4)) * s).eval();
  if (k == 1) return ((-3.0 * f(0) - 10.0 * f(1) + 18.0 * f(2) - 6.0 * f(3) + f(4)) * s).eval();
  if (k == n - 1) {
    return ((25.0 * f(n - 1) - 48.0 * f(n - 2) + 36.0 * f(n - 3) - 16.0 * f(n - 4) + 3.0 * f(n - 5)) * s).eval();
  }
  if (k == n - 2) {
    return ((3.0 * f(n - 1) + 10.0 * f(n - 2) - 18.0 * f(n - 3) + 6.0 * f(n - 4) - f(n - 5)) * s).eval();
  }
  return ((f(k - 2) - 8.0 * f(k - 1) + 8.0 * f(k + 1) - f(k + 2)) * s).eval();
}

// Partial derivative of a frame field along x1 (axis 0) or x2 (axis 1).
template <class Frames, class Get>
auto field_diff(const Frames& frames, int nx, int ny, double dx, double dy, int i, int j, Get get,
                int axis) {
  if (axis == 0) {
    return axis_diff([&](int k) { return get(frames[static_cast<std::size_t>(j) * nx + k]); }, i, nx, dx);
  }
  return axis_diff([&](int k) { return get(frames[static_cast<std::size_t>(k) * nx + i]); }, j, ny, dy);
}

}  // namespace

FrameGrid::FrameGrid(const ParametricSurface& surface, const FrameGridSpec& spec) : spec_(spec) {
  if (spec.nx < 5 || spec.ny < 5) throw DomainError("frame grid needs at least 5 nodes per axis");
  const Rect& r = spec.region;
  dx_ = (r.x1_max - r.x1_min) / (spec.nx - 1);
  dy_ = (r.x2_max - r.x2_min) / (spec.ny - 1);
  if (!(dx_ > 0.0 && dy_ > 0.0)) throw DomainError("frame grid region is empty");

  const std::size_t n = static_cast<std::size_t>(spec.nx) * spec.ny;
  jets_.reserve(n);
  frames_.resize(n);
  for (int j = 0; j < ny(); ++j) {
    for (int i = 0; i < nx(); ++i) {
      jets_.push_back(evaluate_jet(surface, Vec2(r.x1_min + i * dx_, r.x2_min + j * dy_)));
    }
  }

  // Sign propagation: along the first row from the seed, then up each column.
  std::vector<Vec2> r1(n);
  for (int j = 0; j < ny(); ++j) {
    for (int i = 0; i < nx(); ++i) {
      Vec2 v = jets_[index(i, j)].r1;
      if (i > 0 || j > 0) {
        const Vec2& ref = j == 0 ? r1[index(i - 1, 0)] : r1[index(i, j - 1)];
        if (v.dot(ref) < 0.0) v = -v;
      }
      r1[index(i, j)] = v;
    }
  }

  const double cg = std::cos(spec.gauge_angle), sg = std::sin(spec.gauge_angle);
  for (std::size_t k = 0; k < n; ++k) {
    const SurfaceJet& jt = jets_[k];
    ConnectorFrame& f = frames_[k];
    f.x = jt.x;
    f.lambda1 = jt.lambda1;
    f.lambda2 = jt.lambda2;
    const Vec2 p1 = r1[k];
    const Vec2 p2 = perp(p1);
    const Vec3 q1 = jt.grad_y * p1 / jt.lambda1;
    const Vec3 q2 = jt.grad_y * p2 / jt.lambda2;
    f.r1 = cg * p1 + sg * p2;
    f.r2 = -sg * p1 + cg * p2;
    f.l1 = cg * q1 + sg * q2;
    f.l2 = -sg * q1 + cg * q2;
    const Eigen::Matrix<double, 2, 3> pinv = jt.C.inverse() * jt.grad_y.transpose();
    f.m1 = pinv * f.l1;
    f.m2 = pinv * f.l2;
    f.d1_star = -jt.grad_nu.transpose() * f.l1;
    f.d2_star = -jt.grad_nu.transpose() * f.l2;
    f.dij << f.d1_star.dot(f.r1), f.d1_star.dot(f.r2), f.d2_star.dot(f.r1), f.d2_star.dot(f.r2);
    if (std::abs(jt.lambda1 - jt.lambda2) < 1e-6 * jt.lambda1) {
      f.ill_conditioned = true;
      f.warning = "near-umbilic point of C: principal frame is ill-conditioned for differencing";
    }
  }

  auto d = [&](int i, int j, auto get, int axis) {
    return field_diff(frames_, nx(), ny(), dx_, dy_, i, j, get, axis);
  };
  for (int j = 0; j < ny(); ++j) {
    for (int i = 0; i < nx(); ++i) {
      ConnectorFrame& f = frames_[index(i, j)];
      auto r1_of = [](const ConnectorFrame& g) { return g.r1; };
      auto l1_of = [](const ConnectorFrame& g) { return g.l1; };
      f.c = Vec2(d(i, j, r1_of, 0).dot(f.r2), d(i, j, r1_of, 1).dot(f.r2));
      f.c_star = Vec2(d(i, j, l1_of, 0).dot(f.l2), d(i, j, l1_of, 1).dot(f.l2));
      f.c1 = f.c.dot(f.r1);
      f.c2 = f.c.dot(f.r2);
    }
  }
  for (int j = 0; j < ny(); ++j) {
    for (int i = 0; i < nx(); ++i) {
      ConnectorFrame& f = frames_[index(i, j)];
      if (!interior(i, j)) {
        f.c12 = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      auto c_of = [](const ConnectorFrame& g) { return g.c; };
      Mat2 grad_c;
      grad_c.col(0) = d(i, j, c_of, 0);
      grad_c.col(1) = d(i, j, c_of, 1);
      f.c12 = f.r1.dot(grad_c * f.r2);
    }
  }
}

void FrameGrid::require_interior(int i, int j) const {
  if (!interior(i, j)) {
    std::ostringstream os;
    os << "grid node (" << i << ", " << j << ") is too close to the boundary for central differences";
    throw DomainError(os.str());
  }
}

Mat2 FrameGrid::grad_lambdas(int i, int j) const {
  require_interior(i, j);
  Mat2 g;
  for (int a = 0; a < 2; ++a) {
    auto lam = [a](const ConnectorFrame& f) { return Eigen::Matrix<double, 1, 1>(a == 0 ? f.lambda1 : f.lambda2); };
    g(a, 0) = field_diff(frames_, nx(), ny(), dx_, dy_, i, j, lam, 0)(0);
    g(a, 1) = field_diff(frames_, nx(), ny(), dx_, dy_, i, j, lam, 1)(0);
  }
  return g;
}

namespace {

template <class Frames, class Get>
double planar_curl(const Frames& frames, int nx, int ny, double dx, double dy, int i, int j, Get get) {
  const Vec2 dv1 = field_diff(frames, nx, ny, dx, dy, i, j, get, 0);
  const Vec2 dv2 = field_diff(frames, nx, ny, dx, dy, i, j, get, 1);
  return dv1(1) - dv2(0);
}

}  // namespace

double FrameGrid::curl_c(int i, int j) const {
  require_interior(i, j);
  return planar_curl(frames_, nx(), ny(), dx_, dy_, i, j, [](const ConnectorFrame& f) { return f.c; });
}

double FrameGrid::curl_c_star(int i, int j) const {
  require_interior(i, j);
  return planar_curl(frames_, nx(), ny(), dx_, dy_, i, j, [](const ConnectorFrame& f) { return f.c_star; });
}

double FrameGrid::curl_d1_star(int i, int j) const {
  require_interior(i, j);
  return planar_curl(frames_, nx(), ny(), dx_, dy_, i, j, [](const ConnectorFrame& f) { return f.d1_star; });
}

double FrameGrid::curl_d2_star(int i, int j) const {
  require_interior(i, j);
  return planar_curl(frames_, nx(), ny(), dx_, dy_, i, j, [](const ConnectorFrame& f) { return f.d2_star; });
}

std::pair<int, int> FrameGrid::nearest(const Vec2& x) const {
  const int i = static_cast<int>(std::lround((x(0) - spec_.region.x1_min) / dx_));
  const int j = static_cast<int>(std::lround((x(1) - spec_.region.x2_min) / dy_));
  return {std::clamp(i, 0, nx() - 1), std::clamp(j, 0, ny() - 1)};
}

ConnectorFrame compute_frame(const ParametricSurface& surface, const Vec2& x, double spacing) {
  if (!(spacing > 0.0)) throw DomainError("frame spacing must be positive");
  FrameGridSpec spec;
  spec.nx = spec.ny = 9;
  spec.region = {x(0) - 4.0 * spacing, x(0) + 4.0 * spacing, x(1) - 4.0 * spacing, x(1) + 4.0 * spacing};
  const FrameGrid grid(surface, spec);
  return grid.frame(4, 4);
}

Vec2 c_star_from_metric(const ConnectorFrame& f, const SurfaceJet& jet, const Mat2& grad_lambdas) {
  if (!(f.lambda1 > 0.0 && f.lambda2 > 0.0)) throw DomainError("principal stretches must be positive");
  const Vec2 gl1 = grad_lambdas.row(0).transpose();
  const Vec2 gl2 = grad_lambdas.row(1).transpose();
  return jet.C * f.c / std::sqrt(jet.detC) - gl1.dot(f.r2) / f.lambda2 * f.r1 +
         gl2.dot(f.r1) / f.lambda1 * f.r2;
}

double gauss_from_connectors(const FrameGrid& grid, int i, int j) {
  const ConnectorFrame& f = grid.frame(i, j);
  return -grid.curl_c_star(i, j) / (f.lambda1 * f.lambda2);
}

double gauss_uniform_stretch(const ConnectorFrame& f, double lambda1) {
  const double l2 = 1.0 / lambda1;
  return (1.0 / (l2 * l2) - 1.0 / (lambda1 * lambda1)) * (f.c2 * f.c2 - f.c1 * f.c1 + f.c12);
}

std::pair<double, double> curvatures_from_d(const ConnectorFrame& f) {
  const Mat2& d = f.dij;
  const double H = -0.5 * (d(0, 0) / f.lambda1 + d(1, 1) / f.lambda2);
  const double K = (d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0)) / (f.lambda1 * f.lambda2);
  return {H, K};
}

std::pair<double, double> curvatures_from_d_gauge(const ConnectorFrame& f) {
  // shape operator in the l-frame: S_ij = −d_i* · m_j
  Mat2 S;
  S << -f.d1_star.dot(f.m1), -f.d1_star.dot(f.m2), -f.d2_star.dot(f.m1), -f.d2_star.dot(f.m2);
  return {0.5 * S.trace(), S.determinant()};
}

double CodazziReport::max() const { return std::max({curl_c_star, curl_d1, curl_d2, curl_c}); }

CodazziReport check_codazzi(const FrameGrid& grid) {
  CodazziReport rep;
  for (int j = 2; j < grid.ny() - 2; ++j) {
    for (int i = 2; i < grid.nx() - 2; ++i) {
      const ConnectorFrame& f = grid.frame(i, j);
      rep.curl_c_star = std::max(rep.curl_c_star, std::abs(grid.curl_c_star(i, j) - cross2(f.d2_star, f.d1_star)));
      rep.curl_d1 = std::max(rep.curl_d1, std::abs(grid.curl_d1_star(i, j) - cross2(f.c_star, f.d2_star)));
      rep.curl_d2 = std::max(rep.curl_d2, std::abs(grid.curl_d2_star(i, j) - cross2(f.d1_star, f.c_star)));
      rep.curl_c = std::max(rep.curl_c, std::abs(grid.curl_c(i, j)));
      ++rep.points;
    }
  }
  return rep;
}

}  // namespace plate
