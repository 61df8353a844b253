#include "plate/catalog.hpp"

#include <cmath>
#include <memory>

#include "plate/errors.hpp"
#include "plate/quadrature.hpp"

namespace plate {

namespace {

struct GraphFn {
  std::function<double(const Vec2&)> f;
  std::function<Vec2(const Vec2&)> grad;
  std::function<Mat2(const Vec2&)> hess;
};

ParametricSurface graph_surface(std::string name, Rect domain, GraphFn g) {
  auto gp = std::make_shared<GraphFn>(std::move(g));
  return ParametricSurface(
      std::move(name), domain, [gp](const Vec2& x) { return Vec3(x(0), x(1), gp->f(x)); },
      [gp](const Vec2& x) {
        Mat32 m = Mat32::Zero();
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        m.row(2) = gp->grad(x).transpose();
        return m;
      },
      [gp](const Vec2& x) {
        const Mat2 h = gp->hess(x);
        Hess32 out{Mat32::Zero(), Mat32::Zero()};
        for (int j = 0; j < 2; ++j) out[j].row(2) = h.row(j);
        return out;
      });
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive");
}

double max_radius2(const Rect& d) {
  const double x = std::max(std::abs(d.x1_min), std::abs(d.x1_max));
  const double y = std::max(std::abs(d.x2_min), std::abs(d.x2_max));
  return x * x + y * y;
}

// Radial profile of the area-preserving bump. With w = r² on the deformed
// surface and q = |x|² on the plane, area preservation reads q = ∫_0^w G.
class BumpProfile {
 public:
  BumpProfile(double A, double s) : A_(A), s2_(s * s), rule_(gauss_legendre(48)) {
    k_ = 4.0 * A * A / (s2_ * s2_);
    c_ = 2.0 / s2_;
  }

  struct Jet {
    double P, Pq, Pqq;  // in-plane scale factor 1/√M and its q-derivatives
    double Z, Zq, Zqq;  // height
  };

  [[nodiscard]] Jet at(double q) const {
    const double w = solve_w(q);
    double M = 0.0, Mw = 0.0, Mww = 0.0;
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      const double t = 0.5 * (rule_.nodes[i] + 1.0);
      const double wt = 0.5 * rule_.weights[i];
      const auto [G, G1, G2] = g_derivs(w * t);
      M += wt * G;
      Mw += wt * t * G1;
      Mww += wt * t * t * G2;
    }
    const auto [G, G1, G2] = g_derivs(w);
    (void)G2;
    const double P = 1.0 / std::sqrt(M);
    const double Pw = -0.5 * P / M * Mw;
    const double Pww = 0.75 * P / (M * M) * Mw * Mw - 0.5 * P / M * Mww;
    const double Z = A_ * std::exp(-w / s2_);
    const double Zw = -Z / s2_;
    const double Zww = Z / (s2_ * s2_);
    Jet j;
    j.P = P;
    j.Pq = Pw / G;
    j.Pqq = Pww / (G * G) - Pw * G1 / (G * G * G);
    j.Z = Z;
    j.Zq = Zw / G;
    j.Zqq = Zww / (G * G) - Zw * G1 / (G * G * G);
    return j;
  }

 private:
  [[nodiscard]] std::array<double, 3> g_derivs(double w) const {
    const double e = std::exp(-c_ * w);
    const double g = k_ * w * e;
    const double g1 = k_ * e * (1.0 - c_ * w);
    const double g2 = k_ * e * c_ * (c_ * w - 2.0);
    const double G = std::sqrt(1.0 + g);
    return {G, g1 / (2.0 * G), g2 / (2.0 * G) - g1 * g1 / (4.0 * G * G * G)};
  }

  [[nodiscard]] double area_integral(double w) const {
    double s = 0.0;
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      s += 0.5 * rule_.weights[i] * g_derivs(0.5 * w * (rule_.nodes[i] + 1.0))[0];
    }
    return w * s;
  }

  [[nodiscard]] double solve_w(double q) const {
    double w = q;
    for (int it = 0; it < 60; ++it) {
      const double dw = (area_integral(w) - q) / g_derivs(w)[0];
      w -= dw;
      if (std::abs(dw) <= 1e-16 * (1.0 + w)) break;
    }
    return w;
  }

  double A_;
  double s2_;
  double k_;
  double c_;
  GaussLegendreRule rule_;
};

}  // namespace

namespace {

ParametricSurface linear_map(std::string name, double l1, double l2, Rect domain) {
  Mat32 g = Mat32::Zero();
  g(0, 0) = l1;
  g(1, 1) = l2;
  return ParametricSurface(
      std::move(name), domain, [l1, l2](const Vec2& x) { return Vec3(l1 * x(0), l2 * x(1), 0.0); },
      [g](const Vec2&) { return g; },
      [](const Vec2&) { return Hess32{Mat32::Zero(), Mat32::Zero()}; });
}

}  // namespace

ParametricSurface make_plane(Rect domain) { return linear_map("plane", 1.0, 1.0, domain); }

ParametricSurface make_uniform_stretch(double l1, double l2, Rect domain) {
  require_positive(l1, "uniform_stretch l1");
  require_positive(l2, "uniform_stretch l2");
  return linear_map("uniform_stretch", l1, l2, domain);
}

ParametricSurface make_cylinder(double R, Rect domain) {
  require_positive(R, "cylinder R");
  return ParametricSurface(
      "cylinder", domain,
      [R](const Vec2& x) {
        const double t = x(0) / R;
        return Vec3(R * std::sin(t), x(1), R * (1.0 - std::cos(t)));
      },
      [R](const Vec2& x) {
        const double t = x(0) / R;
        Mat32 g = Mat32::Zero();
        g.col(0) << std::cos(t), 0.0, std::sin(t);
        g(1, 1) = 1.0;
        return g;
      },
      [R](const Vec2& x) {
        const double t = x(0) / R;
        Hess32 h{Mat32::Zero(), Mat32::Zero()};
        h[0].col(0) << -std::sin(t) / R, 0.0, std::cos(t) / R;
        return h;
      });
}

ParametricSurface make_sphere_cap(double R, Rect domain) {
  require_positive(R, "sphere_cap R");
  if (max_radius2(domain) >= R * R) {
    throw DomainError("sphere_cap radius R must exceed the largest |x| of the domain");
  }
  GraphFn g;
  g.f = [R](const Vec2& x) { return R - std::sqrt(R * R - x.squaredNorm()); };
  g.grad = [R](const Vec2& x) { return Vec2(x / std::sqrt(R * R - x.squaredNorm())); };
  g.hess = [R](const Vec2& x) {
    const double s = std::sqrt(R * R - x.squaredNorm());
    return Mat2(Mat2::Identity() / s + x * x.transpose() / (s * s * s));
  };
  return graph_surface("sphere_cap", domain, std::move(g));
}

ParametricSurface make_saddle(double a, Rect domain) {
  if (!std::isfinite(a)) throw DomainError("saddle a must be finite");
  GraphFn g;
  g.f = [a](const Vec2& x) { return a * (x(0) * x(0) - x(1) * x(1)); };
  g.grad = [a](const Vec2& x) { return Vec2(2.0 * a * x(0), -2.0 * a * x(1)); };
  g.hess = [a](const Vec2&) { return Mat2(Vec2(2.0 * a, -2.0 * a).asDiagonal()); };
  return graph_surface("saddle", domain, std::move(g));
}

ParametricSurface make_gaussian_bump(double A, double s, Rect domain) {
  if (!std::isfinite(A)) throw DomainError("gaussian_bump A must be finite");
  require_positive(s, "gaussian_bump s");
  auto prof = std::make_shared<BumpProfile>(A, s);
  return ParametricSurface(
      "gaussian_bump", domain,
      [prof](const Vec2& x) {
        const auto j = prof->at(x.squaredNorm());
        return Vec3(j.P * x(0), j.P * x(1), j.Z);
      },
      [prof](const Vec2& x) {
        const auto j = prof->at(x.squaredNorm());
        Mat32 g;
        g.topRows<2>() = j.P * Mat2::Identity() + 2.0 * j.Pq * x * x.transpose();
        g.row(2) = 2.0 * j.Zq * x.transpose();
        return g;
      },
      [prof](const Vec2& x) {
        const auto j = prof->at(x.squaredNorm());
        Hess32 h;
        for (int jj = 0; jj < 2; ++jj) {
          for (int i = 0; i < 2; ++i) {
            for (int k = 0; k < 2; ++k) {
              h[jj](k, i) = 2.0 * j.Pq * ((jj == k) * x(i) + (i == jj) * x(k) + (i == k) * x(jj)) +
                            4.0 * j.Pqq * x(i) * x(jj) * x(k);
            }
            h[jj](2, i) = 2.0 * j.Zq * (i == jj) + 4.0 * j.Zqq * x(i) * x(jj);
          }
        }
        return h;
      });
}

ParametricSurface make_cone(double l1, Rect domain) {
  if (!(l1 >= 1.0)) throw DomainError("cone stretch l1 must be at least 1");
  if (domain.contains(Vec2::Zero())) throw DomainError("cone domain must exclude the apex x = 0");
  const double k = std::sqrt(l1 * l1 - 1.0 / (l1 * l1));
  return ParametricSurface(
      "cone", domain,
      [l1, k](const Vec2& x) { return Vec3(x(0) / l1, x(1) / l1, k * x.norm()); },
      [l1, k](const Vec2& x) {
        Mat32 g = Mat32::Zero();
        g(0, 0) = 1.0 / l1;
        g(1, 1) = 1.0 / l1;
        g.row(2) = k * x.transpose() / x.norm();
        return g;
      },
      [k](const Vec2& x) {
        const double r = x.norm();
        const Mat2 rr = Mat2::Identity() / r - x * x.transpose() / (r * r * r);
        Hess32 h{Mat32::Zero(), Mat32::Zero()};
        for (int j = 0; j < 2; ++j) h[j].row(2) = k * rr.row(j);
        return h;
      });
}

ParametricSurface make_stretched_cylinder(double R, double l1, Rect domain) {
  require_positive(l1, "stretched_cylinder l1");
  const ParametricSurface cyl = make_cylinder(R, Rect{-1e300, 1e300, -1e300, 1e300});
  const Vec2 s(l1, 1.0 / l1);
  return ParametricSurface(
      "stretched_cylinder", domain,
      [cyl, s](const Vec2& x) { return cyl.point(s.cwiseProduct(x)); },
      [cyl, s](const Vec2& x) { return Mat32(cyl.gradient(s.cwiseProduct(x)) * s.asDiagonal()); },
      [cyl, s](const Vec2& x) {
        const Hess32 hc = cyl.hessian(s.cwiseProduct(x));
        Hess32 h;
        for (int j = 0; j < 2; ++j) h[j] = s(j) * hc[j] * s.asDiagonal();
        return h;
      });
}

const std::vector<CatalogEntry>& surface_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"plane", {}},
      {"uniform_stretch", {{"l1", 2.0}}},
      {"cylinder", {{"R", 1.0}}},
      {"sphere_cap", {{"R", 2.0}}},
      {"saddle", {{"a", 0.5}}},
      {"gaussian_bump", {{"A", 0.1}, {"s", 0.25}}},
      {"cone", {{"l1", 1.5}}},
      {"stretched_cylinder", {{"R", 1.0}, {"l1", 1.5}}},
  };
  return entries;
}

ParametricSurface make_surface(const std::string& name, const SurfaceParams& params,
                               std::optional<Rect> domain) {
  const CatalogEntry* entry = nullptr;
  for (const auto& e : surface_catalog()) {
    if (e.name == name) entry = &e;
  }
  if (!entry) throw ConfigError("unknown surface '" + name + "'");

  SurfaceParams p = entry->defaults;
  for (const auto& [key, value] : params) {
    const bool known = p.count(key) || (name == "uniform_stretch" && key == "l2");
    if (!known) throw ConfigError("surface '" + name + "' has no parameter '" + key + "'");
    p[key] = value;
  }

  try {
    if (name == "plane") return make_plane(domain.value_or(Rect{}));
    if (name == "uniform_stretch") {
      const double l1 = p.at("l1");
      const double l2 = p.count("l2") ? p.at("l2") : 1.0 / l1;
      return make_uniform_stretch(l1, l2, domain.value_or(Rect{}));
    }
    if (name == "cylinder") return make_cylinder(p.at("R"), domain.value_or(Rect{}));
    if (name == "sphere_cap") return make_sphere_cap(p.at("R"), domain.value_or(Rect{}));
    if (name == "saddle") return make_saddle(p.at("a"), domain.value_or(Rect{}));
    if (name == "gaussian_bump") {
      return make_gaussian_bump(p.at("A"), p.at("s"), domain.value_or(Rect{}));
    }
    if (name == "cone") return make_cone(p.at("l1"), domain.value_or(Rect{0.1, 0.6, 0.1, 0.6}));
    return make_stretched_cylinder(p.at("R"), p.at("l1"), domain.value_or(Rect{}));
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace plate
