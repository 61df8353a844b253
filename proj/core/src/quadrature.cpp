#include "plate/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "plate/errors.hpp"

namespace plate {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be at least 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // one more derivative evaluation at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t mid = values.size() / 2;
  return pairwise_sum(values.first(mid)) + pairwise_sum(values.subspan(mid));
}

std::vector<AreaNode> area_nodes(const Rect& domain, const AreaGrid& grid) {
  if (grid.nx < 1 || grid.ny < 1) throw DomainError("area grid needs at least one cell per axis");
  const GaussLegendreRule rule = gauss_legendre(grid.order);
  const double hx = (domain.x1_max - domain.x1_min) / grid.nx;
  const double hy = (domain.x2_max - domain.x2_min) / grid.ny;
  const auto m = rule.nodes.size();
  std::vector<AreaNode> out;
  out.reserve(static_cast<std::size_t>(grid.nx) * grid.ny * m * m);
  for (int cy = 0; cy < grid.ny; ++cy) {
    for (std::size_t qy = 0; qy < m; ++qy) {
      const double y = domain.x2_min + hy * (cy + 0.5 * (rule.nodes[qy] + 1.0));
      for (int cx = 0; cx < grid.nx; ++cx) {
        for (std::size_t qx = 0; qx < m; ++qx) {
          const double x = domain.x1_min + hx * (cx + 0.5 * (rule.nodes[qx] + 1.0));
          out.push_back({Vec2(x, y), 0.25 * hx * hy * rule.weights[qx] * rule.weights[qy]});
        }
      }
    }
  }
  return out;
}

}  // namespace plate
