#pragma once

#include <span>
#include <vector>

#include "plate/surface.hpp"

namespace plate {

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule, n >= 1. Nodes by Newton iteration on P_n, accurate to round-off.
[[nodiscard]] GaussLegendreRule gauss_legendre(int n);

/// Sum by recursive halving; the order of additions depends only on the size.
[[nodiscard]] double pairwise_sum(std::span<const double> values);

/// ∫_a^b f with a single n-point rule.
template <class F>
[[nodiscard]] double integrate(const GaussLegendreRule& rule, F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  std::vector<double> terms(rule.nodes.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * pairwise_sum(terms);
}

/// Composite tensor-product rule over a rectangle: nx × ny cells, `order` points per cell and axis.
struct AreaGrid {
  int nx = 8;
  int ny = 8;
  int order = 4;
};

struct AreaNode {
  Vec2 x;
  double weight;
};

/// Nodes ordered row by row (x2 outer, x1 inner). Throws DomainError for nx, ny < 1 or order < 1.
[[nodiscard]] std::vector<AreaNode> area_nodes(const Rect& domain, const AreaGrid& grid);

}  // namespace plate
