#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "plate/errors.hpp"
#include "plate/quadrature.hpp"

using namespace plate;

TEST(GaussLegendre, WeightsSumToTwo) {
  for (int n : {1, 2, 5, 8, 16, 48}) {
    const GaussLegendreRule r = gauss_legendre(n);
    ASSERT_EQ(r.nodes.size(), static_cast<std::size_t>(n));
    EXPECT_NEAR(pairwise_sum(r.weights), 2.0, 1e-14) << n;
  }
}

TEST(GaussLegendre, ExactForDegree2nMinus1) {
  for (int n : {2, 4, 8}) {
    const GaussLegendreRule r = gauss_legendre(n);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      const double got = integrate(r, [p](double x) { return std::pow(x, p); }, 0.0, 1.0);
      EXPECT_NEAR(got, 1.0 / (p + 1), 1e-14) << "n=" << n << " p=" << p;
    }
  }
}

TEST(GaussLegendre, NodesAscendingAndSymmetric) {
  const GaussLegendreRule r = gauss_legendre(7);
  for (std::size_t i = 1; i < r.nodes.size(); ++i) EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    EXPECT_NEAR(r.nodes[i], -r.nodes[r.nodes.size() - 1 - i], 1e-15);
  }
}

TEST(PairwiseSum, MatchesOrderIndependentTotal) {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / static_cast<double>(i + 1);
  double naive = 0.0;
  for (double x : v) naive += x;
  EXPECT_NEAR(pairwise_sum(v), naive, 1e-12);
  EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
}

TEST(AreaNodes, CountAndWeights) {
  const Rect r{-0.5, 1.0, 0.0, 2.0};
  const auto nodes = area_nodes(r, AreaGrid{3, 2, 4});
  EXPECT_EQ(nodes.size(), 3u * 2u * 16u);
  double w = 0.0;
  for (const auto& n : nodes) {
    w += n.weight;
    EXPECT_TRUE(r.contains(n.x));
  }
  EXPECT_NEAR(w, r.area(), 1e-14);
}

TEST(AreaNodes, IntegratesSmoothFunction) {
  const Rect r{0.0, 1.0, 0.0, 1.0};
  double s = 0.0;
  for (const auto& n : area_nodes(r, AreaGrid{4, 4, 4})) s += n.weight * std::exp(n.x(0)) * std::cos(n.x(1));
  EXPECT_NEAR(s, (std::exp(1.0) - 1.0) * std::sin(1.0), 1e-12);
}

TEST(AreaNodes, RejectsEmptyGrid) {
  EXPECT_THROW((void)area_nodes(Rect{}, AreaGrid{0, 1, 1}), DomainError);
  EXPECT_THROW((void)area_nodes(Rect{}, AreaGrid{1, 1, 0}), DomainError);
}
