#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ringspec/ring_digraph.hpp"
#include "ringspec/rootfind.hpp"
#include "ringspec/weighted.hpp"

using namespace ringspec;

namespace {

bool numeric_cyclic(const RealMatrix& l) {
  const ComplexRootSet r = aberth_roots(char_poly_float(l));
  for (const auto& z : r.roots) {
    if (std::abs(z.imag()) > 1e-6) return true;
  }
  return false;
}

K3Weights cycle3(double a, double b, double c) { return K3Weights{a, b, c, 0, 0, 0}; }

}  // namespace

TEST(WeightMatrix, Validation) {
  EXPECT_THROW(WeightMatrix(RealMatrix(2, 3)), std::invalid_argument);
  EXPECT_THROW(WeightMatrix(RealMatrix{{1, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(WeightMatrix(RealMatrix{{0, -1}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(WeightMatrix(RealMatrix{{0, NAN}, {0, 0}}), std::invalid_argument);
  EXPECT_NO_THROW(WeightMatrix(RealMatrix{{0, 0}, {0, 0}}));
}

TEST(WeightedLaplacian, UnitCycleMatchesRing) {
  const RealMatrix l = weighted_laplacian(k3_matrix(cycle3(1, 1, 1)));
  // The K3 layout orients the 3-cycle as 0 -> 1 -> 2 -> 0.
  EXPECT_EQ(l, (RealMatrix{{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}));
  const RealMatrix ring = to_real(laplacian(RingDigraph::forward_cycle(3)));
  EXPECT_EQ(char_poly_float(l), char_poly_float(ring));
}

TEST(WeightedLaplacian, CompleteUnitGraph) {
  const RealMatrix l = weighted_laplacian(k3_matrix(K3Weights{1, 1, 1, 1, 1, 1}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(l(i, j), i == j ? 2.0 : -1.0);
}

TEST(WeightedLaplacian, RowSumsVanish) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> d(0.0, 10.0);
  for (int t = 0; t < 50; ++t) {
    RealMatrix w(4, 4, 0.0);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j) w(i, j) = d(rng);
    const RealMatrix l = weighted_laplacian(WeightMatrix(w));
    for (std::size_t i = 0; i < 4; ++i) {
      double s = 0;
      for (double v : l.row(i)) s += v;
      EXPECT_NEAR(s, 0.0, 1e-12);
    }
  }
}

TEST(K3, LayoutRoundTrip) {
  const K3Weights k{1, 2, 3, 4, 5, 6};
  const K3Weights back = k3_weights(k3_matrix(k));
  EXPECT_EQ(back.a, 1);
  EXPECT_EQ(back.b, 2);
  EXPECT_EQ(back.c, 3);
  EXPECT_EQ(back.alpha, 4);
  EXPECT_EQ(back.beta, 5);
  EXPECT_EQ(back.gamma, 6);
  EXPECT_THROW(k3_weights(WeightMatrix(RealMatrix(4, 4))), std::invalid_argument);
}

TEST(K3, DiscriminantExamples) {
  EXPECT_DOUBLE_EQ(k3_discriminant(k3_matrix(K3Weights{1, 1, 1, 1, 1, 1})), 0.0);
  EXPECT_DOUBLE_EQ(k3_discriminant(k3_matrix(cycle3(1, 1, 1))), -3.0);
  EXPECT_DOUBLE_EQ(k3_discriminant(k3_matrix(cycle3(4, 1, 1))), 0.0);
}

TEST(K3, ClassifyExamples) {
  EXPECT_TRUE(k3_classify(k3_matrix(cycle3(1, 1, 1))));
  EXPECT_FALSE(k3_classify(k3_matrix(cycle3(4, 1, 1))));
  EXPECT_FALSE(k3_classify(k3_matrix(K3Weights{3, 1, 2, 1, 2, 1})));
}

TEST(K3, ThreeWayAgreementOnRandomWeights) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> d(0.0, 10.0);
  int compared = 0;
  for (int t = 0; t < 2000; ++t) {
    const K3Weights k{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
    const WeightMatrix w = k3_matrix(k);
    const double disc = k3_discriminant(w);
    if (std::abs(disc) <= 1e-6) continue;
    ++compared;
    const bool by_disc = disc < 0;
    EXPECT_EQ(k3_classify(w), by_disc);
    EXPECT_EQ(numeric_cyclic(weighted_laplacian(w)), by_disc);
  }
  EXPECT_GT(compared, 1900);
}

TEST(K3, PureCyclesFollowTriangleRule) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> d(0.0, 10.0);
  for (int t = 0; t < 500; ++t) {
    const double a = d(rng), b = d(rng), c = d(rng);
    EXPECT_EQ(k3_classify(k3_matrix(cycle3(a, b, c))),
              strict_triangle(std::sqrt(a), std::sqrt(b), std::sqrt(c)));
  }
}

TEST(K3, BoundaryRootsMatchInterpolatedQuadratic) {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> d(0.0, 10.0);
  int checked = 0;
  while (checked < 300) {
    const double b = d(rng), c = d(rng), beta = d(rng), gamma = d(rng), alpha = d(rng);
    if (!((b - beta) * (c - gamma) > 0.0)) continue;
    ++checked;
    const auto f = [&](double t) {
      return k3_discriminant(k3_matrix(K3Weights{alpha + t, b, c, alpha, beta, gamma}));
    };
    const auto fitted = oracle::quadratic_roots_by_sampling(f, 0.0, 1.5, 3.0);
    ASSERT_TRUE(fitted.has_value());
    const auto [lo, hi] = k3_boundary_roots(b, c, beta, gamma);
    const double scale = std::max(1.0, std::abs(hi));
    EXPECT_NEAR(lo, fitted->first, 1e-9 * scale);
    EXPECT_NEAR(hi, fitted->second, 1e-9 * scale);
  }
  EXPECT_THROW(k3_boundary_roots(2, 1, 1, 2), std::invalid_argument);
}

TEST(CubicDiscriminant, KnownValues) {
  // (x-1)(x-2)(x-3): discriminant 4.
  EXPECT_DOUBLE_EQ(cubic_discriminant(-6, 11, -6), 4.0);
  EXPECT_DOUBLE_EQ(cubic_discriminant(-7, 12, -7), -199.0);
  EXPECT_DOUBLE_EQ(cubic_discriminant(-6, 11, -7), -23.0);
}

TEST(Fig6, LaplacianCharPoly) {
  for (double p : {0.5, 1.0, 3.0}) {
    for (double y : {0.2, 1.0, 4.0}) {
      const double q = p + 3;
      const auto c = char_poly_float(fig6_laplacian(p, y));
      const std::vector<double> expected{0.0, -(q * y + 1), q * y + q, -(y + q), 1.0};
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NEAR(c[i], expected[i], 1e-9);
    }
  }
}

TEST(Fig6, DiscriminantExamples) {
  EXPECT_LT(fig6_discriminant(3, 1), 0.0);
  EXPECT_DOUBLE_EQ(fig6_discriminant(3, 1), -199.0);
  EXPECT_GT(fig6_discriminant(3, 0.1), 0.0);
  EXPECT_GT(fig6_discriminant(3, 0.26), 0.0);
  EXPECT_LT(fig6_discriminant(3, 0.27), 0.0);
  EXPECT_THROW(fig6_discriminant(0, 1), std::invalid_argument);
  EXPECT_THROW(fig6_discriminant(1, -1), std::invalid_argument);
}

TEST(Fig6, ExpandedQuarticEqualsDiscriminant) {
  for (double p : {0.3, 1.0, 2.0, 3.0, 5.0, 11.0}) {
    for (double y = 0.05; y < 20; y *= 1.37) {
      const double a = fig6_discriminant(p, y);
      const double b = fig6_discriminant_expanded(p, y);
      EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, std::abs(a))) << p << " " << y;
    }
  }
}

TEST(Fig6, SignMatchesNumericSpectrum) {
  for (double p : {1.0, 2.0, 3.0, 5.0}) {
    for (int s = 1; s <= 100; ++s) {
      const double y = 0.05 * s;
      const double disc = fig6_discriminant(p, y);
      if (std::abs(disc) < 1e-6) continue;
      EXPECT_EQ(disc < 0, numeric_cyclic(fig6_laplacian(p, y))) << p << " " << y;
    }
  }
}

TEST(Fig6, BoundaryAtThree) {
  const auto [lo, hi] = fig6_boundary(3.0);
  EXPECT_NEAR(lo, 0.266, 0.002);
  EXPECT_NEAR(hi, 2.441, 0.002);
}

TEST(Fig6, BoundaryBrackets) {
  for (double p : {1.5, 2.0, 3.0, 8.0}) {
    const auto [lo, hi] = fig6_boundary(p);
    EXPECT_LT(fig6_discriminant(p, 0.5 * (lo + hi)), 0.0);
    EXPECT_GT(fig6_discriminant(p, lo * (1 - 1e-6)), 0.0);
    EXPECT_GT(fig6_discriminant(p, hi * (1 + 1e-6)), 0.0);
    EXPECT_NEAR(fig6_discriminant(p, lo), 0.0, 1e-6 * std::abs(fig6_discriminant(p, 1e-3)));
  }
  EXPECT_THROW(fig6_boundary(0.0), std::invalid_argument);
  // Leading coefficient q(q - 4) <= 0: the window never closes.
  EXPECT_THROW(fig6_boundary(0.5), std::runtime_error);
  EXPECT_THROW(fig6_boundary(1.0), std::runtime_error);
}

TEST(C4, CubicMatchesLaplacian) {
  for (double a : {0.0, 1.0, 4.0, 7.5}) {
    for (double x : {0.0, 2.0, 9.0}) {
      const auto c = char_poly_float(c4_laplacian(a, x));
      const std::vector<double> expected{0.0, -(36 * x + 36 * a + 13 * a * x),
                                         36 + 13 * x + 13 * a + a * x, -(13 + x + a), 1.0};
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NEAR(c[i], expected[i], 1e-9);
    }
  }
}

TEST(C4, DiscriminantExamples) {
  for (double x = 0; x <= 12; x += 0.5) EXPECT_GE(c4_discriminant(0, x), 0.0);
  EXPECT_LT(c4_discriminant(4, 9), 0.0);
  EXPECT_TRUE(numeric_cyclic(c4_laplacian(4, 9)));
  for (double a = 0; a <= 12; a += 0.7)
    for (double x = 0; x <= 12; x += 0.9) {
      const double d = c4_discriminant(a, x);
      EXPECT_NEAR(d, c4_discriminant(x, a), 1e-12 * std::max(1.0, std::abs(d)) + 1e-9);
    }
}

TEST(C4, BoundaryPolynomialIsNegatedDiscriminant) {
  for (double a = 0; a <= 12; a += 0.37) {
    for (double x = 0; x <= 12; x += 0.41) {
      const double d = c4_discriminant(a, x);
      EXPECT_NEAR(c4_boundary_polynomial(a, x), -d, 1e-9 * std::max(1.0, std::abs(d)));
    }
  }
}

TEST(C4, ScanAndTriangle) {
  const auto grid = uniform_grid(12.0, 24);
  const auto samples = c4_scan(grid, grid);
  ASSERT_EQ(samples.size(), 25u * 25u);
  for (const auto& s : samples) {
    EXPECT_EQ(s.essentially_cyclic, s.discriminant < 0);
    if (s.triangle_ok) {
      EXPECT_TRUE(s.essentially_cyclic) << s.a << " " << s.x;
    }
    if (s.a == 0.0) {
      EXPECT_FALSE(s.essentially_cyclic);
    }
  }
  EXPECT_TRUE(c4_triangle_ok(4, 9));
  const std::vector<double> bad{-1.0};
  EXPECT_THROW(c4_scan(bad, grid), std::invalid_argument);
  EXPECT_THROW(uniform_grid(1.0, 0), std::invalid_argument);
}

TEST(C4, CsvFormat) {
  const std::vector<double> a{4.0};
  const std::vector<double> x{9.0};
  std::ostringstream os;
  write_c4_csv(os, c4_scan(a, x));
  const std::string out = os.str();
  EXPECT_EQ(out.substr(0, out.find('\n')), "sqrt_a,sqrt_x,discriminant,cyclic,triangle_ok");
  EXPECT_NE(out.find("\n2,3,"), std::string::npos);
  EXPECT_NE(out.find(",1,1\n"), std::string::npos);
}

TEST(StrictTriangle, Basics) {
  EXPECT_TRUE(strict_triangle(1, 1, 1));
  EXPECT_FALSE(strict_triangle(2, 1, 1));
  EXPECT_FALSE(strict_triangle(0, 1, 1));
}
