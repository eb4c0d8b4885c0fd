#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "ringspec/chebyshev.hpp"
#include "ringspec/polynomial.hpp"
#include "ringspec/rootfind.hpp"

using namespace ringspec;

namespace {

IntPolynomial P(unsigned n) { return chebyshev_u(n); }
IntPolynomial Z(unsigned n) { return z_poly(n); }

}  // namespace

TEST(IntPolynomial, NormalizesTrailingZeros) {
  IntPolynomial p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p, (IntPolynomial{1, 2}));
  IntPolynomial zero{0, 0};
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), 0);
  EXPECT_TRUE(IntPolynomial().is_zero());
}

TEST(IntPolynomial, ArithmeticBasics) {
  const IntPolynomial a{-1, 1};
  EXPECT_EQ(poly_mul(a, a), (IntPolynomial{1, -2, 1}));
  EXPECT_EQ(poly_mul(Z(1), Z(2)), (IntPolynomial{-1, 4, -4, 1}));
  const IntPolynomial p{3, -7, 0, 5};
  EXPECT_EQ(poly_mul(p, IntPolynomial{1}), p);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(-(-p), p);
}

TEST(IntPolynomial, ShiftConstant) {
  EXPECT_EQ(poly_shift_const(IntPolynomial{-1, 1}, 1), (IntPolynomial{0, 1}));
  EXPECT_EQ(poly_shift_const(Z(2), -1), (IntPolynomial{0, -3, 1}));
  EXPECT_EQ(poly_shift_const(IntPolynomial(), 5), (IntPolynomial{5}));
}

TEST(IntPolynomial, DecimalStringsRoundTrip) {
  const IntPolynomial p = Z(60);
  EXPECT_EQ(IntPolynomial::from_decimal_strings(p.to_decimal_strings()), p);
  EXPECT_THROW(IntPolynomial::from_decimal_strings({"1", "x"}), std::invalid_argument);
}

TEST(IntPolynomial, ToString) {
  EXPECT_EQ(Z(3).to_string(), "x^3 - 5*x^2 + 6*x - 1");
  EXPECT_EQ(IntPolynomial().to_string(), "0");
}

TEST(IntPolynomial, HalveExponents) {
  const IntPolynomial sq = Z(4).substitute_square();
  ASSERT_TRUE(sq.halve_exponents().has_value());
  EXPECT_EQ(*sq.halve_exponents(), Z(4));
  EXPECT_FALSE((IntPolynomial{0, 1}).halve_exponents().has_value());
}

TEST(Chebyshev, SmallCases) {
  EXPECT_EQ(P(0), (IntPolynomial{1}));
  EXPECT_EQ(P(2), (IntPolynomial{-1, 0, 1}));
  EXPECT_EQ(P(3), (IntPolynomial{0, -2, 0, 1}));
}

TEST(Chebyshev, MatchesExplicitBinomialForm) {
  for (unsigned n = 0; n <= 200; ++n) {
    EXPECT_EQ(P(n), IntPolynomial(oracle::chebyshev_explicit(n))) << "n=" << n;
  }
}

TEST(ZPoly, SmallCases) {
  EXPECT_EQ(Z(0), (IntPolynomial{1}));
  EXPECT_EQ(Z(1), (IntPolynomial{-1, 1}));
  EXPECT_EQ(Z(2), (IntPolynomial{1, -3, 1}));
  EXPECT_EQ(Z(3), (IntPolynomial{-1, 6, -5, 1}));
}

TEST(ZPoly, RecurrenceMatchesExplicitBinomialForm) {
  for (unsigned n = 0; n <= 200; ++n) {
    EXPECT_EQ(Z(n), IntPolynomial(oracle::z_explicit(n))) << "n=" << n;
  }
}

TEST(ZPoly, ConstantTermAlternates) {
  for (unsigned n = 0; n <= 40; ++n) {
    EXPECT_EQ(Z(n).coefficient(0), n % 2 == 0 ? 1 : -1);
    EXPECT_EQ(eval_exact(Z(n), 0), n % 2 == 0 ? 1 : -1);
  }
}

TEST(ZPoly, IsCharPolyOfTridiagonalMatrix) {
  for (unsigned n = 1; n <= 30; ++n) {
    EXPECT_EQ(char_poly_exact(z_matrix(n)), Z(n)) << "n=" << n;
  }
}

TEST(ZPoly, SquareSubstitutionGivesEvenChebyshev) {
  for (unsigned n = 0; n <= 100; ++n) {
    EXPECT_EQ(Z(n).substitute_square(), P(2 * n)) << "n=" << n;
  }
}

TEST(Chebyshev, ValueAtTwo) {
  for (unsigned k = 0; k <= 50; ++k) {
    EXPECT_EQ(eval_exact(P(k), 2), k + 1);
  }
  EXPECT_EQ(eval_real(P(3), 0.0), 0.0);
}

TEST(Chebyshev, CosineRoots) {
  for (unsigned n = 1; n <= 60; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const double x = 2.0 * std::cos(std::numbers::pi * k / (n + 1));
      EXPECT_LT(oracle::newton_offset(P(n).coefficients(), x), 1e-13) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Chebyshev, CatalanIdentities) {
  const IntPolynomial one{1};
  for (unsigned n = 1; n <= 100; ++n) {
    EXPECT_EQ((P(n) - one) * (P(n) + one), P(n - 1) * P(n + 1)) << "n=" << n;
    EXPECT_EQ(P(n - 1) * P(n + 1) + one, P(n) * P(n)) << "n=" << n;
  }
}

TEST(Chebyshev, OddIndexProductFactorization) {
  // P_{2m-1}(x) = x * prod_{k<m} (x^2 - 4 cos^2(pi k / 2m)), checked pointwise.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (unsigned m = 1; m <= 20; ++m) {
    for (int s = 0; s < 20; ++s) {
      const double x = dist(rng);
      double rhs = x;
      for (unsigned k = 1; k < m; ++k) {
        const double c = std::cos(std::numbers::pi * k / (2.0 * m));
        rhs *= x * x - 4.0 * c * c;
      }
      EXPECT_NEAR(oracle::exact_value(P(2 * m - 1).coefficients(), x), rhs,
                  1e-9 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST(ZPoly, RecurrenceValuesMatchCoefficients) {
  for (unsigned n = 0; n <= 12; ++n) {
    for (double x : {0.0, 0.3, 1.0, 2.5, 3.9}) {
      EXPECT_NEAR(oracle::z_value(n, x), oracle::exact_value(Z(n).coefficients(), x), 1e-9)
          << "n=" << n << " x=" << x;
    }
  }
}

TEST(ZPoly, AdjacentProductPlusOneIsSquare) {
  for (unsigned i = 1; i <= 50; ++i) {
    const IntPolynomial lhs = Z(i) * Z(i + 1) + IntPolynomial{1};
    const auto halved = (P(2 * i + 1) * P(2 * i + 1)).halve_exponents();
    ASSERT_TRUE(halved.has_value()) << "i=" << i;
    EXPECT_EQ(lhs, *halved) << "i=" << i;
  }
}

TEST(ShiftRoots, Examples) {
  EXPECT_NEAR(z_shift_roots(1, 1).at(0), 2.0, 1e-12);
  EXPECT_NEAR(z_shift_roots(1, 0).at(0), 0.0, 1e-12);
  const auto r = z_shift_roots(3, 0);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0], 0.0, 1e-12);
  EXPECT_NEAR(r[1], 2.0, 1e-12);
  EXPECT_NEAR(r[2], 3.0, 1e-12);
  EXPECT_THROW(z_shift_roots(0, 0), std::invalid_argument);
  EXPECT_THROW(z_shift_roots(2, 2), std::invalid_argument);
}

TEST(ShiftRoots, AreRootsOfShiftedZ) {
  for (unsigned n = 1; n <= 40; ++n) {
    for (int p : {0, 1}) {
      const IntPolynomial f = poly_shift_const(Z(n), p == 0 ? 1 : -1);
      for (double r : z_shift_roots(n, p)) {
        EXPECT_GE(r, 0.0);
        EXPECT_LT(r, 4.0);
        EXPECT_LT(oracle::newton_offset(f.coefficients(), r), 1e-13) << "n=" << n << " p=" << p;
      }
    }
  }
}

TEST(ZRoots, AreRoots) {
  for (unsigned n = 1; n <= 40; ++n) {
    for (double r : z_roots(n)) EXPECT_LT(oracle::newton_offset(Z(n).coefficients(), r), 1e-13);
  }
}

TEST(Landmarks, MEqualsTwo) {
  const LandmarkRoots l = landmark_roots(2);
  EXPECT_NEAR(l.x1, (3.0 - std::sqrt(5.0)) / 2.0, 1e-12);
  ASSERT_TRUE(l.x2.has_value());
  EXPECT_NEAR(*l.x2, (3.0 + std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_NEAR(l.u1, 1.0, 1e-12);
}

TEST(Landmarks, MEqualsOneHasNoSecondRoots) {
  const LandmarkRoots l = landmark_roots(1);
  EXPECT_NEAR(l.x1, 1.0, 1e-12);
  EXPECT_NEAR(l.u1, 2.0, 1e-12);
  EXPECT_FALSE(l.x2.has_value());
  EXPECT_FALSE(l.u2.has_value());
  EXPECT_THROW(landmark_roots(0), std::invalid_argument);
}

TEST(Landmarks, AreOrderedRoots) {
  for (unsigned m = 2; m <= 40; ++m) {
    const LandmarkRoots l = landmark_roots(m);
    EXPECT_NEAR(eval_real(Z(m), l.x1), 0.0, 1e-12);
    EXPECT_LT(oracle::newton_offset(Z(m).coefficients(), *l.x2), 1e-13);
    const IntPolynomial shifted = poly_shift_const(Z(m), m % 2 == 0 ? 1 : -1);
    EXPECT_LT(oracle::newton_offset(shifted.coefficients(), l.u1), 1e-13);
    EXPECT_LT(oracle::newton_offset(shifted.coefficients(), *l.u2), 1e-13);
    EXPECT_LT(l.x1, *l.x2);
    EXPECT_LT(l.u1, *l.u2);
    const auto zr = z_roots(m);
    EXPECT_NEAR(zr[0], l.x1, 1e-12);
    EXPECT_NEAR(zr[1], *l.x2, 1e-12);
  }
}

TEST(Landmarks, SeparatedIndicesAreOrdered) {
  for (unsigned i = 1; i <= 30; ++i) {
    for (unsigned j = i + 2; i + j <= 30; ++j) {
      EXPECT_GT(landmark_roots(i).u1, *landmark_roots(j).u2) << i << "," << j;
    }
  }
}

TEST(ProductClassifier, Examples) {
  const std::vector<unsigned> single{3};
  for (int p : {0, 1}) {
    const RealRootVerdict v = classify_product_real(single, p);
    EXPECT_TRUE(v.all_real);
    EXPECT_EQ(v.product_case, ProductCase::kSingleFactor);
    ASSERT_TRUE(v.roots.has_value());
    EXPECT_EQ(v.roots->size(), 6u);
  }
  const std::vector<unsigned> equal{2, 2};
  EXPECT_FALSE(classify_product_real(equal, 0).all_real);
  EXPECT_TRUE(classify_product_real(equal, 1).all_real);
  const std::vector<unsigned> apart{1, 3};
  EXPECT_FALSE(classify_product_real(apart, 0).all_real);
  EXPECT_FALSE(classify_product_real(apart, 1).all_real);
  const std::vector<unsigned> adjacent{2, 3};
  EXPECT_EQ(classify_product_real(adjacent, 0).product_case, ProductCase::kAdjacentPair);
  EXPECT_FALSE(classify_product_real(adjacent, 1).all_real);
  const std::vector<unsigned> three{1, 1, 1};
  EXPECT_FALSE(classify_product_real(three, 1).all_real);
  EXPECT_THROW(classify_product_real(std::vector<unsigned>{}, 0), std::invalid_argument);
}

TEST(ProductClassifier, RootsAreSortedInsideInterval) {
  for (unsigned a = 1; a <= 6; ++a) {
    for (unsigned b = a; b <= a + 1; ++b) {
      for (int p : {0, 1}) {
        const std::vector<unsigned> ks{a, b};
        const RealRootVerdict v = classify_product_real(ks, p);
        EXPECT_EQ(v.all_real, v.roots.has_value());
        if (!v.roots) continue;
        EXPECT_TRUE(std::is_sorted(v.roots->begin(), v.roots->end()));
        for (double r : *v.roots) {
          EXPECT_GT(r, -2.0);
          EXPECT_LT(r, 2.0);
        }
        EXPECT_EQ(v.roots->size(), 2u * (a + b));
      }
    }
  }
}

TEST(ProductClassifier, ClosedFormRootsAnnihilate) {
  for (unsigned a = 1; a <= 6; ++a) {
    for (unsigned b = a; b <= a + 1; ++b) {
      for (int p : {0, 1}) {
        const std::vector<unsigned> ks{a, b};
        const RealRootVerdict v = classify_product_real(ks, p);
        if (!v.roots) continue;
        const IntPolynomial f = chebyshev_product_shift(ks, p);
        for (double r : *v.roots) EXPECT_LT(oracle::newton_offset(f.coefficients(), r), 1e-13);
      }
    }
  }
}

TEST(BoundWitness, Examples) {
  const std::vector<unsigned> a{1, 3};
  const double c = std::cos(2.0 * std::numbers::pi / 7.0);
  EXPECT_NEAR(product_bound_witness(a), 4.0 * c * c, 1e-12);
  const std::vector<unsigned> b{1, 1, 1};
  EXPECT_NEAR(product_bound_witness(b), 1.0, 1e-12);
  EXPECT_THROW(product_bound_witness(std::vector<unsigned>{2, 3}), std::invalid_argument);
  EXPECT_THROW(product_bound_witness(std::vector<unsigned>{4}), std::invalid_argument);
}
