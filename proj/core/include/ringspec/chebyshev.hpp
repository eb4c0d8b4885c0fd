#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ringspec/matrix.hpp"
#include "ringspec/polynomial.hpp"

namespace ringspec {

/// Chebyshev polynomial of the second kind scaled to (-2, 2):
/// P_0 = 1, P_1 = x, P_n = x P_{n-1} - P_{n-2}.
IntPolynomial chebyshev_u(unsigned n);

/// Characteristic polynomial Z_n of the n x n tridiagonal matrix with
/// diagonal (2, ..., 2, 1) and -1 off the diagonal:
/// Z_0 = 1, Z_1 = x - 1, Z_n = (x - 2) Z_{n-1} - Z_{n-2}.
IntPolynomial z_poly(unsigned n);

/// The n x n tridiagonal matrix whose characteristic polynomial is z_poly(n).
/// Exposed so the identity can be checked through a generic char-poly route.
IntMatrix z_matrix(unsigned n);

/// Roots of Z_n + (-1)^parity, i.e. 4 cos^2(pi k / (2n + 1 + (-1)^(k+parity)))
/// for k = 1..n, sorted ascending. Requires n >= 1 and parity in {0, 1}.
std::vector<double> z_shift_roots(unsigned n, int parity);

/// Roots of Z_n: 4 cos^2(pi k / (2n + 1)), k = 1..n, sorted ascending.
std::vector<double> z_roots(unsigned n);

/// Smallest and second-smallest roots of Z_m (x1, x2) and of Z_m + (-1)^m
/// (u1, u2). The second roots only exist for m > 1.
struct LandmarkRoots {
  unsigned m = 0;
  double x1 = 0.0;
  std::optional<double> x2;
  double u1 = 0.0;
  std::optional<double> u2;
};

/// Throws std::invalid_argument for m == 0.
LandmarkRoots landmark_roots(unsigned m);

enum class ProductCase { kSingleFactor, kEqualPair, kAdjacentPair, kNonReal };

std::string_view to_string(ProductCase c);

/// Outcome of deciding whether prod_k P_{2 i_k}(x) + (-1)^p has only real roots.
struct RealRootVerdict {
  bool all_real = false;
  ProductCase product_case = ProductCase::kNonReal;
  /// Closed-form roots with multiplicity, ascending; present iff all_real.
  std::optional<std::vector<double>> roots;
};

/// Exact real-rootedness decision for prod_k P_{2 i_k}(x) + (-1)^parity.
/// Only a single factor, an equal pair with parity 1, or an adjacent pair
/// (|i_1 - i_2| = 1) with parity 0 are real-rooted.
RealRootVerdict classify_product_real(std::span<const unsigned> ks, int parity);

/// The polynomial the classifier above reasons about, built exactly.
IntPolynomial chebyshev_product_shift(std::span<const unsigned> ks, int parity);

/// Third-smallest root, counted with multiplicity, of prod_k Z_{i_k}(x).
/// On (0, x3] the product stays strictly inside (-1, 1). Requires at least
/// two factors, and two factors must differ by more than one.
double product_bound_witness(std::span<const unsigned> ks);

}  // namespace ringspec
