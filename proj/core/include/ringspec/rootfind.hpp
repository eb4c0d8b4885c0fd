#pragma once

#include <gmpxx.h>

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "ringspec/matrix.hpp"
#include "ringspec/polynomial.hpp"

namespace ringspec {

struct RootFinderConfig {
  double convergence_tol = 1e-13;
  int max_iterations = 500;
  double imag_threshold = 1e-6;
  bool refine_suspicious = true;

  /// Throws std::invalid_argument when a tolerance is non-positive or the
  /// imaginary threshold does not sit above the convergence tolerance.
  void validate() const;
};

/// Numerically computed roots of a real polynomial.
struct ComplexRootSet {
  std::vector<std::complex<double>> roots;
  /// |p(z)| / sum_i |a_i| max(1, |z|)^i for each root.
  std::vector<double> residuals;
  bool converged = false;
  int iterations = 0;
};

/// Raised when refinement cannot move a root out of the ambiguous band
/// between the convergence tolerance and the imaginary threshold.
class AmbiguousSpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Aberth-Ehrlich simultaneous iteration on exact integer coefficients.
///
/// A double-precision pass from the standard circle start seeds a second pass
/// in multiprecision arithmetic on the exact coefficients; the working
/// precision grows with the coefficient size, so the ill-conditioning of
/// high-degree characteristic polynomials (|a_i| ~ 1e23 at degree 40) does not
/// leak into the roots. `converged` reports whether the second pass met
/// `convergence_tol` within `max_iterations`.
ComplexRootSet aberth_roots(const IntPolynomial& p, const RootFinderConfig& cfg = {});

/// Double-precision Aberth-Ehrlich for real coefficients (ascending).
ComplexRootSet aberth_roots(std::span<const double> ascending,
                            const RootFinderConfig& cfg = {});

struct RefinedRoot {
  std::complex<double> value;
  bool converged = false;
};

/// Newton polishing of one root, evaluating p and p' in multiprecision on the
/// exact coefficients. On divergence the input is returned with
/// converged = false.
RefinedRoot refine_root(const IntPolynomial& p, std::complex<double> z);

/// det(xI - M) by the Faddeev-LeVerrier trace recursion over big integers.
/// All divisions in the recursion are exact.
IntPolynomial char_poly_exact(const IntMatrix& m);
IntPolynomial char_poly_exact(const Matrix<mpz_class>& m);

/// Faddeev-LeVerrier in double precision; ascending coefficients, monic.
std::vector<double> char_poly_float(const RealMatrix& m);

/// Fraction-free (Bareiss) determinant.
mpz_class determinant_exact(Matrix<mpz_class> m);
mpz_class determinant_exact(const IntMatrix& m);

/// True iff some root is non-real, i.e. |Im z| > imag_threshold.
///
/// Roots whose imaginary part falls strictly between convergence_tol and
/// imag_threshold are polished with refine_root first (when the source
/// polynomial is supplied and refinement is enabled). A root that stays in
/// that band raises AmbiguousSpectrumError; so does an unconverged set.
bool spectral_verdict(const ComplexRootSet& roots, const IntPolynomial& source,
                      const RootFinderConfig& cfg = {});
bool spectral_verdict(const ComplexRootSet& roots, const RootFinderConfig& cfg = {});

/// Greedy multiset matching: true if every expected value has a distinct
/// partner in `actual` within `tol`. Sizes must agree.
bool multiset_match(std::span<const std::complex<double>> expected,
                    std::span<const std::complex<double>> actual, double tol);

}  // namespace ringspec
