#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace ringspec {

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored densely in ascending order: coefficient(i) is the
/// coefficient of x^i. The representation is kept normalized, so the leading
/// coefficient is nonzero except for the zero polynomial, which is stored as
/// the single coefficient 0.
class IntPolynomial {
 public:
  IntPolynomial();
  explicit IntPolynomial(std::vector<mpz_class> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const mpz_class& c);
  /// c * x^power
  static IntPolynomial monomial(unsigned power, const mpz_class& c = 1);
  /// Parses the JSON wire form: decimal coefficient strings, ascending.
  static IntPolynomial from_decimal_strings(const std::vector<std::string>& coeffs);

  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  mpz_class coefficient(std::size_t i) const;
  const mpz_class& leading() const noexcept { return coeffs_.back(); }

  /// Length minus one; the zero polynomial reports 0.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  bool is_monic() const noexcept { return coeffs_.back() == 1; }

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial operator-() const;

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// p(x^2).
  IntPolynomial substitute_square() const;
  /// q with q(x^2) == p(x); empty if p has a nonzero odd-power coefficient.
  std::optional<IntPolynomial> halve_exponents() const;

  /// Horner evaluation in double precision.
  double eval(double x) const;
  /// Exact evaluation at an integer point.
  mpz_class eval(const mpz_class& x) const;

  /// Coefficients rounded to double, ascending.
  std::vector<double> to_doubles() const;
  std::vector<std::string> to_decimal_strings() const;
  /// Human-readable form, e.g. "x^3 - 5*x^2 + 6*x - 1".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

/// Exact convolution product.
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
/// p + c.
IntPolynomial poly_shift_const(const IntPolynomial& p, const mpz_class& c);
/// Horner evaluation in double precision.
double eval_real(const IntPolynomial& p, double x);
/// Exact evaluation at an integer point.
mpz_class eval_exact(const IntPolynomial& p, const mpz_class& x);

/// Number of bits of the largest coefficient magnitude.
std::size_t max_coefficient_bits(const IntPolynomial& p);

}  // namespace ringspec
