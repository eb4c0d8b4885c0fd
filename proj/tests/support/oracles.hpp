#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library routines it is used to check.

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace ringspec::oracle {

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// P_n from the explicit binomial sum: sum_i (-1)^i C(n-i, i) x^(n-2i).
inline std::vector<mpz_class> chebyshev_explicit(unsigned n) {
  std::vector<mpz_class> c(n + 1, 0);
  for (unsigned i = 0; 2 * i <= n; ++i) {
    mpz_class term = binomial(n - i, i);
    c[n - 2 * i] = (i % 2 == 0) ? term : mpz_class(-term);
  }
  return c;
}

/// Z_n from the explicit binomial sum: sum_i (-1)^i C(2n-i, i) x^(n-i).
inline std::vector<mpz_class> z_explicit(unsigned n) {
  std::vector<mpz_class> c(n + 1, 0);
  for (unsigned i = 0; i <= n; ++i) {
    mpz_class term = binomial(2 * n - i, i);
    c[n - i] = (i % 2 == 0) ? term : mpz_class(-term);
  }
  return c;
}

/// Roots of the quadratic through (t_k, f(t_k)), k = 0, 1, 2, via divided
/// differences. Empty if the fitted quadratic has no real roots.
template <typename F>
std::optional<std::pair<double, double>> quadratic_roots_by_sampling(F f, double t0, double t1,
                                                                     double t2) {
  const double f0 = f(t0), f1 = f(t1), f2 = f(t2);
  const double d01 = (f1 - f0) / (t1 - t0);
  const double d12 = (f2 - f1) / (t2 - t1);
  const double a = (d12 - d01) / (t2 - t0);
  const double b = d01 - a * (t0 + t1);
  const double c = f0 - a * t0 * t0 - b * t0;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0 || a == 0.0) return std::nullopt;
  const double s = std::sqrt(disc);
  double r1 = (-b - s) / (2.0 * a);
  double r2 = (-b + s) / (2.0 * a);
  if (r1 > r2) std::swap(r1, r2);
  return std::make_pair(r1, r2);
}

using Dense = std::vector<std::vector<long double>>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<long double>(n, 0.0L));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// exp(-t A) x0 by scaling and squaring on a 30-term Taylor series.
inline std::vector<double> expm_apply(const std::vector<std::vector<double>>& a, double t,
                                      const std::vector<double>& x0) {
  const std::size_t n = a.size();
  long double norm = 0.0L;
  for (const auto& row : a) {
    long double r = 0.0L;
    for (double v : row) r += std::fabs(static_cast<long double>(v));
    norm = std::max(norm, r);
  }
  int squarings = 0;
  long double scale = t;
  while (norm * std::fabs(scale) > 0.25L) {
    scale /= 2.0L;
    ++squarings;
  }
  Dense m(n, std::vector<long double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = -scale * a[i][j];

  Dense result(n, std::vector<long double>(n, 0.0L));
  Dense term(n, std::vector<long double>(n, 0.0L));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = term[i][i] = 1.0L;
  for (int k = 1; k <= 30; ++k) {
    term = dense_mul(term, m);
    for (auto& row : term)
      for (auto& v : row) v /= k;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) result = dense_mul(result, result);

  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    long double acc = 0.0L;
    for (std::size_t j = 0; j < n; ++j) acc += result[i][j] * x0[j];
    out[i] = static_cast<double>(acc);
  }
  return out;
}

/// Exact value of sum_i c[i] x^i at the double x, rounded once at the end.
inline double exact_value(const std::vector<mpz_class>& c, double x) {
  const mpq_class q(x);
  mpq_class acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * q + c[i];
  return acc.get_d();
}

/// |p(x) / p'(x)| in exact rational arithmetic: how far Newton would move x.
/// Infinity when p'(x) = 0 and p(x) != 0.
inline double newton_offset(const std::vector<mpz_class>& c, double x) {
  const mpq_class q(x);
  mpq_class v = 0, dv = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    dv = dv * q + v;
    v = v * q + c[i];
  }
  if (v == 0) return 0.0;
  if (dv == 0) return std::numeric_limits<double>::infinity();
  return std::abs(mpq_class(v / dv).get_d());
}

/// Z_n(x) by the three-term recurrence Z_{k+1} = (x - 2) Z_k - Z_{k-1},
/// Z_0 = 1, Z_1 = x - 1.
inline double z_value(unsigned n, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = x - 1.0;
  for (unsigned k = 1; k < n; ++k) {
    const double next = (x - 2.0) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Number of labelled spanning trees of the undirected n-cycle.
inline long cycle_spanning_trees(int n) { return n; }

}  // namespace ringspec::oracle
