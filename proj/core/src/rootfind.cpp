#include "ringspec/rootfind.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ringspec {
namespace {

namespace mp = boost::multiprecision;

// ~166 and ~399 bits of mantissa.
using Mp50 = mp::number<mp::mpfr_float_backend<50>, mp::et_off>;
using Mp120 = mp::number<mp::mpfr_float_backend<120>, mp::et_off>;

template <typename R>
struct Cx {
  R re{};
  R im{};
};

template <typename R>
Cx<R> operator+(const Cx<R>& a, const Cx<R>& b) { return {a.re + b.re, a.im + b.im}; }
template <typename R>
Cx<R> operator-(const Cx<R>& a, const Cx<R>& b) { return {a.re - b.re, a.im - b.im}; }
template <typename R>
Cx<R> operator*(const Cx<R>& a, const Cx<R>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <typename R>
R norm2(const Cx<R>& a) { return a.re * a.re + a.im * a.im; }
template <typename R>
bool is_zero(const Cx<R>& a) { return a.re == 0 && a.im == 0; }
template <typename R>
Cx<R> reciprocal(const Cx<R>& a) {
  const R d = norm2(a);
  return {a.re / d, -a.im / d};
}
template <typename R>
Cx<R> operator/(const Cx<R>& a, const Cx<R>& b) { return a * reciprocal(b); }

template <typename R>
double to_double(const R& v) { return static_cast<double>(v); }

template <typename R>
double magnitude(const Cx<R>& a) {
  using std::sqrt;
  return to_double(sqrt(norm2(a)));
}

template <typename R>
Cx<R> from_std(std::complex<double> z) { return {R(z.real()), R(z.imag())}; }
template <typename R>
std::complex<double> to_std(const Cx<R>& z) { return {to_double(z.re), to_double(z.im)}; }

template <typename R>
R from_mpz(const mpz_class& z) {
  if constexpr (std::is_floating_point_v<R>) {
    // mpz -> long double without going through double's exponent range.
    return static_cast<R>(z.get_d());
  } else {
    R out;
    mpfr_set_z(out.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return out;
  }
}

/// p(z) and p'(z) by Horner; coefficients ascending.
template <typename R>
void horner(const std::vector<R>& a, const Cx<R>& z, Cx<R>& p, Cx<R>& dp) {
  p = {a.back(), R(0)};
  dp = {R(0), R(0)};
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + Cx<R>{a[k], R(0)};
  }
}

template <typename R>
struct AberthResult {
  std::vector<Cx<R>> z;
  bool converged = false;
  int iterations = 0;
};

/// In-place (Gauss-Seidel) Aberth-Ehrlich sweeps over monic coefficients.
/// With stall_below > 0, also stops once the largest step is under
/// stall_below and has not improved for 20 sweeps.
template <typename R>
AberthResult<R> aberth_sweeps(const std::vector<R>& monic, std::vector<Cx<R>> z,
                              double tol, int max_iterations, double stall_below = 0.0) {
  AberthResult<R> out;
  const std::size_t d = z.size();
  double best = std::numeric_limits<double>::infinity();
  int since_best = 0;
  for (int it = 1; it <= max_iterations; ++it) {
    double worst = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < d; ++i) {
      Cx<R> p, dp;
      horner(monic, z[i], p, dp);
      if (is_zero(p)) continue;
      Cx<R> s{R(0), R(0)};
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        const Cx<R> diff = z[i] - z[j];
        if (!is_zero(diff)) s = s + reciprocal(diff);
      }
      const Cx<R> denom = dp / p - s;
      Cx<R> w;
      if (is_zero(denom)) {
        w = {R(1e-8), R(1e-8)};
      } else {
        w = reciprocal(denom);
      }
      z[i] = z[i] - w;
      const double step = magnitude(w) / std::max(1.0, magnitude(z[i]));
      if (!std::isfinite(step)) finite = false;
      worst = std::max(worst, step);
    }
    out.iterations = it;
    if (!finite) break;
    if (worst < tol) {
      out.converged = true;
      break;
    }
    if (worst < best) {
      best = worst;
      since_best = 0;
    } else if (++since_best >= 20 && best < stall_below) {
      break;
    }
  }
  out.z = std::move(z);
  return out;
}

/// Fujiwara's bound on the root moduli of a monic polynomial.
template <typename R>
double fujiwara_radius(const std::vector<R>& monic) {
  const std::size_t d = monic.size() - 1;
  double r = 0.0;
  for (std::size_t i = 1; i <= d; ++i) {
    double a = std::abs(to_double(monic[d - i]));
    if (i == d) a /= 2.0;
    if (a > 0) r = std::max(r, std::pow(a, 1.0 / static_cast<double>(i)));
  }
  return std::max(2.0 * r, 1e-3);
}

template <typename R>
std::vector<Cx<R>> circle_start(double radius, std::size_t d) {
  std::vector<Cx<R>> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(d) + 0.5;
    z[k] = {R(radius * std::cos(angle)), R(radius * std::sin(angle))};
  }
  return z;
}

template <typename R>
std::vector<R> monic_from_int(const IntPolynomial& p) {
  std::vector<R> a;
  a.reserve(p.coefficients().size());
  const R lead = from_mpz<R>(p.leading());
  for (const auto& c : p.coefficients()) a.push_back(from_mpz<R>(c) / lead);
  return a;
}

template <typename R>
std::vector<R> abs_coeffs(const IntPolynomial& p) {
  std::vector<R> a;
  for (const auto& c : p.coefficients()) a.push_back(from_mpz<R>(abs(c)));
  return a;
}

template <typename R>
double relative_residual(const IntPolynomial& p, std::complex<double> zd) {
  const std::vector<R> a = [&] {
    std::vector<R> v;
    for (const auto& c : p.coefficients()) v.push_back(from_mpz<R>(c));
    return v;
  }();
  const Cx<R> z = from_std<R>(zd);
  Cx<R> val, dval;
  horner(a, z, val, dval);
  using std::sqrt;
  const R mod = std::max(R(1), R(sqrt(norm2(z))));
  R scale = 0;
  R power = 1;
  for (const auto& c : a) {
    scale += abs(c) * power;
    power *= mod;
  }
  if (scale == 0) return 0.0;
  return to_double(R(sqrt(norm2(val)) / scale));
}

template <typename R>
ComplexRootSet polish_exact(const IntPolynomial& p, const std::vector<Cx<long double>>& seed,
                            const RootFinderConfig& cfg) {
  const std::vector<R> monic = monic_from_int<R>(p);
  std::vector<Cx<R>> z;
  z.reserve(seed.size());
  for (const auto& s : seed) z.push_back({R(s.re), R(s.im)});
  AberthResult<R> run = aberth_sweeps(monic, std::move(z), cfg.convergence_tol,
                                      cfg.max_iterations);
  ComplexRootSet out;
  out.converged = run.converged;
  out.iterations = run.iterations;
  for (const auto& r : run.z) {
    out.roots.push_back(to_std(r));
    out.residuals.push_back(relative_residual<R>(p, out.roots.back()));
  }
  return out;
}

/// Working precision for the exact-coefficient pass: enough to evaluate
/// p near its roots with ~64 spare bits after cancellation.
double needed_bits(const IntPolynomial& p, double root_radius) {
  return 64.0 + static_cast<double>(max_coefficient_bits(p)) +
         p.degree() * std::log2(std::max(1.0, root_radius));
}

template <typename R>
RefinedRoot newton_polish(const IntPolynomial& p, std::complex<double> z0, double stop) {
  std::vector<R> a;
  for (const auto& c : p.coefficients()) a.push_back(from_mpz<R>(c));
  Cx<R> z = from_std<R>(z0);
  const double origin_scale = std::max(1.0, std::abs(z0));
  for (int it = 0; it < 2000; ++it) {
    Cx<R> v, dv;
    horner(a, z, v, dv);
    if (is_zero(v)) break;
    if (is_zero(dv)) return {z0, false};
    const Cx<R> step = v / dv;
    z = z - step;
    const double zmag = magnitude(z);
    if (!std::isfinite(zmag) || magnitude(z - from_std<R>(z0)) > 0.5 * origin_scale) {
      return {z0, false};
    }
    if (magnitude(step) <= stop * std::max(1.0, zmag)) break;
  }
  return {to_std(z), true};
}

}  // namespace

void RootFinderConfig::validate() const {
  if (!(convergence_tol > 0) || !(imag_threshold > 0) || max_iterations <= 0) {
    throw std::invalid_argument("RootFinderConfig: tolerances must be positive");
  }
  if (!(imag_threshold > convergence_tol)) {
    throw std::invalid_argument(
        "RootFinderConfig: imag_threshold must exceed convergence_tol");
  }
}

ComplexRootSet aberth_roots(const IntPolynomial& p, const RootFinderConfig& cfg) {
  cfg.validate();
  if (p.degree() < 1) throw std::invalid_argument("aberth_roots: degree must be >= 1");
  const std::size_t d = static_cast<std::size_t>(p.degree());

  // Seed pass in long double; seeds only need to land in the right basins.
  // Monomial evaluation cancels badly at high degree, so a seed pass that
  // stalls is redone in multiprecision.
  const auto monic_ld = monic_from_int<long double>(p);
  const double start_radius = fujiwara_radius(monic_ld);
  auto seed = aberth_sweeps(monic_ld, circle_start<long double>(start_radius, d), 1e-12,
                            cfg.max_iterations, std::numeric_limits<double>::infinity());
  double radius = 1.0;
  for (const auto& z : seed.z) {
    const double m = magnitude(z);
    if (std::isfinite(m)) radius = std::max(radius, m);
  }
  const bool wide = needed_bits(p, std::max(radius, start_radius)) > 150.0;
  if (!seed.converged) {
    const auto redo = [&]<typename R>() {
      auto run = aberth_sweeps(monic_from_int<R>(p), circle_start<R>(start_radius, d), 1e-12,
                               cfg.max_iterations + 40 * static_cast<int>(d));
      AberthResult<long double> back;
      back.converged = run.converged;
      back.iterations = seed.iterations + run.iterations;
      for (const auto& z : run.z) {
        back.z.push_back({static_cast<long double>(z.re), static_cast<long double>(z.im)});
      }
      return back;
    };
    seed = wide ? redo.template operator()<Mp120>() : redo.template operator()<Mp50>();
  }
  for (auto& z : seed.z) {
    if (!std::isfinite(to_double(z.re)) || !std::isfinite(to_double(z.im))) z = {0.5L, 0.5L};
  }

  ComplexRootSet out = wide ? polish_exact<Mp120>(p, seed.z, cfg)
                            : polish_exact<Mp50>(p, seed.z, cfg);
  out.iterations += seed.iterations;
  return out;
}

ComplexRootSet aberth_roots(std::span<const double> ascending, const RootFinderConfig& cfg) {
  cfg.validate();
  std::size_t len = ascending.size();
  while (len > 0 && ascending[len - 1] == 0.0) --len;
  if (len < 2) throw std::invalid_argument("aberth_roots: degree must be >= 1");
  const std::size_t d = len - 1;
  std::vector<double> monic(ascending.begin(), ascending.begin() + static_cast<long>(len));
  const double lead = monic.back();
  for (auto& c : monic) c /= lead;

  auto run = aberth_sweeps(monic, circle_start<double>(fujiwara_radius(monic), d),
                           cfg.convergence_tol, cfg.max_iterations);
  ComplexRootSet out;
  out.converged = run.converged;
  out.iterations = run.iterations;
  for (const auto& z : run.z) {
    out.roots.push_back(to_std(z));
    Cx<double> v, dv;
    horner(monic, z, v, dv);
    double scale = 0.0, power = 1.0;
    for (double c : monic) {
      scale += std::abs(c) * power;
      power *= std::max(1.0, magnitude(z));
    }
    out.residuals.push_back(scale > 0 ? magnitude(v) / scale : 0.0);
  }
  // Double precision stalls at ~1e-16 relative on multiple roots; accept a
  // stall as convergence when every backward error is at rounding level.
  if (!out.converged) {
    out.converged = std::all_of(out.residuals.begin(), out.residuals.end(),
                                [](double r) { return r < 1e-12; });
  }
  return out;
}

RefinedRoot refine_root(const IntPolynomial& p, std::complex<double> z) {
  if (p.degree() < 1) throw std::invalid_argument("refine_root: degree must be >= 1");
  if (needed_bits(p, std::abs(z)) <= 150.0) return newton_polish<Mp50>(p, z, 1e-45);
  return newton_polish<Mp120>(p, z, 1e-100);
}

IntPolynomial char_poly_exact(const Matrix<mpz_class>& a) {
  if (!a.is_square()) throw std::invalid_argument("char_poly_exact: matrix must be square");
  const std::size_t n = a.rows();
  std::vector<mpz_class> c(n + 1, mpz_class(0));
  c[n] = 1;
  Matrix<mpz_class> m(n, n, mpz_class(0));
  Matrix<mpz_class> am(n, n, mpz_class(0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) am(i, j) = 0;
      for (std::size_t l = 0; l < n; ++l) {
        if (a(i, l) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (m(l, j) != 0) am(i, j) += a(i, l) * m(l, j);
        }
      }
      am(i, i) += c[n - k + 1];
    }
    std::swap(m, am);
    // c_{n-k} = -tr(A M_k) / k
    mpz_class tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (a(i, l) != 0) tr += a(i, l) * m(l, i);
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -q;
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial char_poly_exact(const IntMatrix& m) {
  Matrix<mpz_class> big(m.rows(), m.cols(), mpz_class(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      big(i, j) = mpz_class(static_cast<long>(m(i, j)));
  return char_poly_exact(big);
}

std::vector<double> char_poly_float(const RealMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("char_poly_float: matrix must be square");
  const std::size_t n = a.rows();
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  RealMatrix m(n, n, 0.0);
  RealMatrix am(n, n, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) s += a(i, l) * m(l, j);
        am(i, j) = s;
      }
      am(i, i) += c[n - k + 1];
    }
    std::swap(m, am);
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a(i, l) * m(l, i);
    c[n - k] = -tr / static_cast<double>(k);
  }
  return c;
}

mpz_class determinant_exact(Matrix<mpz_class> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant_exact: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  return sign > 0 ? mpz_class(m(n - 1, n - 1)) : mpz_class(-m(n - 1, n - 1));
}

mpz_class determinant_exact(const IntMatrix& m) {
  Matrix<mpz_class> big(m.rows(), m.cols(), mpz_class(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      big(i, j) = mpz_class(static_cast<long>(m(i, j)));
  return determinant_exact(std::move(big));
}

namespace {

bool verdict_impl(const ComplexRootSet& roots, const IntPolynomial* source,
                  const RootFinderConfig& cfg) {
  cfg.validate();
  if (!roots.converged) {
    throw AmbiguousSpectrumError("spectral verdict requested for an unconverged root set");
  }
  for (const auto& z : roots.roots) {
    if (std::abs(z.imag()) > cfg.imag_threshold) return true;
  }
  for (const auto& z : roots.roots) {
    const double im = std::abs(z.imag());
    if (im <= cfg.convergence_tol) continue;
    if (source == nullptr || !cfg.refine_suspicious) {
      throw AmbiguousSpectrumError("root with imaginary part in the ambiguous band");
    }
    const RefinedRoot r = refine_root(*source, z);
    const double refined = std::abs(r.value.imag());
    if (r.converged && refined > cfg.imag_threshold) return true;
    if (!r.converged || refined > cfg.convergence_tol) {
      throw AmbiguousSpectrumError("refinement left a root in the ambiguous band");
    }
  }
  return false;
}

}  // namespace

bool spectral_verdict(const ComplexRootSet& roots, const IntPolynomial& source,
                      const RootFinderConfig& cfg) {
  return verdict_impl(roots, &source, cfg);
}

bool spectral_verdict(const ComplexRootSet& roots, const RootFinderConfig& cfg) {
  return verdict_impl(roots, nullptr, cfg);
}

bool multiset_match(std::span<const std::complex<double>> expected,
                    std::span<const std::complex<double>> actual, double tol) {
  if (expected.size() != actual.size()) return false;
  std::vector<bool> used(actual.size(), false);
  for (const auto& e : expected) {
    std::size_t best = actual.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < actual.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(actual[j] - e);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == actual.size() || best_dist > tol) return false;
    used[best] = true;
  }
  return true;
}

}  // namespace ringspec
