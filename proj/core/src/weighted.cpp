#include "ringspec/weighted.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace ringspec {

WeightMatrix::WeightMatrix(RealMatrix w) : w_(std::move(w)) {
  if (!w_.is_square()) throw std::invalid_argument("WeightMatrix: must be square");
  for (std::size_t i = 0; i < w_.rows(); ++i) {
    for (std::size_t j = 0; j < w_.cols(); ++j) {
      const double v = w_(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("WeightMatrix: weights must be finite and >= 0");
      }
      if (i == j && v != 0.0) throw std::invalid_argument("WeightMatrix: nonzero diagonal");
    }
  }
}

RealMatrix weighted_laplacian(const WeightMatrix& w) {
  const std::size_t n = w.size();
  RealMatrix l(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double out = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      l(i, j) = -w(i, j);
      out += w(i, j);
    }
    l(i, i) = out;
  }
  return l;
}

WeightMatrix k3_matrix(const K3Weights& k) {
  return WeightMatrix(RealMatrix{{0.0, k.b, k.gamma}, {k.alpha, 0.0, k.c}, {k.a, k.beta, 0.0}});
}

K3Weights k3_weights(const WeightMatrix& w) {
  if (w.size() != 3) throw std::invalid_argument("k3_weights: need a 3 x 3 weight matrix");
  return K3Weights{w(2, 0), w(0, 1), w(1, 2), w(1, 0), w(2, 1), w(0, 2)};
}

double k3_discriminant(const WeightMatrix& w) {
  const K3Weights k = k3_weights(w);
  const double s = k.a + k.b + k.c + k.alpha + k.beta + k.gamma;
  const double e = k.a * k.b + k.b * k.c + k.c * k.a + k.alpha * k.beta + k.beta * k.gamma +
                   k.gamma * k.alpha + k.a * k.alpha + k.b * k.beta + k.c * k.gamma;
  return s * s - 4.0 * e;
}

bool strict_triangle(double x, double y, double z) {
  return x < y + z && y < x + z && z < x + y;
}

bool k3_classify(const WeightMatrix& w) {
  const K3Weights k = k3_weights(w);
  const std::array<double, 3> diff{k.a - k.alpha, k.b - k.beta, k.c - k.gamma};
  const auto all_of_sign = [&](double sign) {
    return std::all_of(diff.begin(), diff.end(), [&](double d) { return sign * d >= 0.0; });
  };
  for (double sign : {1.0, -1.0}) {
    if (!all_of_sign(sign)) continue;
    if (strict_triangle(std::sqrt(sign * diff[0]), std::sqrt(sign * diff[1]),
                        std::sqrt(sign * diff[2]))) {
      return true;
    }
  }
  return false;
}

std::pair<double, double> k3_boundary_roots(double b, double c, double beta, double gamma) {
  const double db = b - beta;
  const double dc = c - gamma;
  if (!(db * dc > 0.0)) {
    throw std::invalid_argument("k3_boundary_roots: need (b - beta)(c - gamma) > 0");
  }
  const double sign = db > 0.0 ? 1.0 : -1.0;
  const double rb = std::sqrt(sign * db);
  const double rc = std::sqrt(sign * dc);
  const double lo = sign * (rb - rc) * (rb - rc);
  const double hi = sign * (rb + rc) * (rb + rc);
  return {std::min(lo, hi), std::max(lo, hi)};
}

double cubic_discriminant(double b, double c, double d) {
  return 18.0 * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * c * c * c -
         27.0 * d * d;
}

RealMatrix fig6_laplacian(double p, double y) {
  RealMatrix w{{0.0, 1.0, 0.0, p}, {0.0, 0.0, y, 0.0}, {0.0, 0.0, 0.0, 1.0}, {1.0, 0.0, 0.0, 0.0}};
  return weighted_laplacian(WeightMatrix(std::move(w)));
}

namespace {

void check_fig6(double p, double y) {
  if (!(p > 0.0) || !(y > 0.0)) {
    throw std::invalid_argument("fig6: p and y must be positive");
  }
}

}  // namespace

double fig6_discriminant(double p, double y) {
  check_fig6(p, y);
  const double q = p + 3.0;
  return cubic_discriminant(-(y + q), q * y + q, -(q * y + 1.0));
}

double fig6_discriminant_expanded(double p, double y) {
  check_fig6(p, y);
  const double q = p + 3.0;
  const double q2 = q * q;
  const double q3 = q2 * q;
  const double qm3 = q - 3.0;
  return q * (q - 4.0) * std::pow(y, 4) - (2.0 * q3 - 8.0 * q2 + 4.0) * std::pow(y, 3) +
         q * (q3 - 2.0 * q2 - 8.0 * q + 6.0) * y * y - 2.0 * q * (q + 2.0) * qm3 * qm3 * y +
         (q + 1.0) * qm3 * qm3 * qm3;
}

std::pair<double, double> fig6_boundary(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("fig6_boundary: p must be positive");
  const double y_max = 4.0 * (p + 3.0);
  const auto f = [p](double y) { return fig6_discriminant(p, y); };
  const auto bisect = [&f](double lo, double hi) {
    const bool lo_negative = f(lo) < 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      if ((f(mid) < 0.0) == lo_negative) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  constexpr int kSamples = 20000;
  double prev_y = y_max / kSamples;
  double prev = f(prev_y);
  std::optional<double> enter;
  for (int s = 2; s <= kSamples; ++s) {
    const double y = y_max * s / kSamples;
    const double v = f(y);
    if (prev >= 0.0 && v < 0.0 && !enter) {
      enter = bisect(prev_y, y);
    } else if (prev < 0.0 && v >= 0.0 && enter) {
      return {*enter, bisect(prev_y, y)};
    }
    prev_y = y;
    prev = v;
  }
  throw std::runtime_error(enter ? "fig6_boundary: the negative window does not close on (0, 4q]"
                                 : "fig6_boundary: no sign change of the discriminant on (0, 4q]");
}

RealMatrix c4_laplacian(double a, double x) {
  RealMatrix w(4, 4, 0.0);
  w(0, 1) = kCycle4FixedLow;
  w(1, 2) = a;
  w(2, 3) = kCycle4FixedHigh;
  w(3, 0) = x;
  return weighted_laplacian(WeightMatrix(std::move(w)));
}

double c4_discriminant(double a, double x) {
  const double s = kCycle4FixedLow + kCycle4FixedHigh;
  const double pr = kCycle4FixedLow * kCycle4FixedHigh;
  return cubic_discriminant(-(s + x + a), pr + s * x + s * a + a * x,
                            -(pr * x + pr * a + s * a * x));
}

double c4_boundary_polynomial(double a, double x) {
  const double a2 = a * a;
  const double x2 = x * x;
  const double xa = x - a;
  return -a2 * x2 * xa * xa +
         26.0 * (x + a) * (a * x * xa * xa + 25.0 * (x2 + a2) + 58.0 * a * x + 900.0) +
         870.0 * a2 * x2 - 241.0 * (x2 + a2) * (2.0 * a * x + 25.0) -
         25.0 * (x2 * x2 + a2 * a2) - 3934.0 * a * x - 32400.0;
}

bool c4_triangle_ok(double a, double x) {
  std::array<double, 4> w{kCycle4FixedLow, kCycle4FixedHigh, a, x};
  std::sort(w.begin(), w.end());
  return strict_triangle(std::sqrt(w[0]), std::sqrt(w[1]), std::sqrt(w[2]));
}

std::vector<CyclicityRegionSample> c4_scan(std::span<const double> a_grid,
                                           std::span<const double> x_grid) {
  std::vector<CyclicityRegionSample> out;
  out.reserve(a_grid.size() * x_grid.size());
  for (double a : a_grid) {
    for (double x : x_grid) {
      if (!(a >= 0.0) || !(x >= 0.0)) {
        throw std::invalid_argument("c4_scan: grid values must be nonnegative");
      }
      const double d = c4_discriminant(a, x);
      out.push_back({a, x, d, d < 0.0, c4_triangle_ok(a, x)});
    }
  }
  return out;
}

std::vector<double> uniform_grid(double max, int steps) {
  if (steps < 1 || !(max >= 0.0)) throw std::invalid_argument("uniform_grid: bad range");
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) g.push_back(max * i / steps);
  return g;
}

void write_c4_csv(std::ostream& os, std::span<const CyclicityRegionSample> samples) {
  os << "sqrt_a,sqrt_x,discriminant,cyclic,triangle_ok\n";
  char buf[128];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%d,%d\n", std::sqrt(s.a), std::sqrt(s.x),
                  s.discriminant, s.essentially_cyclic ? 1 : 0, s.triangle_ok ? 1 : 0);
    os << buf;
  }
}

}  // namespace ringspec
