#include "ringspec/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

namespace ringspec {
namespace {

void apply_neg(const RealMatrix& l, const std::vector<double>& x, std::vector<double>& out) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += l(i, j) * x[j];
    out[i] = -s;
  }
}

}  // namespace

double spectral_radius_bound(const RealMatrix& l) {
  double bound = 0.0;
  for (std::size_t i = 0; i < l.rows(); ++i) {
    double r = 0.0;
    for (double v : l.row(i)) r += std::abs(v);
    bound = std::max(bound, r);
  }
  return bound;
}

double max_stable_step(const RealMatrix& l) {
  return 0.1 / std::max(4.0, spectral_radius_bound(l));
}

Trajectory simulate(const RealMatrix& l, const SimConfig& cfg) {
  const std::size_t n = l.rows();
  if (!l.is_square() || n == 0) throw std::invalid_argument("simulate: L must be square");
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    double scale = 0.0;
    for (double v : l.row(i)) {
      if (!std::isfinite(v)) throw std::invalid_argument("simulate: non-finite L entry");
      s += v;
      scale += std::abs(v);
    }
    if (std::abs(s) > 1e-12 * std::max(1.0, scale)) {
      throw std::invalid_argument("simulate: L must have zero row sums");
    }
  }
  if (!(cfg.step > 0.0) || !(cfg.horizon > 0.0)) {
    throw std::invalid_argument("simulate: step and horizon must be positive");
  }
  if (cfg.step > max_stable_step(l)) {
    throw std::invalid_argument("simulate: step exceeds the stability limit " +
                                std::to_string(max_stable_step(l)));
  }

  std::vector<double> x;
  if (cfg.initial_state) {
    x = *cfg.initial_state;
    if (x.size() != n) throw std::invalid_argument("simulate: initial state has wrong length");
    for (double v : x) {
      if (!std::isfinite(v)) throw std::invalid_argument("simulate: non-finite initial state");
    }
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    x.resize(n);
    for (double& v : x) v = dist(rng);
  }

  auto [oa, ob] = cfg.observable;
  if (n == 1) {
    oa = 0;
    ob = 0;
  }
  if (oa >= n || ob >= n) throw std::invalid_argument("simulate: observable index out of range");
  const auto observe = [&, oa = oa, ob = ob](const std::vector<double>& s) {
    return n == 1 ? s[0] : s[oa] - s[ob];
  };

  const auto steps = static_cast<std::size_t>(std::llround(cfg.horizon / cfg.step));
  Trajectory t;
  t.times.reserve(steps + 1);
  t.states.reserve(steps + 1);
  t.observable.reserve(steps + 1);
  t.times.push_back(0.0);
  t.states.push_back(x);
  t.observable.push_back(observe(x));

  const double h = cfg.step;
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (std::size_t s = 1; s <= steps; ++s) {
    apply_neg(l, x, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
    apply_neg(l, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
    apply_neg(l, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
    apply_neg(l, tmp, k4);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(x[i])) throw std::runtime_error("simulate: state overflow");
    }
    t.times.push_back(static_cast<double>(s) * h);
    t.states.push_back(x);
    t.observable.push_back(observe(x));
  }
  return t;
}

std::optional<double> dominant_frequency(const Trajectory& t) {
  const auto& y = t.observable;
  if (y.size() < 2 || t.times.size() != y.size()) return std::nullopt;
  const double last = y.back();
  double peak = 0.0;
  for (double v : y) peak = std::max(peak, std::abs(v - last));
  if (peak == 0.0) return std::nullopt;

  std::size_t end = y.size();
  while (end > 0 && std::abs(y[end - 1] - last) < 1e-10 * peak) --end;

  std::vector<double> crossings;
  for (std::size_t i = 1; i < end; ++i) {
    const double a = y[i - 1] - last;
    const double b = y[i] - last;
    if ((a < 0.0 && b >= 0.0) || (a > 0.0 && b <= 0.0)) {
      const double frac = a / (a - b);
      crossings.push_back(t.times[i - 1] + frac * (t.times[i] - t.times[i - 1]));
    }
  }
  if (crossings.size() < 3) return std::nullopt;
  const double mean_spacing =
      (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
  return std::numbers::pi / mean_spacing;
}

OscillationReport oscillation_report(const RingDigraph& g, const SimConfig& cfg,
                                     const RootFinderConfig& roots) {
  OscillationReport r;
  r.n = g.size();
  r.mask = g.mask_string();
  r.essentially_cyclic = classify_exact(g).essentially_cyclic;

  const ComplexRootSet spectrum = spectrum_numeric(g, roots);
  for (const auto& z : spectrum.roots) {
    if (std::abs(z.imag()) <= roots.imag_threshold) continue;
    if (!r.predicted_decay_rate || z.real() < *r.predicted_decay_rate) {
      r.predicted_frequency = std::abs(z.imag());
      r.predicted_decay_rate = z.real();
    }
  }

  const Trajectory t = simulate(to_real(laplacian(g)), cfg);
  r.measured_frequency = dominant_frequency(t);
  if (r.predicted_frequency && r.measured_frequency) {
    r.relative_deviation =
        std::abs(*r.measured_frequency - *r.predicted_frequency) / *r.predicted_frequency;
  }
  return r;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& t) {
  const std::size_t n = t.states.empty() ? 0 : t.states.front().size();
  os << 't';
  for (std::size_t i = 1; i <= n; ++i) os << ",x_" << i;
  os << '\n';
  char buf[64];
  for (std::size_t s = 0; s < t.times.size(); ++s) {
    std::snprintf(buf, sizeof buf, "%.17g", t.times[s]);
    os << buf;
    for (double v : t.states[s]) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace ringspec
