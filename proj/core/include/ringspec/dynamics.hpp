#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringspec/matrix.hpp"
#include "ringspec/ring_digraph.hpp"
#include "ringspec/rootfind.hpp"

namespace ringspec {

struct SimConfig {
  double step = 0.01;
  double horizon = 40.0;
  /// Used when set; otherwise a uniform [-1, 1) state drawn from `seed`.
  std::optional<std::vector<double>> initial_state;
  std::uint64_t seed = 1;
  /// Observable is x[first] - x[second] (0-based).
  std::pair<std::size_t, std::size_t> observable{0, 1};
};

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  std::vector<double> observable;
};

/// Gershgorin bound on the spectral radius of L.
double spectral_radius_bound(const RealMatrix& l);

/// Largest step accepted by simulate: 0.1 / max(4, spectral_radius_bound).
double max_stable_step(const RealMatrix& l);

/// Classical fourth-order Runge-Kutta on x' = -L x with a fixed step.
/// Throws std::invalid_argument when L is not a square matrix with zero row
/// sums, the step exceeds max_stable_step, or the initial state has the
/// wrong length. The observable falls back to x[0] when n == 1.
Trajectory simulate(const RealMatrix& l, const SimConfig& cfg);

/// omega = pi / mean spacing of zero crossings of the observable minus its
/// final value, ignoring the tail below 1e-10 of the peak magnitude.
/// Empty when fewer than three crossings remain.
std::optional<double> dominant_frequency(const Trajectory& t);

struct OscillationReport {
  int n = 0;
  std::string mask;
  bool essentially_cyclic = false;
  /// |Im| of the non-real eigenvalue with the smallest real part.
  std::optional<double> predicted_frequency;
  /// Real part of that eigenvalue.
  std::optional<double> predicted_decay_rate;
  std::optional<double> measured_frequency;
  /// |measured - predicted| / predicted when both exist.
  std::optional<double> relative_deviation;
};

OscillationReport oscillation_report(const RingDigraph& g, const SimConfig& cfg,
                                     const RootFinderConfig& roots = {});

/// Header "t,x_1,...,x_n", 17 significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory& t);

}  // namespace ringspec
