#pragma once

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ringspec/matrix.hpp"

namespace ringspec {

/// Nonnegative arc weights with zero diagonal; w(i, j) > 0 iff arc i -> j.
class WeightMatrix {
 public:
  /// Throws std::invalid_argument on a non-square matrix, a nonzero
  /// diagonal, or a negative / non-finite entry.
  explicit WeightMatrix(RealMatrix w);

  std::size_t size() const noexcept { return w_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return w_(i, j); }
  const RealMatrix& weights() const noexcept { return w_; }

 private:
  RealMatrix w_;
};

/// Off-diagonal -w(i, j); diagonal makes each row sum to zero.
RealMatrix weighted_laplacian(const WeightMatrix& w);

/// Weights of the complete 3-vertex digraph in the layout
///   [[0, b, gamma], [alpha, 0, c], [a, beta, 0]].
struct K3Weights {
  double a = 0, b = 0, c = 0;
  double alpha = 0, beta = 0, gamma = 0;
};

WeightMatrix k3_matrix(const K3Weights& k);
/// Throws std::invalid_argument unless w is 3 x 3.
K3Weights k3_weights(const WeightMatrix& w);

/// Discriminant of the quadratic factor of the K3 characteristic polynomial.
/// Negative iff the digraph is essentially cyclic.
double k3_discriminant(const WeightMatrix& w);

/// Triangle criterion: sqrt(a-alpha), sqrt(b-beta), sqrt(c-gamma) (or the
/// negated differences) are real and satisfy the strict triangle inequality.
bool k3_classify(const WeightMatrix& w);

/// The two roots, in t = a - alpha, of k3_discriminant viewed as a quadratic,
/// via the square-root form (sqrt(b-beta) +- sqrt(c-gamma))^2 and its mirror
/// when both differences are negative. Requires (b-beta)(c-gamma) > 0.
std::pair<double, double> k3_boundary_roots(double b, double c, double beta, double gamma);

/// True iff the three values, taken as side lengths, satisfy all three strict
/// triangle inequalities.
bool strict_triangle(double x, double y, double z);

/// Standard discriminant of x^3 + b x^2 + c x + d:
/// 18bcd - 4b^3 d + b^2 c^2 - 4c^3 - 27d^2. Negative iff a conjugate pair.
double cubic_discriminant(double b, double c, double d);

/// Four-vertex ring digraph with weights p (reverse arc) and y.
RealMatrix fig6_laplacian(double p, double y);

/// Discriminant of the nonzero-root cubic of fig6_laplacian(p, y),
/// lambda^3 - (y+q) lambda^2 + (qy+q) lambda - (qy+1), q = p + 3.
/// Throws std::invalid_argument for p <= 0 or y <= 0.
double fig6_discriminant(double p, double y);

/// The same discriminant expanded as a quartic in y with q as a parameter.
double fig6_discriminant_expanded(double p, double y);

/// The two positive y bounding the window where fig6_discriminant < 0,
/// by sign scan and bisection on (0, 4q]. Throws std::runtime_error if no
/// bounded negative window exists on that range (every p <= 1).
std::pair<double, double> fig6_boundary(double p);

/// The fixed pair of weights on the 4-cycle; forced by the displayed
/// characteristic polynomial (w1 + w2 = 13, w1 w2 = 36).
inline constexpr double kCycle4FixedLow = 4.0;
inline constexpr double kCycle4FixedHigh = 9.0;

/// Weighted directed 4-cycle with weights (4, a, 9, x) in cyclic order.
RealMatrix c4_laplacian(double a, double x);

/// Discriminant of the cubic factor for the weighted 4-cycle.
double c4_discriminant(double a, double x);

/// Printed boundary polynomial of the cyclic region on the (a, x) plane.
/// Equals -c4_discriminant(a, x) identically.
double c4_boundary_polynomial(double a, double x);

/// Strict triangle inequality on square roots of the three smallest of the
/// four cycle weights {4, 9, a, x}.
bool c4_triangle_ok(double a, double x);

struct CyclicityRegionSample {
  double a = 0;
  double x = 0;
  double discriminant = 0;
  bool essentially_cyclic = false;
  bool triangle_ok = false;
};

std::vector<CyclicityRegionSample> c4_scan(std::span<const double> a_grid,
                                           std::span<const double> x_grid);

/// `steps` + 1 evenly spaced points on [0, max].
std::vector<double> uniform_grid(double max, int steps);

/// Header "sqrt_a,sqrt_x,discriminant,cyclic,triangle_ok"; 9 significant digits.
void write_c4_csv(std::ostream& os, std::span<const CyclicityRegionSample> samples);

}  // namespace ringspec
