#include "ringspec/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringspec {
namespace {

void check_parity(int parity) {
  if (parity != 0 && parity != 1) {
    throw std::invalid_argument("parity must be 0 or 1");
  }
}

double four_cos_sq(double numerator, double denominator) {
  const double c = std::cos(std::numbers::pi * numerator / denominator);
  return 4.0 * c * c;
}

int sign_power(unsigned e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

IntPolynomial chebyshev_u(unsigned n) {
  const IntPolynomial x = IntPolynomial::monomial(1);
  IntPolynomial prev = IntPolynomial::constant(1);
  if (n == 0) return prev;
  IntPolynomial cur = x;
  for (unsigned k = 2; k <= n; ++k) {
    IntPolynomial next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial z_poly(unsigned n) {
  const IntPolynomial x_minus_2{-2, 1};
  IntPolynomial prev = IntPolynomial::constant(1);
  if (n == 0) return prev;
  IntPolynomial cur{-1, 1};
  for (unsigned k = 2; k <= n; ++k) {
    IntPolynomial next = x_minus_2 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntMatrix z_matrix(unsigned n) {
  IntMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i) {
    m(i, i) = (i + 1 == n) ? 1 : 2;
    if (i > 0) m(i, i - 1) = -1;
    if (i + 1 < n) m(i, i + 1) = -1;
  }
  return m;
}

std::vector<double> z_shift_roots(unsigned n, int parity) {
  check_parity(parity);
  if (n == 0) throw std::invalid_argument("z_shift_roots: n must be >= 1");
  std::vector<double> roots;
  roots.reserve(n);
  for (unsigned k = 1; k <= n; ++k) {
    const int s = sign_power(k + static_cast<unsigned>(parity));
    roots.push_back(four_cos_sq(k, 2.0 * n + 1 + s));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> z_roots(unsigned n) {
  std::vector<double> roots;
  roots.reserve(n);
  for (unsigned k = 1; k <= n; ++k) roots.push_back(four_cos_sq(k, 2.0 * n + 1));
  std::sort(roots.begin(), roots.end());
  return roots;
}

LandmarkRoots landmark_roots(unsigned m) {
  if (m == 0) throw std::invalid_argument("landmark_roots: m must be >= 1");
  LandmarkRoots r;
  r.m = m;
  r.x1 = four_cos_sq(m, 2.0 * m + 1);
  r.u1 = four_cos_sq(m, 2.0 * m + 2);
  if (m > 1) {
    r.x2 = four_cos_sq(m - 1, 2.0 * m + 1);
    r.u2 = four_cos_sq(m - 1, 2.0 * m);
  }
  return r;
}

std::string_view to_string(ProductCase c) {
  switch (c) {
    case ProductCase::kSingleFactor: return "single-factor";
    case ProductCase::kEqualPair: return "equal-pair";
    case ProductCase::kAdjacentPair: return "adjacent-pair";
    case ProductCase::kNonReal: return "non-real";
  }
  return "non-real";
}

RealRootVerdict classify_product_real(std::span<const unsigned> ks, int parity) {
  check_parity(parity);
  if (ks.empty()) throw std::invalid_argument("classify_product_real: empty factor list");
  if (std::any_of(ks.begin(), ks.end(), [](unsigned k) { return k == 0; })) {
    throw std::invalid_argument("classify_product_real: factor indices must be >= 1");
  }

  RealRootVerdict v;
  std::vector<double> roots;
  const auto plus_minus = [&roots](double r) {
    roots.push_back(r);
    roots.push_back(-r);
  };

  if (ks.size() == 1) {
    const unsigned j = ks[0];
    for (unsigned k = 1; k <= j; ++k) {
      const int s = sign_power(k + static_cast<unsigned>(parity));
      plus_minus(2.0 * std::cos(std::numbers::pi * k / (2.0 * j + 1 + s)));
    }
    v.product_case = ProductCase::kSingleFactor;
  } else if (ks.size() == 2 && ks[0] == ks[1] && parity == 1) {
    const unsigned j = ks[0];
    for (unsigned k = 1; k <= j; ++k) {
      plus_minus(2.0 * std::cos(std::numbers::pi * k / (2.0 * j)));
      plus_minus(2.0 * std::cos(std::numbers::pi * k / (2.0 * j + 2)));
    }
    v.product_case = ProductCase::kEqualPair;
  } else if (ks.size() == 2 && parity == 0 &&
             (ks[0] + 1 == ks[1] || ks[1] + 1 == ks[0])) {
    // Every root is double; listing +/- over k = 1..2j-1 visits each twice.
    const unsigned j = std::max(ks[0], ks[1]);
    for (unsigned k = 1; k + 1 <= 2 * j; ++k) {
      plus_minus(2.0 * std::cos(std::numbers::pi * k / (2.0 * j)));
    }
    v.product_case = ProductCase::kAdjacentPair;
  } else {
    return v;
  }

  std::sort(roots.begin(), roots.end());
  v.all_real = true;
  v.roots = std::move(roots);
  return v;
}

IntPolynomial chebyshev_product_shift(std::span<const unsigned> ks, int parity) {
  check_parity(parity);
  IntPolynomial prod = IntPolynomial::constant(1);
  for (unsigned k : ks) prod *= chebyshev_u(2 * k);
  return poly_shift_const(prod, parity == 0 ? 1 : -1);
}

double product_bound_witness(std::span<const unsigned> ks) {
  if (ks.size() < 2) {
    throw std::invalid_argument("product_bound_witness: need at least two factors");
  }
  if (std::any_of(ks.begin(), ks.end(), [](unsigned k) { return k == 0; })) {
    throw std::invalid_argument("product_bound_witness: factor indices must be >= 1");
  }
  if (ks.size() == 2) {
    const unsigned lo = std::min(ks[0], ks[1]);
    const unsigned hi = std::max(ks[0], ks[1]);
    if (hi - lo <= 1) {
      throw std::invalid_argument(
          "product_bound_witness: two factors must differ by more than one");
    }
  }
  std::vector<double> all;
  for (unsigned k : ks) {
    const auto r = z_roots(k);
    all.insert(all.end(), r.begin(), r.end());
  }
  std::sort(all.begin(), all.end());
  return all.at(2);
}

}  // namespace ringspec
