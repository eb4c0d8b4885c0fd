#include "ringspec/ring_digraph.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "ringspec/chebyshev.hpp"

namespace ringspec {
namespace {

double four_cos_sq(double k, double denominator) {
  if (2.0 * k == denominator) return 0.0;
  const double c = std::cos(std::numbers::pi * k / denominator);
  return 4.0 * c * c;
}

/// exp(2 pi i k / n), exact at multiples of a quarter turn.
std::complex<double> unit_root(int k, int n) {
  const int m = ((k % n) + n) % n;
  if ((4 * m) % n == 0) {
    constexpr std::complex<double> quarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return quarter[4 * m / n];
  }
  const double t = 2.0 * std::numbers::pi * m / n;
  return {std::cos(t), std::sin(t)};
}

int sign_power(int e) { return e % 2 == 0 ? 1 : -1; }

Spectrum sorted(Spectrum s) {
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return s;
}

}  // namespace

RingDigraph::RingDigraph(int n, std::vector<bool> reverse_mask)
    : n_(n), mask_(std::move(reverse_mask)) {
  if (n_ < 3) throw std::invalid_argument("RingDigraph: n must be >= 3");
  if (mask_.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("RingDigraph: mask length must equal n");
  }
}

RingDigraph RingDigraph::from_mask(std::string_view mask) {
  std::vector<bool> bits;
  bits.reserve(mask.size());
  for (char ch : mask) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("RingDigraph: mask characters must be '0' or '1'");
    }
    bits.push_back(ch == '1');
  }
  const int n = static_cast<int>(bits.size());
  return RingDigraph(n, std::move(bits));
}

RingDigraph RingDigraph::parse(int n, std::string_view mask) {
  if (mask.size() != static_cast<std::size_t>(std::max(n, 0))) {
    throw std::invalid_argument("RingDigraph: mask length " + std::to_string(mask.size()) +
                                " does not match n = " + std::to_string(n));
  }
  return from_mask(mask);
}

RingDigraph RingDigraph::forward_cycle(int n) {
  return RingDigraph(n, std::vector<bool>(static_cast<std::size_t>(std::max(n, 0)), false));
}

RingDigraph RingDigraph::bidirectional(int n) {
  return RingDigraph(n, std::vector<bool>(static_cast<std::size_t>(std::max(n, 0)), true));
}

RingDigraph RingDigraph::one_missing(int n) {
  RingDigraph g = bidirectional(n);
  g.mask_[static_cast<std::size_t>(n - 1)] = false;
  return g;
}

RingDigraph RingDigraph::two_missing(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("two_missing: need 1 <= i < n");
  RingDigraph g = one_missing(n);
  g.mask_[static_cast<std::size_t>(i - 1)] = false;
  return g;
}

std::string RingDigraph::mask_string() const {
  std::string s;
  s.reserve(mask_.size());
  for (bool b : mask_) s.push_back(b ? '1' : '0');
  return s;
}

IntMatrix laplacian(const RingDigraph& g) {
  const std::size_t n = static_cast<std::size_t>(g.size());
  IntMatrix l(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t prev = (v + n - 1) % n;
    const std::size_t next = (v + 1) % n;
    l(v, prev) -= 1;
    l(v, v) += 1;
    if (g.mask()[v]) {
      l(v, next) -= 1;
      l(v, v) += 1;
    }
  }
  return l;
}

GapDecomposition decompose(const RingDigraph& g) {
  GapDecomposition d;
  std::vector<int> absent;
  for (int j = 1; j <= g.size(); ++j) {
    if (!g.has_reverse(j)) absent.push_back(j);
  }
  d.absent = static_cast<int>(absent.size());
  if (d.absent == 0 || d.absent == g.size()) return d;
  for (std::size_t k = 0; k + 1 < absent.size(); ++k) {
    d.gaps.push_back(absent[k + 1] - absent[k]);
  }
  d.gaps.push_back(absent.front() + g.size() - absent.back());
  return d;
}

RingDigraph canonical_form(const RingDigraph& g) {
  const std::string s = g.mask_string();
  std::string best = s;
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::string rot = s.substr(r) + s.substr(0, r);
    if (rot < best) best = std::move(rot);
  }
  return RingDigraph::from_mask(best);
}

IntPolynomial char_poly(const RingDigraph& g) {
  const int n = g.size();
  const GapDecomposition d = decompose(g);
  const mpz_class sign_n = sign_power(n);
  if (d.absent == 0) return char_poly_exact(laplacian(g));
  if (d.absent == n) {
    // (-1)^n ((1 - x)^n - 1)
    IntPolynomial one_minus_x{1, -1};
    IntPolynomial power = IntPolynomial::constant(1);
    for (int k = 0; k < n; ++k) power *= one_minus_x;
    return (power - IntPolynomial::constant(1)) * IntPolynomial::constant(sign_n);
  }
  IntPolynomial prod = IntPolynomial::constant(1);
  for (int gap : d.gaps) prod *= z_poly(static_cast<unsigned>(gap));
  return poly_shift_const(prod, -sign_n);
}

std::string_view to_string(CyclicityCase c) {
  switch (c) {
    case CyclicityCase::kCycle: return "T1-cycle";
    case CyclicityCase::kSymmetric: return "T1-symmetric";
    case CyclicityCase::kOneMissing: return "T2-one-missing";
    case CyclicityCase::kBalanced: return "T3-balanced";
    case CyclicityCase::kNearBalanced: return "T3-near-balanced";
    case CyclicityCase::kTwoMissingCyclic: return "T3-cyclic";
    case CyclicityCase::kManyMissingCyclic: return "T4-cyclic";
  }
  return "T4-cyclic";
}

CyclicityCase cyclicity_case_from_string(std::string_view label) {
  for (auto c : {CyclicityCase::kCycle, CyclicityCase::kSymmetric, CyclicityCase::kOneMissing,
                 CyclicityCase::kBalanced, CyclicityCase::kNearBalanced,
                 CyclicityCase::kTwoMissingCyclic, CyclicityCase::kManyMissingCyclic}) {
    if (to_string(c) == label) return c;
  }
  throw std::invalid_argument("unknown cyclicity case '" + std::string(label) + "'");
}

Classification classify_exact(const RingDigraph& g) {
  const int n = g.size();
  const GapDecomposition d = decompose(g);
  Classification c;
  if (d.absent == 0) {
    c.kind = CyclicityCase::kSymmetric;
    c.essentially_cyclic = false;
  } else if (d.absent == n) {
    c.kind = CyclicityCase::kCycle;
    c.essentially_cyclic = true;
  } else if (d.absent == 1) {
    c.kind = CyclicityCase::kOneMissing;
    c.essentially_cyclic = false;
  } else if (d.absent == 2) {
    const int spread = std::abs(d.gaps[0] - d.gaps[1]);
    if (spread == 0) {
      c.kind = CyclicityCase::kBalanced;
    } else if (spread == 1) {
      c.kind = CyclicityCase::kNearBalanced;
    } else {
      c.kind = CyclicityCase::kTwoMissingCyclic;
    }
    c.essentially_cyclic = spread > 1;
  } else {
    c.kind = CyclicityCase::kManyMissingCyclic;
    c.essentially_cyclic = true;
  }
  c.closed_form_spectrum = closed_form_spectrum(g);
  return c;
}

std::optional<Spectrum> closed_form_spectrum(const RingDigraph& g) {
  const int n = g.size();
  const GapDecomposition d = decompose(g);
  Spectrum s;
  if (d.absent == n) {
    for (int k = 1; k <= n; ++k) {
      const std::complex<double> w = 1.0 - unit_root(-k, n);
      s.emplace_back(w.real() + 0.0, w.imag() + 0.0);  // no negative zeros
    }
  } else if (d.absent == 0) {
    for (int k = 0; k < n; ++k) {
      const double t = std::sin(std::numbers::pi * k / n);
      s.emplace_back(4.0 * t * t, 0.0);
    }
  } else if (d.absent == 1) {
    for (int k = 1; k <= n; ++k) {
      s.emplace_back(four_cos_sq(k, 2.0 * n + 1 - sign_power(k + n)), 0.0);
    }
  } else if (d.absent == 2 && d.gaps[0] == d.gaps[1]) {
    for (int k = 1; k <= n / 2; ++k) {
      s.emplace_back(four_cos_sq(k, n), 0.0);
      s.emplace_back(four_cos_sq(k, n + 2), 0.0);
    }
  } else if (d.absent == 2 && std::abs(d.gaps[0] - d.gaps[1]) == 1) {
    for (int k = 1; k <= n; ++k) s.emplace_back(four_cos_sq(k, n + 1), 0.0);
  } else {
    return std::nullopt;
  }
  return sorted(std::move(s));
}

ComplexRootSet spectrum_numeric(const RingDigraph& g, const RootFinderConfig& cfg) {
  return aberth_roots(char_poly(g), cfg);
}

bool numeric_verdict(const RingDigraph& g, const RootFinderConfig& cfg) {
  const IntPolynomial p = char_poly(g);
  return spectral_verdict(aberth_roots(p, cfg), p, cfg);
}

bool has_repeated_values(const Spectrum& s, double tol) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (std::abs(s[i] - s[j]) <= tol) return true;
  return false;
}

}  // namespace ringspec
