#include "ringspec/arborescence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ringspec/rootfind.hpp"

namespace ringspec {

ArborescenceCount count_by_cofactor(const IntMatrix& laplacian) {
  const std::size_t n = laplacian.rows();
  if (!laplacian.is_square() || n == 0) {
    throw std::invalid_argument("count_by_cofactor: need a nonempty square matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::int64_t v : laplacian.row(i)) s += v;
    if (s != 0) throw std::invalid_argument("count_by_cofactor: row sums must be zero");
  }

  ArborescenceCount out;
  out.per_root.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Matrix<mpz_class> minor(n - 1, n - 1);
    for (std::size_t i = 0, mi = 0; i < n; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, mj = 0; j < n; ++j) {
        if (j == r) continue;
        minor(mi, mj++) = static_cast<long>(laplacian(i, j));
      }
      ++mi;
    }
    mpz_class det = n == 1 ? mpz_class(1) : determinant_exact(std::move(minor));
    out.total += det;
    out.per_root.push_back(std::move(det));
  }
  return out;
}

mpz_class t_closed_form(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("t_closed_form: need 1 <= i < n");
  const mpz_class num = mpz_class(i) * i + n + mpz_class(n - i) * (n - i);
  if (num % 2 != 0) throw std::logic_error("t_closed_form: odd numerator");
  return num / 2;
}

std::vector<std::vector<int>> out_arcs(const RingDigraph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    out[static_cast<std::size_t>(v)].push_back((v + n - 1) % n);
    if (g.has_reverse(v + 1)) out[static_cast<std::size_t>(v)].push_back((v + 1) % n);
  }
  return out;
}

mpz_class brute_force_count(const std::vector<std::vector<int>>& out, int root) {
  const int n = static_cast<int>(out.size());
  if (n > 9) throw std::invalid_argument("brute_force_count: at most 9 vertices");
  if (root < 0 || root >= n) throw std::invalid_argument("brute_force_count: root out of range");
  for (int v = 0; v < n; ++v) {
    for (int h : out[static_cast<std::size_t>(v)]) {
      if (h < 0 || h >= n || h == v) throw std::invalid_argument("brute_force_count: bad arc");
    }
  }

  std::vector<int> others;
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    if (out[static_cast<std::size_t>(v)].empty()) return 0;
    others.push_back(v);
  }

  std::vector<std::size_t> choice(others.size(), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> state(static_cast<std::size_t>(n));
  mpz_class count = 0;
  for (;;) {
    for (std::size_t k = 0; k < others.size(); ++k) {
      const auto v = static_cast<std::size_t>(others[k]);
      parent[v] = out[v][choice[k]];
    }
    // 0 = unvisited, 1 = on current path, 2 = reaches root
    std::fill(state.begin(), state.end(), 0);
    state[static_cast<std::size_t>(root)] = 2;
    bool tree = true;
    for (int start : others) {
      std::vector<int> path;
      int v = start;
      while (state[static_cast<std::size_t>(v)] == 0) {
        state[static_cast<std::size_t>(v)] = 1;
        path.push_back(v);
        v = parent[static_cast<std::size_t>(v)];
      }
      if (state[static_cast<std::size_t>(v)] == 1) {
        tree = false;
        break;
      }
      for (int u : path) state[static_cast<std::size_t>(u)] = 2;
    }
    if (tree) ++count;

    std::size_t k = 0;
    while (k < others.size()) {
      if (++choice[k] < out[static_cast<std::size_t>(others[k])].size()) break;
      choice[k++] = 0;
    }
    if (k == others.size()) break;
  }
  return count;
}

mpz_class brute_force_count(const RingDigraph& g, int root) {
  return brute_force_count(out_arcs(g), root);
}

std::pair<double, double> trig_product_check(int n) {
  if (n < 4) throw std::invalid_argument("trig_product_check: n must be >= 4");
  const auto two_cos = [](int k, int d) { return 2.0 * std::cos(std::numbers::pi * k / d); };
  double lhs = 1.0;
  double rhs = 0.0;
  if (n % 2 == 0) {
    double prod = 1.0;
    for (int k = 1; k < n / 2; ++k) prod *= two_cos(k, n);
    for (int k = 1; k <= n / 2; ++k) prod *= two_cos(k, n + 2);
    lhs = prod * prod;
    rhs = n * (n + 2) / 4.0;
  } else {
    double prod = 1.0;
    for (int k = 1; k <= (n - 1) / 2; ++k) prod *= two_cos(k, n + 1);
    lhs = prod * prod * prod * prod;
    rhs = (n + 1) * (n + 1) / 4.0;
  }
  return {lhs, rhs};
}

IntMatrix path_matrix(int n) {
  if (n < 1) throw std::invalid_argument("path_matrix: n must be >= 1");
  const auto size = static_cast<std::size_t>(n);
  IntMatrix m(size, size);
  for (std::size_t i = 0; i + 1 < size; ++i) {
    m(i, i + 1) = -1;
    m(i + 1, i) = -1;
    m(i, i) += 1;
    m(i + 1, i + 1) += 1;
  }
  return m;
}

std::pair<IntPolynomial, std::vector<double>> path_matrix_spectrum(int n) {
  IntPolynomial p = char_poly_exact(path_matrix(n));
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const double c = std::cos(std::numbers::pi * k / (2.0 * n));
    roots.push_back(4.0 * c * c);
  }
  std::sort(roots.begin(), roots.end());
  return {std::move(p), std::move(roots)};
}

std::pair<IntMatrix, std::vector<double>> cycle_matrix_spectrum(int n) {
  IntMatrix l = laplacian(RingDigraph::bidirectional(n));
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double s = std::sin(std::numbers::pi * k / n);
    roots.push_back(4.0 * s * s);
  }
  std::sort(roots.begin(), roots.end());
  return {std::move(l), std::move(roots)};
}

}  // namespace ringspec
