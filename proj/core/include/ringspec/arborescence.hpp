#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "ringspec/matrix.hpp"
#include "ringspec/polynomial.hpp"
#include "ringspec/ring_digraph.hpp"

namespace ringspec {

/// Spanning in-arborescence (converging tree) counts of a digraph.
/// Vertices are 0-based here; ring vertex v is index v - 1.
struct ArborescenceCount {
  std::vector<mpz_class> per_root;
  mpz_class total;
};

/// per_root[i] is the principal minor of L with row and column i removed.
/// Throws std::invalid_argument if L is not square with zero row sums.
ArborescenceCount count_by_cofactor(const IntMatrix& laplacian);

/// (i^2 + n + (n - i)^2) / 2 for 1 <= i < n: the total number of converging
/// trees of the ring digraph with reverse arcs (i, i+1) and (n, 1) removed.
mpz_class t_closed_form(int n, int i);

/// Counts out-arc choices forming a tree converging to `root`.
/// `out[v]` lists the heads of the arcs leaving v. Rejects more than 9 vertices.
mpz_class brute_force_count(const std::vector<std::vector<int>>& out, int root);
mpz_class brute_force_count(const RingDigraph& g, int root);

/// Out-arc lists of a ring digraph, 0-based.
std::vector<std::vector<int>> out_arcs(const RingDigraph& g);

/// Left side (product of 2cos factors) and right side of the middle-root
/// tree-count identity: n(n+2)/4 for even n, (n+1)^2/4 for odd n. n >= 4.
std::pair<double, double> trig_product_check(int n);

/// Laplacian of the undirected path on n vertices, n >= 1:
/// tridiagonal, diagonal (1, 2, ..., 2, 1), -1 off the diagonal.
IntMatrix path_matrix(int n);

/// Characteristic polynomial of path_matrix(n), which equals Z_n + Z_{n-1},
/// and its roots 4 cos^2(pi k / 2n), k = 1..n, ascending.
std::pair<IntPolynomial, std::vector<double>> path_matrix_spectrum(int n);

/// Laplacian of the undirected cycle on n >= 3 vertices and its spectrum
/// 4 sin^2(pi k / n), k = 0..n-1, ascending. Kept next to the path variant
/// for comparison.
std::pair<IntMatrix, std::vector<double>> cycle_matrix_spectrum(int n);

}  // namespace ringspec
