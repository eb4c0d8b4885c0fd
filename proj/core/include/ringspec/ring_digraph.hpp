#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringspec/matrix.hpp"
#include "ringspec/polynomial.hpp"
#include "ringspec/rootfind.hpp"

namespace ringspec {

/// A Hamiltonian cycle plus any subset of the opposite cycle's arcs.
///
/// Vertices are 1..n. The forward cycle (1,n), (n,n-1), ..., (2,1) is always
/// present: every vertex v has the arc v -> v-1 (cyclically). Position j of the
/// reverse mask (1-based) holds the arc j -> j+1, with n -> 1 at j = n.
class RingDigraph {
 public:
  /// Throws std::invalid_argument unless n >= 3 and mask.size() == n.
  RingDigraph(int n, std::vector<bool> reverse_mask);

  /// Parses a mask string of '0'/'1' characters; n is its length.
  static RingDigraph from_mask(std::string_view mask);
  /// Like from_mask, but also checks the length against n.
  static RingDigraph parse(int n, std::string_view mask);

  /// Only the forward cycle.
  static RingDigraph forward_cycle(int n);
  /// Both cycles complete.
  static RingDigraph bidirectional(int n);
  /// Both cycles minus the reverse arc (n, 1).
  static RingDigraph one_missing(int n);
  /// Both cycles minus the reverse arcs (n, 1) and (i, i+1), 1 <= i < n.
  static RingDigraph two_missing(int n, int i);

  int size() const noexcept { return n_; }
  /// 1-based position, as in the mask string.
  bool has_reverse(int position) const { return mask_.at(static_cast<std::size_t>(position - 1)); }
  const std::vector<bool>& mask() const noexcept { return mask_; }
  std::string mask_string() const;

  friend bool operator==(const RingDigraph&, const RingDigraph&) = default;

 private:
  int n_;
  std::vector<bool> mask_;
};

/// Cyclic path lengths between consecutive absent reverse arcs.
struct GapDecomposition {
  int absent = 0;          // K
  std::vector<int> gaps;   // empty when K == 0 or K == n
};

IntMatrix laplacian(const RingDigraph& g);
GapDecomposition decompose(const RingDigraph& g);
/// Lexicographically smallest rotation of the mask.
RingDigraph canonical_form(const RingDigraph& g);

/// Exact Laplacian characteristic polynomial from the gap decomposition:
/// prod_k Z_{i_k} - (-1)^n for 1 <= K <= n-1, the directed-cycle form for
/// K == n, and the generic exact route for K == 0.
IntPolynomial char_poly(const RingDigraph& g);

enum class CyclicityCase {
  kCycle,              // "T1-cycle": no reverse arcs
  kSymmetric,          // "T1-symmetric": all reverse arcs
  kOneMissing,         // "T2-one-missing"
  kBalanced,           // "T3-balanced": two missing, equal gaps
  kNearBalanced,       // "T3-near-balanced": two missing, gaps differ by one
  kTwoMissingCyclic,   // "T3-cyclic"
  kManyMissingCyclic,  // "T4-cyclic"
};

std::string_view to_string(CyclicityCase c);
/// Inverse of to_string; throws std::invalid_argument on unknown labels.
CyclicityCase cyclicity_case_from_string(std::string_view label);

using Spectrum = std::vector<std::complex<double>>;

struct Classification {
  bool essentially_cyclic = false;
  CyclicityCase kind = CyclicityCase::kCycle;
  std::optional<Spectrum> closed_form_spectrum;
};

/// Exact essential-cyclicity decision from the gap structure alone.
Classification classify_exact(const RingDigraph& g);

/// Closed-form Laplacian spectrum where one is known, sorted by (re, im).
/// The fully bidirectional ring uses 4 sin^2(pi k / n), k = 0..n-1.
std::optional<Spectrum> closed_form_spectrum(const RingDigraph& g);

/// Roots of char_poly(g).
ComplexRootSet spectrum_numeric(const RingDigraph& g, const RootFinderConfig& cfg = {});

/// spectral_verdict on spectrum_numeric, refining against char_poly(g).
bool numeric_verdict(const RingDigraph& g, const RootFinderConfig& cfg = {});

/// True when the closed form repeats a value (used to pick comparison tolerance).
bool has_repeated_values(const Spectrum& s, double tol = 1e-9);

}  // namespace ringspec
