#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ringspec/rootfind.hpp"

namespace ringspec {

/// One instance where the exact and numeric routes did not agree.
struct ScanDisagreement {
  int n = 0;
  std::string mask;
  bool exact_cyclic = false;
  /// Numeric verdict; meaningless when ambiguous is set.
  bool numeric_cyclic = false;
  bool ambiguous = false;
  /// Exact char poly differs from the generic Faddeev-LeVerrier one.
  bool char_poly_mismatch = false;
};

struct ScanSummary {
  std::size_t instances = 0;
  std::size_t essentially_cyclic = 0;
  /// Sorted by (n, mask).
  std::vector<ScanDisagreement> disagreements;
};

struct ScanOptions {
  int n_min = 3;
  int n_max = 12;
  /// 0 picks hardware concurrency, capped by RINGSPEC_THREADS when set.
  unsigned threads = 0;
  /// Also compare char_poly against the generic exact route per mask.
  bool check_char_poly = true;
  RootFinderConfig root_config{};
};

/// Every mask for every n in [n_min, n_max]: exact classifier against the
/// numeric verdict (and optionally the char-poly identity).
ScanSummary scan_masks(const ScanOptions& options);

/// Worker count after applying RINGSPEC_THREADS.
unsigned effective_threads(unsigned requested);

}  // namespace ringspec
