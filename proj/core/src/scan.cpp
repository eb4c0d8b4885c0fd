#include "ringspec/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ringspec/ring_digraph.hpp"

namespace ringspec {
namespace {

struct Job {
  int n;
  unsigned long bits;
};

RingDigraph from_bits(int n, unsigned long bits) {
  std::vector<bool> mask(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) mask[static_cast<std::size_t>(j)] = (bits >> j) & 1UL;
  return RingDigraph(n, std::move(mask));
}

}  // namespace

unsigned effective_threads(unsigned requested) {
  unsigned threads = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char* cap = std::getenv("RINGSPEC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && v > 0) threads = std::min<unsigned>(threads, static_cast<unsigned>(v));
  }
  return std::max(1u, threads);
}

ScanSummary scan_masks(const ScanOptions& options) {
  if (options.n_min < 3 || options.n_max < options.n_min || options.n_max > 30) {
    throw std::invalid_argument("scan_masks: need 3 <= n_min <= n_max <= 30");
  }
  options.root_config.validate();

  std::vector<Job> jobs;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    for (unsigned long bits = 0; bits < (1UL << n); ++bits) jobs.push_back({n, bits});
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> cyclic{0};
  std::mutex mu;
  std::vector<ScanDisagreement> found;

  const auto worker = [&] {
    for (std::size_t idx = next.fetch_add(1); idx < jobs.size(); idx = next.fetch_add(1)) {
      const RingDigraph g = from_bits(jobs[idx].n, jobs[idx].bits);
      const Classification exact = classify_exact(g);
      if (exact.essentially_cyclic) cyclic.fetch_add(1);

      ScanDisagreement d{g.size(), g.mask_string(), exact.essentially_cyclic};
      bool bad = false;
      const IntPolynomial p = char_poly(g);
      if (options.check_char_poly && !(p == char_poly_exact(laplacian(g)))) {
        d.char_poly_mismatch = true;
        bad = true;
      }
      try {
        d.numeric_cyclic =
            spectral_verdict(aberth_roots(p, options.root_config), p, options.root_config);
        if (d.numeric_cyclic != exact.essentially_cyclic) bad = true;
      } catch (const AmbiguousSpectrumError&) {
        d.ambiguous = true;
        bad = true;
      }
      if (bad) {
        std::lock_guard lock(mu);
        found.push_back(std::move(d));
      }
    }
  };

  const unsigned threads = effective_threads(options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.n != b.n ? a.n < b.n : a.mask < b.mask;
  });
  ScanSummary s;
  s.instances = jobs.size();
  s.essentially_cyclic = cyclic.load();
  s.disagreements = std::move(found);
  return s;
}

}  // namespace ringspec
