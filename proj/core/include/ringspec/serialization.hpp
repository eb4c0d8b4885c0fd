#pragma once

#include <complex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringspec/arborescence.hpp"
#include "ringspec/dynamics.hpp"
#include "ringspec/polynomial.hpp"
#include "ringspec/ring_digraph.hpp"
#include "ringspec/rootfind.hpp"
#include "ringspec/scan.hpp"

namespace ringspec {

using json = nlohmann::ordered_json;

/// Everything reported about one ring digraph.
struct ClassificationRecord {
  int n = 0;
  std::string mask;
  int absent = 0;
  std::vector<int> gaps;
  bool essentially_cyclic = false;
  CyclicityCase kind = CyclicityCase::kCycle;
  /// Closed form when one exists, otherwise numeric roots.
  Spectrum spectrum;
  IntPolynomial char_poly;

  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

ClassificationRecord make_classification_record(const RingDigraph& g,
                                                const RootFinderConfig& cfg = {});

struct ArborescenceRecord {
  int n = 0;
  std::string mask;
  ArborescenceCount count;
};

struct K3Verdict {
  double discriminant = 0;
  bool triangle = false;
  bool essentially_cyclic = false;
};

/// Integers that fit in a long are written as JSON numbers, larger ones as
/// decimal strings; both forms are accepted on input.
json mpz_to_json(const mpz_class& v);
mpz_class mpz_from_json(const json& j);

json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const json& j);

void to_json(json& j, const IntPolynomial& p);
void from_json(const json& j, IntPolynomial& p);

void to_json(json& j, const ComplexRootSet& r);
void from_json(const json& j, ComplexRootSet& r);

void to_json(json& j, const ClassificationRecord& r);
void from_json(const json& j, ClassificationRecord& r);

void to_json(json& j, const ArborescenceRecord& r);
void from_json(const json& j, ArborescenceRecord& r);

void to_json(json& j, const OscillationReport& r);
void from_json(const json& j, OscillationReport& r);

void to_json(json& j, const K3Verdict& v);
void from_json(const json& j, K3Verdict& v);

void to_json(json& j, const ScanSummary& s);
void from_json(const json& j, ScanSummary& s);

}  // namespace ringspec
