#include "ringspec/serialization.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringspec {
namespace {

template <typename T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

json mpz_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("mpz_from_json: not a decimal integer");
    }
    return v;
  }
  throw std::invalid_argument("mpz_from_json: expected an integer or a decimal string");
}

json spectrum_to_json(const Spectrum& s) {
  json out = json::array();
  for (const auto& z : s) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

Spectrum spectrum_from_json(const json& j) {
  Spectrum s;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("spectrum_from_json: expected [re, im] pairs");
    }
    s.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return s;
}

void to_json(json& j, const IntPolynomial& p) { j = p.to_decimal_strings(); }

void from_json(const json& j, IntPolynomial& p) {
  p = IntPolynomial::from_decimal_strings(j.get<std::vector<std::string>>());
}

void to_json(json& j, const ComplexRootSet& r) {
  j = json{{"roots", spectrum_to_json(r.roots)},
           {"residuals", r.residuals},
           {"converged", r.converged},
           {"iterations", r.iterations}};
}

void from_json(const json& j, ComplexRootSet& r) {
  r.roots = spectrum_from_json(j.at("roots"));
  r.residuals = j.at("residuals").get<std::vector<double>>();
  r.converged = j.at("converged").get<bool>();
  r.iterations = j.at("iterations").get<int>();
}

ClassificationRecord make_classification_record(const RingDigraph& g,
                                                const RootFinderConfig& cfg) {
  const Classification c = classify_exact(g);
  const GapDecomposition d = decompose(g);
  ClassificationRecord r;
  r.n = g.size();
  r.mask = g.mask_string();
  r.absent = d.absent;
  r.gaps = d.gaps;
  r.essentially_cyclic = c.essentially_cyclic;
  r.kind = c.kind;
  r.char_poly = char_poly(g);
  if (c.closed_form_spectrum) {
    r.spectrum = *c.closed_form_spectrum;
  } else {
    r.spectrum = aberth_roots(r.char_poly, cfg).roots;
    std::sort(r.spectrum.begin(), r.spectrum.end(), [](const auto& a, const auto& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
  }
  return r;
}

void to_json(json& j, const ClassificationRecord& r) {
  j = json{{"n", r.n},
           {"mask", r.mask},
           {"K", r.absent},
           {"gaps", r.gaps},
           {"essentially_cyclic", r.essentially_cyclic},
           {"case", std::string(to_string(r.kind))},
           {"spectrum", spectrum_to_json(r.spectrum)},
           {"char_poly", r.char_poly}};
}

void from_json(const json& j, ClassificationRecord& r) {
  r.n = j.at("n").get<int>();
  r.mask = j.at("mask").get<std::string>();
  r.absent = j.at("K").get<int>();
  r.gaps = j.at("gaps").get<std::vector<int>>();
  r.essentially_cyclic = j.at("essentially_cyclic").get<bool>();
  r.kind = cyclicity_case_from_string(j.at("case").get<std::string>());
  r.spectrum = spectrum_from_json(j.at("spectrum"));
  r.char_poly = j.at("char_poly").get<IntPolynomial>();
}

void to_json(json& j, const ArborescenceRecord& r) {
  json per_root = json::array();
  for (const auto& v : r.count.per_root) per_root.push_back(mpz_to_json(v));
  j = json{{"n", r.n}, {"mask", r.mask}, {"per_root", per_root},
           {"total", mpz_to_json(r.count.total)}};
}

void from_json(const json& j, ArborescenceRecord& r) {
  r.n = j.at("n").get<int>();
  r.mask = j.at("mask").get<std::string>();
  r.count.per_root.clear();
  for (const auto& v : j.at("per_root")) r.count.per_root.push_back(mpz_from_json(v));
  r.count.total = mpz_from_json(j.at("total"));
}

void to_json(json& j, const OscillationReport& r) {
  j = json{{"n", r.n},
           {"mask", r.mask},
           {"essentially_cyclic", r.essentially_cyclic},
           {"predicted_frequency", optional_to_json(r.predicted_frequency)},
           {"predicted_decay_rate", optional_to_json(r.predicted_decay_rate)},
           {"measured_frequency", optional_to_json(r.measured_frequency)},
           {"relative_deviation", optional_to_json(r.relative_deviation)}};
}

void from_json(const json& j, OscillationReport& r) {
  r.n = j.at("n").get<int>();
  r.mask = j.at("mask").get<std::string>();
  r.essentially_cyclic = j.at("essentially_cyclic").get<bool>();
  r.predicted_frequency = optional_from_json<double>(j.at("predicted_frequency"));
  r.predicted_decay_rate = optional_from_json<double>(j.at("predicted_decay_rate"));
  r.measured_frequency = optional_from_json<double>(j.at("measured_frequency"));
  r.relative_deviation = optional_from_json<double>(j.at("relative_deviation"));
}

void to_json(json& j, const K3Verdict& v) {
  j = json{{"discriminant", v.discriminant},
           {"triangle", v.triangle},
           {"essentially_cyclic", v.essentially_cyclic}};
}

void from_json(const json& j, K3Verdict& v) {
  v.discriminant = j.at("discriminant").get<double>();
  v.triangle = j.at("triangle").get<bool>();
  v.essentially_cyclic = j.at("essentially_cyclic").get<bool>();
}

void to_json(json& j, const ScanSummary& s) {
  json bad = json::array();
  for (const auto& d : s.disagreements) {
    bad.push_back(json{{"n", d.n},
                       {"mask", d.mask},
                       {"exact_cyclic", d.exact_cyclic},
                       {"numeric_cyclic", d.numeric_cyclic},
                       {"ambiguous", d.ambiguous},
                       {"char_poly_mismatch", d.char_poly_mismatch}});
  }
  j = json{{"instances", s.instances},
           {"essentially_cyclic", s.essentially_cyclic},
           {"disagreements", bad}};
}

void from_json(const json& j, ScanSummary& s) {
  s.instances = j.at("instances").get<std::size_t>();
  s.essentially_cyclic = j.at("essentially_cyclic").get<std::size_t>();
  s.disagreements.clear();
  for (const auto& d : j.at("disagreements")) {
    s.disagreements.push_back({d.at("n").get<int>(), d.at("mask").get<std::string>(),
                               d.at("exact_cyclic").get<bool>(),
                               d.at("numeric_cyclic").get<bool>(), d.at("ambiguous").get<bool>(),
                               d.at("char_poly_mismatch").get<bool>()});
  }
}

}  // namespace ringspec
