#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringspec/arborescence.hpp"
#include "ringspec/dynamics.hpp"
#include "ringspec/ring_digraph.hpp"
#include "ringspec/scan.hpp"
#include "ringspec/serialization.hpp"
#include "ringspec/weighted.hpp"

using namespace ringspec;

namespace {

constexpr int kOk = 0;
constexpr int kAmbiguous = 1;
constexpr int kInvalid = 2;

bool g_pretty = false;

void emit(const json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << '\n'; }

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

struct ClassifyArgs {
  int n = 0;
  std::string mask;
  bool numeric = false;
};

int run_classify(const ClassifyArgs& a) {
  const RingDigraph g = RingDigraph::parse(a.n, a.mask);
  const ClassificationRecord record = make_classification_record(g);
  json out = record;
  if (a.numeric) {
    const bool numeric = numeric_verdict(g);
    out["numeric"] = {{"essentially_cyclic", numeric},
                      {"agrees", numeric == record.essentially_cyclic}};
  }
  emit(out);
  return kOk;
}

struct SpectrumArgs {
  int n = 0;
  std::string mask;
  std::string method = "both";
};

int run_spectrum(const SpectrumArgs& a) {
  const RingDigraph g = RingDigraph::parse(a.n, a.mask);
  json out{{"n", g.size()}, {"mask", g.mask_string()}};
  if (a.method != "numeric") {
    const auto closed = closed_form_spectrum(g);
    out["exact"] = closed ? spectrum_to_json(*closed) : json(nullptr);
  }
  if (a.method != "exact") {
    ComplexRootSet r = spectrum_numeric(g);
    std::sort(r.roots.begin(), r.roots.end(), [](const auto& x, const auto& y) {
      return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    out["numeric"] = json(r);
    out["essentially_cyclic"] = spectral_verdict(r, char_poly(g));
  }
  emit(out);
  return kOk;
}

struct ScanArgs {
  int n_min = 3;
  int n_max = 12;
  unsigned parallel = 0;
  bool json_out = false;
};

int run_scan(const ScanArgs& a) {
  ScanOptions o;
  o.n_min = a.n_min;
  o.n_max = a.n_max;
  o.threads = a.parallel;
  const ScanSummary s = scan_masks(o);
  if (a.json_out) {
    emit(json(s));
  } else {
    std::cout << s.disagreements.size() << " disagreements over " << s.instances
              << " instances\n";
    for (const auto& d : s.disagreements) {
      std::cout << d.n << ' ' << d.mask << " exact=" << d.exact_cyclic
                << (d.ambiguous ? " numeric=ambiguous" : d.numeric_cyclic ? " numeric=1" : " numeric=0")
                << (d.char_poly_mismatch ? " char_poly_mismatch" : "") << '\n';
    }
  }
  return s.disagreements.empty() ? kOk : kAmbiguous;
}

struct TreesArgs {
  int n = 0;
  std::string mask;
  std::optional<int> i;
};

int run_trees(const TreesArgs& a) {
  if (a.i) {
    if (!a.mask.empty()) throw std::invalid_argument("trees: give either MASK or --i, not both");
    emit(json{{"t", mpz_to_json(t_closed_form(a.n, *a.i))}});
    return kOk;
  }
  if (a.mask.empty()) throw std::invalid_argument("trees: MASK or --i is required");
  const RingDigraph g = RingDigraph::parse(a.n, a.mask);
  emit(json(ArborescenceRecord{g.size(), g.mask_string(), count_by_cofactor(laplacian(g))}));
  return kOk;
}

int run_k3(const std::string& weights) {
  const json j = json::parse(weights);
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("k3: need a 3x3 JSON array");
  RealMatrix w(3, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) throw std::invalid_argument("k3: need a 3x3 JSON array");
    for (std::size_t c = 0; c < 3; ++c) w(r, c) = j[r][c].get<double>();
  }
  const WeightMatrix wm(w);
  const double d = k3_discriminant(wm);
  emit(json(K3Verdict{d, k3_classify(wm), d < 0}));
  return kOk;
}

int run_fig6(double p) {
  const auto [lo, hi] = fig6_boundary(p);
  emit(json{{"p", p}, {"boundary", {lo, hi}}});
  return kOk;
}

int run_c4(double a_max, double x_max, int steps) {
  const auto a = uniform_grid(a_max, steps);
  const auto x = uniform_grid(x_max, steps);
  write_c4_csv(std::cout, c4_scan(a, x));
  return kOk;
}

struct SimulateArgs {
  int n = 0;
  std::string mask;
  double step = 0.01;
  double horizon = 40.0;
  std::string x0;
  std::uint64_t seed = 1;
  bool report = false;
};

int run_simulate(const SimulateArgs& a) {
  const RingDigraph g = RingDigraph::parse(a.n, a.mask);
  SimConfig cfg;
  cfg.step = a.step;
  cfg.horizon = a.horizon;
  cfg.seed = a.seed;
  if (!a.x0.empty()) cfg.initial_state = parse_vector(a.x0);
  if (a.report) {
    emit(json(oscillation_report(g, cfg)));
  } else {
    write_trajectory_csv(std::cout, simulate(to_real(laplacian(g)), cfg));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Essential cyclicity and Laplacian spectra of ring digraphs"};
  app.require_subcommand(1);
  app.add_flag("--json", g_pretty, "Indent JSON output");

  std::function<int()> action;

  ClassifyArgs classify;
  auto* c = app.add_subcommand("classify", "Exact classification of one ring digraph");
  c->add_option("N", classify.n, "Vertex count")->required();
  c->add_option("MASK", classify.mask, "Reverse-arc mask, n characters of 0/1")->required();
  c->add_flag("--numeric", classify.numeric, "Also run the numeric spectral check");
  c->add_flag("--json", g_pretty, "Indent JSON output");
  c->callback([&] { action = [&] { return run_classify(classify); }; });

  SpectrumArgs spectrum;
  auto* s = app.add_subcommand("spectrum", "Closed-form and numeric Laplacian spectrum");
  s->add_option("N", spectrum.n)->required();
  s->add_option("MASK", spectrum.mask)->required();
  s->add_option("--method", spectrum.method)
      ->check(CLI::IsMember({"exact", "numeric", "both"}))
      ->capture_default_str();
  s->add_flag("--json", g_pretty, "Indent JSON output");
  s->callback([&] { action = [&] { return run_spectrum(spectrum); }; });

  ScanArgs scan;
  auto* sc = app.add_subcommand("scan", "Exact vs numeric verdict over every mask");
  sc->add_option("--n-min", scan.n_min)->capture_default_str();
  sc->add_option("--n-max", scan.n_max)->capture_default_str();
  sc->add_option("--parallel", scan.parallel, "Worker threads (0 = hardware)")
      ->capture_default_str();
  sc->add_flag("--json", scan.json_out, "Print the summary as JSON");
  sc->callback([&] { action = [&] { return run_scan(scan); }; });

  TreesArgs trees;
  auto* t = app.add_subcommand("trees", "Spanning in-arborescence counts");
  t->add_option("N", trees.n)->required();
  t->add_option("MASK", trees.mask);
  t->add_option("--i", trees.i, "Closed-form total for reverse arcs (i, i+1) and (n, 1) removed");
  t->add_flag("--json", g_pretty, "Indent JSON output");
  t->callback([&] { action = [&] { return run_trees(trees); }; });

  auto* w = app.add_subcommand("weighted", "Weighted small-digraph criteria");
  w->require_subcommand(1);
  std::string k3_weights;
  auto* k3 = w->add_subcommand("k3", "Complete 3-vertex digraph");
  k3->add_option("--weights", k3_weights, "3x3 JSON weight matrix")->required();
  k3->callback([&] { action = [&] { return run_k3(k3_weights); }; });
  double fig6_p = 3.0;
  auto* f6 = w->add_subcommand("fig6", "Cyclic window of the four-vertex digraph");
  f6->add_option("--p", fig6_p)->capture_default_str();
  f6->callback([&] { action = [&] { return run_fig6(fig6_p); }; });
  double a_max = 12.0, x_max = 12.0;
  int steps = 49;
  auto* c4 = w->add_subcommand("c4", "Weighted 4-cycle grid as CSV");
  c4->add_option("--a-max", a_max)->capture_default_str();
  c4->add_option("--x-max", x_max)->capture_default_str();
  c4->add_option("--steps", steps, "Grid intervals per axis")->capture_default_str();
  c4->callback([&] { action = [&] { return run_c4(a_max, x_max, steps); }; });

  SimulateArgs sim;
  auto* sm = app.add_subcommand("simulate", "Consensus dynamics x' = -L x");
  sm->add_option("N", sim.n)->required();
  sm->add_option("MASK", sim.mask)->required();
  sm->add_option("--step", sim.step)->capture_default_str();
  sm->add_option("--horizon", sim.horizon)->capture_default_str();
  sm->add_option("--x0", sim.x0, "Comma-separated initial state");
  sm->add_option("--seed", sim.seed, "Seed for a random initial state")->capture_default_str();
  sm->add_flag("--report", sim.report, "Print the oscillation report instead of the trajectory");
  sm->callback([&] { action = [&] { return run_simulate(sim); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    return action ? action() : kInvalid;
  } catch (const AmbiguousSpectrumError& e) {
    std::cerr << "ambiguous: " << e.what() << '\n';
    return kAmbiguous;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAmbiguous;
  }
}
