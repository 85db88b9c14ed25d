// Command-line front end: (p, t) parameter sweeps with CSV output,
// verification suites, tau bound computation, and state classification.

#include "qconc/evolution.hpp"
#include "qconc/state_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace qconc;

// ---------------------------------------------------------------------------
// helpers

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Grid syntax a:b:n — n evenly spaced points from a to b inclusive.
std::vector<double> parse_grid(const std::string& text) {
  double a = 0.0, b = 0.0;
  int n = 0;
  char tail = '\0';
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &a, &b, &n, &tail) != 3 || n < 1)
    throw CLI::ValidationError("grid", "expected a:b:n with n >= 1, got '" + text + "'");
  if (n == 1) return {a};
  if (!(b >= a)) throw CLI::ValidationError("grid", "grid bounds must satisfy b >= a");
  std::vector<double> pts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    pts[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return pts;
}

io::ChannelSpec make_spec(const std::string& channel, double gamma, const std::string& mode) {
  io::ChannelSpec spec;
  if (channel == "pd")
    spec.label = channels::ChannelLabel::phase_damping;
  else if (channel == "ad")
    spec.label = channels::ChannelLabel::amplitude_damping;
  else
    spec.label = channels::ChannelLabel::generalized_amplitude_damping;
  spec.gamma = gamma;
  spec.mode =
      mode == "literal" ? channels::GadMode::paper_literal : channels::GadMode::trace_preserving;
  return spec;
}

const char* tag_name(measures::ClassTag tag) {
  switch (tag) {
    case measures::ClassTag::GHZ_class: return "GHZ_class";
    case measures::ClassTag::W_class: return "W_class";
    case measures::ClassTag::unentangled: return "unentangled";
  }
  return "unentangled";
}

// ---------------------------------------------------------------------------
// sweep

struct SweepConfig {
  std::string channel = "pd";
  double gamma = 1.0;
  std::string mode = "tp";
  std::string p_grid_text = "0:1:21";
  std::string t_grid_text;  // default depends on channel
  int qubit = 3;
  std::uint64_t seed = 0;
  std::string out;
  bool plot_script = false;
  bool kraus_literal = false;
};

void write_plot_script(const SweepConfig& cfg) {
  const std::string path = cfg.out + ".py";
  std::ofstream py(path);
  if (!py) throw std::runtime_error("cannot write plot script: " + path);
  py << "#!/usr/bin/env python3\n"
        "# Companion plot for the sweep CSV: lhs surface with rhs wireframe.\n"
        "import csv\n"
        "import matplotlib.pyplot as plt\n"
        "import numpy as np\n"
        "\n"
        "rows = list(csv.DictReader(open("
     << std::quoted(cfg.out)
     << ")))\n"
        "p = sorted({float(r['p']) for r in rows})\n"
        "t = sorted({float(r['t']) for r in rows})\n"
        "lhs = np.array([float(r['tau_lhs']) for r in rows]).reshape(len(p), len(t))\n"
        "rhs = np.array([float(r['tau_rhs']) for r in rows]).reshape(len(p), len(t))\n"
        "T, P = np.meshgrid(t, p)\n"
        "ax = plt.figure(figsize=(8, 6)).add_subplot(projection='3d')\n"
        "ax.plot_surface(T, P, lhs, cmap='viridis', alpha=0.85)\n"
        "ax.plot_wireframe(T, P, rhs, color='crimson', rstride=2, cstride=0, linewidth=0.8)\n"
        "ax.set_xlabel('Gamma t')\n"
        "ax.set_ylabel('p')\n"
        "ax.set_zlabel('tau')\n"
        "ax.set_title("
     << std::quoted(cfg.channel + " sweep: lhs surface vs rhs wireframe")
     << ")\n"
        "plt.tight_layout()\n"
        "plt.savefig("
     << std::quoted(cfg.out + ".png")
     << ", dpi=160)\n"
        "print('wrote "
     << cfg.out << ".png')\n";
}

int cmd_sweep(const SweepConfig& cfg) {
  if (cfg.t_grid_text.empty())
    throw std::logic_error("t grid default not resolved");
  const std::vector<double> p_grid = parse_grid(cfg.p_grid_text);
  const std::vector<double> t_grid = parse_grid(cfg.t_grid_text);
  for (double p : p_grid)
    if (p < 0.0 || p > 1.0)
      throw CLI::ValidationError("--p-grid", "p values must lie in [0, 1]");
  const io::ChannelSpec spec = make_spec(cfg.channel, cfg.gamma, cfg.mode);

  std::ofstream csv(cfg.out);
  if (!csv) throw std::runtime_error("cannot write output file: " + cfg.out);
  csv << "p,t,tau_lhs,tau_rhs,gap,factor_class\n";
  for (double p : p_grid) {
    const states::DensityMatrix rho0 = states::ghz_w_mixture(p);
    // The mixture is GHZ-dominated above p = 0.5, W-dominated below.
    const evolution::MaxEntClass cls =
        p > 0.5 ? evolution::MaxEntClass::GHZ : evolution::MaxEntClass::W;
    for (double t : t_grid) {
      const auto rep = evolution::verify_mixed_bound(rho0, spec.build(t), cfg.qubit, cls,
                                                     /*renormalize=*/!cfg.kraus_literal);
      csv << fmt17(p) << ',' << fmt17(t) << ',' << fmt17(rep.lhs) << ',' << fmt17(rep.rhs) << ','
          << fmt17(rep.gap) << ',' << (cls == evolution::MaxEntClass::GHZ ? "GHZ" : "W") << '\n';
    }
  }
  csv.close();
  if (!csv) throw std::runtime_error("failed writing output file: " + cfg.out);
  if (cfg.plot_script) write_plot_script(cfg);
  std::cout << "wrote " << p_grid.size() * t_grid.size() << " rows to " << cfg.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteResult {
  int cases = 0;
  int failures = 0;
  double max_dev = 0.0;
};

void suite_line(const std::string& name, bool ok, double dev, const std::string& detail) {
  std::cout << (ok ? "  pass  " : "  FAIL  ") << name << "  max_dev=" << fmt17(dev)
            << (detail.empty() ? "" : "  " + detail) << "\n";
}

SuiteResult suite_reduction_wootters(int cases, std::uint64_t seed) {
  SuiteResult res;
  for (int i = 0; i < cases; ++i) {
    states::DensityMatrix rho = states::random_rank2(2, seed + static_cast<std::uint64_t>(i));
    const double dev =
        std::abs(measures::tau_lower_bound(rho) - measures::wootters_concurrence(rho));
    res.cases++;
    res.max_dev = std::max(res.max_dev, dev);
    if (dev > 1e-10) {
      res.failures++;
      suite_line("case " + std::to_string(i), false, dev, "");
    }
  }
  suite_line("tau2 vs Wootters, " + std::to_string(cases) + " random states", res.failures == 0,
             res.max_dev, "tolerance 1e-10");
  return res;
}

SuiteResult suite_pure_evolution(int cases, std::uint64_t seed) {
  SuiteResult res;
  const std::vector<std::pair<std::string, io::ChannelSpec>> specs = {
      {"pd", make_spec("pd", 1.0, "tp")},
      {"ad", make_spec("ad", 1.0, "tp")},
      {"gad-tp", make_spec("gad", 1.0, "tp")},
  };
  for (int i = 0; i < cases; ++i) {
    const states::PureState psi = states::random_pure(3, seed + static_cast<std::uint64_t>(i));
    double worst = 0.0;
    std::string where;
    for (const auto& [label, spec] : specs) {
      for (int qubit = 1; qubit <= 3; ++qubit) {
        for (int k = 0; k < 20; ++k) {
          const double t = 5.0 * k / 19;
          const auto rep = evolution::verify_pure_evolution(psi, spec.build(t), qubit);
          if (std::abs(rep.gap) > worst) {
            worst = std::abs(rep.gap);
            where = label + " qubit " + std::to_string(qubit) + " t=" + fmt17(t) + " class " +
                    tag_name(rep.class_used);
          }
        }
      }
    }
    res.cases++;
    res.max_dev = std::max(res.max_dev, worst);
    if (worst > 1e-7) {
      res.failures++;
      suite_line("case " + std::to_string(i), false, worst, where);
    }
  }
  suite_line("pure-state factorization, " + std::to_string(cases) + " Haar states",
             res.failures == 0, res.max_dev, "tolerance 1e-7");
  return res;
}

SuiteResult suite_cut_independence(int cases, std::uint64_t seed) {
  SuiteResult res;
  const std::vector<std::pair<std::string, io::ChannelSpec>> specs = {
      {"pd", make_spec("pd", 1.0, "tp")},
      {"ad", make_spec("ad", 1.0, "tp")},
      {"gad-tp", make_spec("gad", 1.0, "tp")},
  };
  for (int i = 0; i < cases; ++i) {
    const states::PureState psi = states::random_pure(3, seed + static_cast<std::uint64_t>(i));
    double worst = 0.0;
    std::string where;
    for (const auto& [label, spec] : specs) {
      for (double t : {0.1, 0.5, 1.0}) {
        const double dev = evolution::cut_independence_check(psi, spec.build(t));
        if (dev > worst) {
          worst = dev;
          where = label + " t=" + fmt17(t);
        }
      }
    }
    res.cases++;
    res.max_dev = std::max(res.max_dev, worst);
    if (worst > 1e-8) {
      res.failures++;
      suite_line("case " + std::to_string(i), false, worst, where);
    }
  }
  suite_line("cut independence, " + std::to_string(cases) + " Haar states", res.failures == 0,
             res.max_dev, "tolerance 1e-8");
  return res;
}

SuiteResult suite_mixed_bound(int, std::uint64_t) {
  SuiteResult res;
  const io::ChannelSpec pd = make_spec("pd", 1.0, "tp");
  const io::ChannelSpec ad = make_spec("ad", 1.0, "tp");

  // Phase damping: the two sides are claimed equal for every p.
  double pd_dev = 0.0;
  // Amplitude damping: inequality respected with visible slack somewhere.
  double ad_min_gap = 1e300, ad_max_gap = -1e300;
  for (int ip = 0; ip <= 20; ++ip) {
    const double p = ip / 20.0;
    const states::DensityMatrix rho0 = states::ghz_w_mixture(p);
    const auto cls = p > 0.5 ? evolution::MaxEntClass::GHZ : evolution::MaxEntClass::W;
    for (int it = 0; it <= 40; ++it) {
      const double t = 2.0 * it / 40;
      const auto rpd = evolution::verify_mixed_bound(rho0, pd.build(t), 3, cls);
      pd_dev = std::max(pd_dev, std::abs(rpd.gap));
      const auto rad = evolution::verify_mixed_bound(rho0, ad.build(t), 3, cls);
      ad_min_gap = std::min(ad_min_gap, rad.gap);
      ad_max_gap = std::max(ad_max_gap, rad.gap);
    }
  }
  res.cases = 2;
  res.max_dev = pd_dev;
  const bool pd_ok = pd_dev <= 1e-7;
  if (!pd_ok) res.failures++;
  suite_line("phase damping equality on the rho(p) 21x41 grid", pd_ok, pd_dev, "tolerance 1e-7");
  const bool ad_ok = ad_min_gap >= -1e-8 && ad_max_gap > 1e-3;
  if (!ad_ok) res.failures++;
  suite_line("amplitude damping inequality + slack", ad_ok, -ad_min_gap,
             "min_gap=" + fmt17(ad_min_gap) + " max_gap=" + fmt17(ad_max_gap));
  return res;
}

SuiteResult suite_two_sided(int, std::uint64_t) {
  SuiteResult res;
  const std::vector<std::pair<std::string, io::ChannelSpec>> specs = {
      {"ad", make_spec("ad", 1.0, "tp")},
      {"pd", make_spec("pd", 1.0, "tp")},
  };
  const std::vector<std::pair<std::string, states::DensityMatrix>> inputs = {
      {"rho(0.5)", states::ghz_w_mixture(0.5)},
      {"GHZ", states::density(states::ghz(3))},
  };
  for (const auto& [sname, spec] : specs) {
    for (const auto& [iname, rho0] : inputs) {
      double min_gap = 1e300;
      for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
          const double t1 = 2.0 * i / 9, t2 = 2.0 * j / 9;
          const auto rep =
              evolution::verify_two_sided(rho0, spec.build(t1), spec.build(t2), {1, 3});
          min_gap = std::min(min_gap, rep.gap);
        }
      }
      res.cases++;
      const bool ok = min_gap >= -1e-8;
      if (!ok) res.failures++;
      res.max_dev = std::max(res.max_dev, std::max(0.0, -min_gap));
      suite_line("(" + sname + "," + sname + ") on " + iname + ", 10x10 grid", ok, -min_gap,
                 "min_gap=" + fmt17(min_gap));
    }
  }
  return res;
}

SuiteResult suite_generators(int, std::uint64_t) {
  SuiteResult res;
  const std::size_t want[] = {1, 6, 28, 120};
  for (int n = 2; n <= 5; ++n) {
    const auto& gs = measures::generator_set(n, measures::BipartitionCut{n});
    const bool count_ok = gs.operators.size() == want[n - 2] &&
                          measures::generator_count(n) == want[n - 2];
    double anti = 0.0;
    for (const auto& l : measures::so_generators(1 << (n - 1)))
      anti = std::max(anti, (l.transpose() + l).norm());
    res.cases++;
    const bool ok = count_ok && anti == 0.0;
    if (!ok) res.failures++;
    res.max_dev = std::max(res.max_dev, anti);
    suite_line("N=" + std::to_string(n) + " count " + std::to_string(gs.operators.size()) +
                   " antisymmetry",
               ok, anti, "expected " + std::to_string(want[n - 2]));
  }
  return res;
}

int cmd_verify(const std::string& suite, int cases, std::uint64_t seed) {
  SuiteResult res;
  if (suite == "reduction_wootters")
    res = suite_reduction_wootters(cases, seed);
  else if (suite == "pure_evolution")
    res = suite_pure_evolution(cases, seed);
  else if (suite == "cut_independence")
    res = suite_cut_independence(cases, seed);
  else if (suite == "mixed_bound")
    res = suite_mixed_bound(cases, seed);
  else if (suite == "two_sided")
    res = suite_two_sided(cases, seed);
  else if (suite == "generators")
    res = suite_generators(cases, seed);
  else
    throw CLI::ValidationError("--suite", "unknown suite: " + suite);

  std::cout << "{\"suite\":\"" << suite << "\",\"cases\":" << res.cases
            << ",\"failures\":" << res.failures << ",\"max_deviation\":" << fmt17(res.max_dev)
            << "}\n";
  return res.failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bound / classify

int cmd_bound(const std::string& path) {
  const io::StateVariant sv = io::load_state(path);
  const states::DensityMatrix rho = std::holds_alternative<states::PureState>(sv)
                                        ? states::density(std::get<states::PureState>(sv))
                                        : std::get<states::DensityMatrix>(sv);
  std::cout << "n_qubits " << rho.n_qubits << "\n";
  std::cout << "tau " << fmt17(measures::tau_lower_bound(rho)) << "\n";
  double fifth = 0.0;
  for (int q = 1; q <= rho.n_qubits; ++q) {
    const auto terms = measures::c_k_terms(rho, measures::BipartitionCut{q});
    double s = 0.0;
    for (double c : terms.c_k) s += c * c;
    std::cout << "cut " << q << " " << fmt17(std::sqrt(s)) << "\n";
    fifth = std::max(fifth, terms.fifth_max);
  }
  std::cout << "fifth_eig_max " << fmt17(fifth) << "\n";
  return 0;
}

int cmd_classify(const std::string& path) {
  const io::StateVariant sv = io::load_state(path);
  if (!std::holds_alternative<states::PureState>(sv))
    throw std::invalid_argument("classify: needs a pure state file");
  const auto& psi = std::get<states::PureState>(sv);
  const auto ec = measures::classify(psi);
  std::cout << "class " << tag_name(ec.tag) << "\n";
  std::cout << "three_tangle " << fmt17(ec.three_tangle) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiqubit concurrence lower bound: sweeps, verification, classification"};
  app.require_subcommand(1);

  SweepConfig sweep;
  CLI::App* sw = app.add_subcommand("sweep", "Sweep the (p, t) grid and write CSV");
  sw->add_option("--channel", sweep.channel, "Noise channel")
      ->required()
      ->check(CLI::IsMember({"pd", "ad", "gad"}));
  sw->add_option("--gamma", sweep.gamma, "Decay rate Gamma")->check(CLI::NonNegativeNumber);
  sw->add_option("--mode", sweep.mode, "Kraus set normalization (gad only)")
      ->check(CLI::IsMember({"tp", "literal"}));
  sw->add_option("--p-grid", sweep.p_grid_text, "Mixture grid a:b:n (default 0:1:21)");
  sw->add_option("--t-grid", sweep.t_grid_text,
                 "Time grid a:b:n (default 0:2:41; 0:1.5:41 for gad)");
  sw->add_option("--qubit", sweep.qubit, "Noised qubit (1-based)")->check(CLI::Range(1, 3));
  sw->add_option("--seed", sweep.seed, "Seed echoed into derived runs");
  sw->add_option("--out", sweep.out, "Output CSV path")->required();
  sw->add_flag("--plot-script", sweep.plot_script, "Also write <out>.py plotting companion");
  sw->add_flag("--kraus-literal", sweep.kraus_literal,
               "Skip renormalization of sub-normalized channel outputs");

  std::string suite;
  int cases = 50;
  std::uint64_t vseed = 0;
  CLI::App* vf = app.add_subcommand("verify", "Run a verification suite");
  vf->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"pure_evolution", "cut_independence", "mixed_bound", "two_sided",
                             "reduction_wootters", "generators"}));
  vf->add_option("--cases", cases, "Number of random cases")->check(CLI::PositiveNumber);
  vf->add_option("--seed", vseed, "Base seed");

  std::string bound_file;
  CLI::App* bd = app.add_subcommand("bound", "Compute tau_N for a JSON state file");
  bd->add_option("file", bound_file, "State file")->required();

  std::string classify_file;
  CLI::App* cl = app.add_subcommand("classify", "Classify a pure three-qubit state");
  cl->add_option("file", classify_file, "State file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sw->parsed()) {
      if (sweep.t_grid_text.empty())
        sweep.t_grid_text = sweep.channel == "gad" ? "0:1.5:41" : "0:2:41";
      return cmd_sweep(sweep);
    }
    if (vf->parsed()) return cmd_verify(suite, cases, vseed);
    if (bd->parsed()) return cmd_bound(bound_file);
    if (cl->parsed()) return cmd_classify(classify_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
