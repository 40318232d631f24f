#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diraclab/clifford.hpp"
#include "diraclab/exceptions.hpp"
#include "diraclab/field.hpp"
#include "diraclab/io.hpp"
#include "diraclab/prw.hpp"
#include "diraclab/spectral.hpp"
#include "diraclab/trotter.hpp"
#include "diraclab/witness.hpp"

namespace diraclab::cli {

namespace {

using nlohmann::json;

/** Writes `text` to `path`, or to stdout when `path` is empty. */
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << text;
  if (!os) throw std::runtime_error("write failed: " + path);
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
  if (text.empty()) throw std::invalid_argument(what + ": empty list");
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(',', pos);
    const std::string tok =
        text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    try {
      std::size_t used = 0;
      const double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": cannot parse \"" + tok + "\" as a number");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

/** Loads the JSON config file for one subcommand and rejects unknown keys by
 *  name.  An empty path yields an empty object. */
json load_config(const std::string& path, const std::vector<std::string>& known,
                 const std::string& command) {
  if (path.empty()) return json::object();
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("config: cannot open " + path);
  json cfg;
  try {
    is >> cfg;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!cfg.is_object()) throw std::invalid_argument("config: top level must be a JSON object");
  for (const auto& item : cfg.items())
    if (std::find(known.begin(), known.end(), item.key()) == known.end())
      throw std::invalid_argument("config: unknown key \"" + item.key() + "\" for " + command);
  return cfg;
}

/** Copies cfg[key] into `value` unless the flag was given on the command
 *  line; flags always win over the config file. */
template <typename T>
void take(const CLI::App& sub, const json& cfg, const std::string& key, T& value) {
  if (!cfg.contains(key) || sub.count("--" + key) > 0) return;
  try {
    value = cfg.at(key).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument("config: bad value type for key \"" + key + "\"");
  }
}

/** List-valued keys accept a JSON array, a single number, or a comma string. */
void take_list(const CLI::App& sub, const json& cfg, const std::string& key,
               std::vector<double>& value) {
  if (!cfg.contains(key) || sub.count("--" + key) > 0) return;
  const json& v = cfg.at(key);
  if (v.is_array()) {
    value = v.get<std::vector<double>>();
    return;
  }
  if (v.is_number()) {
    value = {v.get<double>()};
    return;
  }
  if (v.is_string()) {
    value = parse_double_list(v.get<std::string>(), key);
    return;
  }
  throw std::invalid_argument("config: bad value type for key \"" + key + "\"");
}

/** dim = 1 selects the block-diagonal family with m copies; dim >= 2 selects
 *  the irreducible tensor construction (which has no multiplicity knob). */
GeneratorSet resolve_generators(int dim, int m) {
  if (m < 1) throw std::invalid_argument("m must be a positive block count");
  if (dim == 1) return canonical_1d(m);
  if (m != 1) throw std::invalid_argument("block multiplicity m > 1 is only defined for dim 1");
  return build_generators(dim);
}

DensityField make_initial(const GridSpec& grid, int S, const std::string& init, int component1,
                          const std::vector<double>& a, double sigma) {
  if (component1 < 1 || component1 > S)
    throw std::invalid_argument("component must be between 1 and the number of components");
  Eigen::VectorXd shift = Eigen::VectorXd::Zero(grid.d);
  if (!a.empty()) {
    if (static_cast<int>(a.size()) != grid.d)
      throw std::invalid_argument("a must list exactly one entry per axis");
    for (int mu = 0; mu < grid.d; ++mu) shift(mu) = a[static_cast<std::size_t>(mu)];
  }
  const int comp = component1 - 1;
  if (init == "cauchy") return cauchy_initial(grid, S, comp, shift);
  if (init == "gaussian") return gaussian_initial(grid, S, comp, shift, sigma);
  if (init == "box") return box_initial(grid, S, comp, shift, sigma);
  if (init == "delta") return delta_initial(grid, S, comp, shift);
  throw std::invalid_argument("unknown init \"" + init + "\" (expected cauchy, gaussian, box, or delta)");
}

const char* relation_kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::Anticommutator:
      return "anticommutator";
    case RelationKind::Symmetry:
      return "symmetry";
    case RelationKind::Trace:
      return "trace";
  }
  return "unknown";
}

std::string render_generators(const GeneratorSet& g, bool check) {
  std::ostringstream os;
  os << "d " << g.d << "\nS " << g.S << '\n';
  for (std::size_t mu = 0; mu < g.e.size(); ++mu) {
    os << "e_" << mu << '\n';
    for (int r = 0; r < g.S; ++r) {
      for (int c = 0; c < g.S; ++c) {
        if (c) os << ' ';
        os << format_g17(g.e[mu](r, c));
      }
      os << '\n';
    }
  }
  if (check) {
    const CliffordReport report = verify_clifford(g);
    if (report.ok()) {
      os << "clifford: no violations\n";
    } else {
      for (const auto& v : report.violations)
        os << "clifford: " << relation_kind_name(v.kind) << " mu=" << v.mu << " nu=" << v.nu
           << " deviation=" << format_g17(v.deviation) << '\n';
    }
  }
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "diraclab: exact Fourier-space propagation, positivity-preserving splitting,\n"
      "persistent-random-walk sampling, and positivity certificates for Dirac-type\n"
      "first-order systems on periodic grids."};
  app.require_subcommand(1);

  // ---- rep ---------------------------------------------------------------
  struct {
    int dim = 1;
    int m = 1;
    bool check = false;
    std::string out;
    std::string config;
  } rp;
  CLI::App* rep = app.add_subcommand("rep", "Build a generator family and print it");
  rep->add_option("--dim", rp.dim, "spatial dimension (config key: dim)");
  rep->add_option("--m", rp.m, "block multiplicity for dim 1 (config key: m)");
  rep->add_flag("--check", rp.check, "verify algebraic relations (config key: check)");
  rep->add_option("--out", rp.out, "output path, stdout if omitted (config key: out)");
  rep->add_option("--config", rp.config, "JSON config file; flags override it");
  rep->callback([&]() {
    const json cfg = load_config(rp.config, {"dim", "m", "check", "out"}, "rep");
    take(*rep, cfg, "dim", rp.dim);
    take(*rep, cfg, "m", rp.m);
    take(*rep, cfg, "check", rp.check);
    take(*rep, cfg, "out", rp.out);
    emit(rp.out, render_generators(resolve_generators(rp.dim, rp.m), rp.check));
  });

  // ---- theorem-check -----------------------------------------------------
  struct {
    int dim = 1;
    int m = 1;
    double alpha = 1.0;
    std::string out;
    std::string config;
  } tc;
  CLI::App* thm = app.add_subcommand(
      "theorem-check", "Evaluate the positivity-preservation criterion for a generator family");
  thm->add_option("--dim", tc.dim, "spatial dimension (config key: dim)");
  thm->add_option("--m", tc.m, "block multiplicity for dim 1 (config key: m)");
  thm->add_option("--alpha", tc.alpha, "decay rate, compared exactly (config key: alpha)");
  thm->add_option("--out", tc.out, "output path, stdout if omitted (config key: out)");
  thm->add_option("--config", tc.config, "JSON config file; flags override it");
  thm->callback([&]() {
    const json cfg = load_config(tc.config, {"dim", "m", "alpha", "out"}, "theorem-check");
    take(*thm, cfg, "dim", tc.dim);
    take(*thm, cfg, "m", tc.m);
    take(*thm, cfg, "alpha", tc.alpha);
    take(*thm, cfg, "out", tc.out);
    const TheoremVerdict verdict = theorem_check(resolve_generators(tc.dim, tc.m), tc.alpha);
    emit(tc.out, verdict_json(verdict) + "\n");
  });

  // ---- witness -----------------------------------------------------------
  struct {
    int dim = 2;
    int m = 1;
    double alpha = 1.0;
    int grid_n = 256;
    double L = 20.0;
    std::string out;
    std::string config;
  } wt;
  CLI::App* wit = app.add_subcommand(
      "witness", "Certify a positivity violation of a non-preserving family on a grid run");
  wit->add_option("--dim", wt.dim, "spatial dimension (config key: dim)");
  wit->add_option("--m", wt.m, "block multiplicity for dim 1 (config key: m)");
  wit->add_option("--alpha", wt.alpha, "decay rate (config key: alpha)");
  wit->add_option("--grid", wt.grid_n, "sites per axis, power of two >= 8 (config key: grid)");
  wit->add_option("--L", wt.L, "half box length; the box is [-L, L) (config key: L)");
  wit->add_option("--out", wt.out, "output path, stdout if omitted (config key: out)");
  wit->add_option("--config", wt.config, "JSON config file; flags override it");
  wit->callback([&]() {
    const json cfg =
        load_config(wt.config, {"dim", "m", "alpha", "grid", "L", "out"}, "witness");
    take(*wit, cfg, "dim", wt.dim);
    take(*wit, cfg, "m", wt.m);
    take(*wit, cfg, "alpha", wt.alpha);
    take(*wit, cfg, "grid", wt.grid_n);
    take(*wit, cfg, "L", wt.L);
    take(*wit, cfg, "out", wt.out);
    const GeneratorSet g = resolve_generators(wt.dim, wt.m);
    const GridSpec grid{g.d, wt.grid_n, wt.L};
    const Witness w = find_counterexample(g, wt.alpha, grid);
    emit(wt.out, witness_json(w, grid) + "\n");
  });

  // ---- evolve ------------------------------------------------------------
  struct {
    int dim = 1;
    int m = 1;
    double alpha = 1.0;
    int grid_n = 1024;
    double L = 40.0;
    std::string time_str = "1";
    std::string init = "cauchy";
    int component = 1;
    std::string a_str;
    double sigma = 1.0;
    std::string out = "evolve_out";
    std::string config;
  } ev;
  CLI::App* evo = app.add_subcommand(
      "evolve", "Evolve an initial density with the exact Fourier-space propagator");
  evo->add_option("--dim", ev.dim, "spatial dimension (config key: dim)");
  evo->add_option("--m", ev.m, "block multiplicity for dim 1 (config key: m)");
  evo->add_option("--alpha", ev.alpha, "decay rate (config key: alpha)");
  evo->add_option("--grid", ev.grid_n, "sites per axis, power of two >= 8 (config key: grid)");
  evo->add_option("--L", ev.L, "half box length; the box is [-L, L) (config key: L)");
  evo->add_option("--time", ev.time_str,
                  "comma separated times, sorted before use (config key: time)");
  evo->add_option("--init", ev.init, "cauchy|gaussian|box|delta (config key: init)");
  evo->add_option("--component", ev.component, "1-based initial component (config key: component)");
  evo->add_option("--a", ev.a_str, "comma separated center/shift per axis (config key: a)");
  evo->add_option("--sigma", ev.sigma,
                  "gaussian width or box half-width (config key: sigma)");
  evo->add_option("--out", ev.out,
                  "output prefix: writes <out>_t<i>.csv and <out>_report.json (config key: out)");
  evo->add_option("--config", ev.config, "JSON config file; flags override it");
  evo->callback([&]() {
    const json cfg = load_config(
        ev.config,
        {"dim", "m", "alpha", "grid", "L", "time", "init", "component", "a", "sigma", "out"},
        "evolve");
    take(*evo, cfg, "dim", ev.dim);
    take(*evo, cfg, "m", ev.m);
    take(*evo, cfg, "alpha", ev.alpha);
    take(*evo, cfg, "grid", ev.grid_n);
    take(*evo, cfg, "L", ev.L);
    take(*evo, cfg, "init", ev.init);
    take(*evo, cfg, "component", ev.component);
    take(*evo, cfg, "sigma", ev.sigma);
    take(*evo, cfg, "out", ev.out);
    std::vector<double> times = parse_double_list(ev.time_str, "time");
    take_list(*evo, cfg, "time", times);
    std::vector<double> a;
    if (evo->count("--a") > 0) a = parse_double_list(ev.a_str, "a");
    take_list(*evo, cfg, "a", a);
    if (ev.out.empty()) throw std::invalid_argument("evolve needs a nonempty --out prefix");

    const GeneratorSet g = resolve_generators(ev.dim, ev.m);
    const GridSpec grid{g.d, ev.grid_n, ev.L};
    grid.validate();
    const DensityField p0 = make_initial(grid, g.S, ev.init, ev.component, a, ev.sigma);
    std::sort(times.begin(), times.end());
    const EvolutionParams params{ev.alpha, g};
    for (std::size_t i = 0; i < times.size(); ++i) {
      const DensityField pt = evolve(params, p0, times[i]);
      std::ostringstream os;
      write_density_csv(os, pt);
      emit(ev.out + "_t" + std::to_string(i) + ".csv", os.str());
    }
    const PositivityReport scan = positivity_scan(params, p0, times);
    emit(ev.out + "_report.json", positivity_json(scan, grid) + "\n");
  });

  // ---- trotter -----------------------------------------------------------
  struct {
    int grid_n = 1024;
    double L = 16.0;
    double time = 1.0;
    int steps = 0;
    std::string init = "cauchy";
    int component = 1;
    std::string a_str;
    double sigma = 1.0;
    std::string out;
    std::string config;
  } tr;
  CLI::App* tro = app.add_subcommand(
      "trotter", "Evolve a two-component lattice density with the positivity-preserving splitting");
  tro->add_option("--grid", tr.grid_n, "lattice sites, power of two >= 8 (config key: grid)");
  tro->add_option("--L", tr.L, "half box length; the box is [-L, L) (config key: L)");
  tro->add_option("--time", tr.time, "final time (config key: time)");
  tro->add_option("--steps", tr.steps,
                  "split steps; time/steps must equal the lattice spacing 2L/grid "
                  "(config key: steps)");
  tro->add_option("--init", tr.init, "cauchy|gaussian|box|delta (config key: init)");
  tro->add_option("--component", tr.component, "1-based initial component (config key: component)");
  tro->add_option("--a", tr.a_str, "center/shift (config key: a)");
  tro->add_option("--sigma", tr.sigma, "gaussian width or box half-width (config key: sigma)");
  tro->add_option("--out", tr.out, "output path, stdout if omitted (config key: out)");
  tro->add_option("--config", tr.config, "JSON config file; flags override it");
  tro->callback([&]() {
    const json cfg = load_config(
        tr.config, {"grid", "L", "time", "steps", "init", "component", "a", "sigma", "out"},
        "trotter");
    take(*tro, cfg, "grid", tr.grid_n);
    take(*tro, cfg, "L", tr.L);
    take(*tro, cfg, "time", tr.time);
    take(*tro, cfg, "steps", tr.steps);
    take(*tro, cfg, "init", tr.init);
    take(*tro, cfg, "component", tr.component);
    take(*tro, cfg, "sigma", tr.sigma);
    take(*tro, cfg, "out", tr.out);
    std::vector<double> a;
    if (tro->count("--a") > 0) a = parse_double_list(tr.a_str, "a");
    take_list(*tro, cfg, "a", a);
    if (tr.steps < 1) throw std::invalid_argument("trotter needs --steps >= 1");

    const GridSpec grid{1, tr.grid_n, tr.L};
    grid.validate();
    const DensityField p0 = make_initial(grid, 2, tr.init, tr.component, a, tr.sigma);
    const LatticeField f0 = rebin(p0, tr.grid_n);  // same-resolution copy
    const LatticeField fT = trotter_evolve(f0, tr.time, tr.steps);
    std::ostringstream os;
    write_lattice_csv(os, fT);
    emit(tr.out, os.str());
  });

  // ---- prw ---------------------------------------------------------------
  struct {
    double lambda = 1.0;
    double c = 1.0;
    std::int64_t walkers = 100000;
    std::uint64_t seed = 0;
    double dt = 1e-3;
    double time = 1.0;
    int histogram = 0;
    double L = 2.0;
    std::string out = "prw_out";
    std::string config;
  } pw;
  CLI::App* prw = app.add_subcommand(
      "prw", "Simulate the persistent random walk and optionally bin a histogram");
  prw->add_option("--lambda", pw.lambda, "velocity flip rate (config key: lambda)");
  prw->add_option("--c", pw.c, "walker speed (config key: c)");
  prw->add_option("--walkers", pw.walkers, "ensemble size (config key: walkers)");
  prw->add_option("--seed", pw.seed, "counter-based RNG seed (config key: seed)");
  prw->add_option("--dt", pw.dt, "time step (config key: dt)");
  prw->add_option("--time", pw.time, "final time (config key: time)");
  prw->add_option("--histogram", pw.histogram,
                  "also write a histogram with this many bins (config key: histogram)");
  prw->add_option("--L", pw.L, "histogram half length; bins cover [-L, L) (config key: L)");
  prw->add_option("--out", pw.out,
                  "output prefix: writes <out>_ensemble.csv and, with --histogram, "
                  "<out>_histogram.csv (config key: out)");
  prw->add_option("--config", pw.config, "JSON config file; flags override it");
  prw->callback([&]() {
    const json cfg = load_config(
        pw.config, {"lambda", "c", "walkers", "seed", "dt", "time", "histogram", "L", "out"},
        "prw");
    take(*prw, cfg, "lambda", pw.lambda);
    take(*prw, cfg, "c", pw.c);
    take(*prw, cfg, "walkers", pw.walkers);
    take(*prw, cfg, "seed", pw.seed);
    take(*prw, cfg, "dt", pw.dt);
    take(*prw, cfg, "time", pw.time);
    take(*prw, cfg, "histogram", pw.histogram);
    take(*prw, cfg, "L", pw.L);
    take(*prw, cfg, "out", pw.out);
    if (pw.out.empty()) throw std::invalid_argument("prw needs a nonempty --out prefix");

    const PrwConfig sim{pw.lambda, pw.c, pw.walkers, pw.seed, pw.dt};
    const WalkerEnsemble ens = prw_simulate(sim, pw.time);
    {
      std::ostringstream os;
      write_ensemble_csv(os, ens);
      emit(pw.out + "_ensemble.csv", os.str());
    }
    if (pw.histogram != 0) {
      if (pw.histogram < 1) throw std::invalid_argument("histogram bin count must be positive");
      const LatticeField h = bin_ensemble(ens, pw.histogram, 2.0 * pw.L / pw.histogram);
      std::ostringstream os;
      write_histogram_csv(os, h);
      emit(pw.out + "_histogram.csv", os.str());
    }
  });

  // ---- report ------------------------------------------------------------
  struct {
    int dim = 1;
    int m = 1;
    double alpha = 1.0;
    int grid_n = 1024;
    double L = 40.0;
    std::string time_str = "0.5,1,2,5";
    std::string init = "cauchy";
    int component = 1;
    std::string a_str;
    double sigma = 1.0;
    std::string out;
    std::string config;
  } rt;
  CLI::App* rep_all = app.add_subcommand(
      "report", "Run the preservation criterion plus a positivity scan; emit one JSON report");
  rep_all->add_option("--dim", rt.dim, "spatial dimension (config key: dim)");
  rep_all->add_option("--m", rt.m, "block multiplicity for dim 1 (config key: m)");
  rep_all->add_option("--alpha", rt.alpha, "decay rate (config key: alpha)");
  rep_all->add_option("--grid", rt.grid_n, "sites per axis (config key: grid)");
  rep_all->add_option("--L", rt.L, "half box length (config key: L)");
  rep_all->add_option("--time", rt.time_str, "comma separated scan times (config key: time)");
  rep_all->add_option("--init", rt.init, "cauchy|gaussian|box|delta (config key: init)");
  rep_all->add_option("--component", rt.component,
                      "1-based initial component (config key: component)");
  rep_all->add_option("--a", rt.a_str, "comma separated center/shift (config key: a)");
  rep_all->add_option("--sigma", rt.sigma, "gaussian width or box half-width (config key: sigma)");
  rep_all->add_option("--out", rt.out, "output path, stdout if omitted (config key: out)");
  rep_all->add_option("--config", rt.config, "JSON config file; flags override it");
  rep_all->callback([&]() {
    const json cfg = load_config(
        rt.config,
        {"dim", "m", "alpha", "grid", "L", "time", "init", "component", "a", "sigma", "out"},
        "report");
    take(*rep_all, cfg, "dim", rt.dim);
    take(*rep_all, cfg, "m", rt.m);
    take(*rep_all, cfg, "alpha", rt.alpha);
    take(*rep_all, cfg, "grid", rt.grid_n);
    take(*rep_all, cfg, "L", rt.L);
    take(*rep_all, cfg, "init", rt.init);
    take(*rep_all, cfg, "component", rt.component);
    take(*rep_all, cfg, "sigma", rt.sigma);
    take(*rep_all, cfg, "out", rt.out);
    std::vector<double> times = parse_double_list(rt.time_str, "time");
    take_list(*rep_all, cfg, "time", times);
    std::vector<double> a;
    if (rep_all->count("--a") > 0) a = parse_double_list(rt.a_str, "a");
    take_list(*rep_all, cfg, "a", a);

    const GeneratorSet g = resolve_generators(rt.dim, rt.m);
    const GridSpec grid{g.d, rt.grid_n, rt.L};
    grid.validate();
    const DensityField p0 = make_initial(grid, g.S, rt.init, rt.component, a, rt.sigma);
    std::sort(times.begin(), times.end());
    const TheoremVerdict verdict = theorem_check(g, rt.alpha);
    const PositivityReport scan = positivity_scan({rt.alpha, g}, p0, times);
    nlohmann::ordered_json j;
    j["verdict"] = nlohmann::ordered_json::parse(verdict_json(verdict));
    j["positivity"] = nlohmann::ordered_json::parse(positivity_json(scan, grid));
    emit(rt.out, j.dump(2) + "\n");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const internal_inconsistency_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("diraclab");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace diraclab::cli
