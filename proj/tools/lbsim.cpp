// lbsim: simulate and verify clone-boosted satisfiability detection.
//
// Subcommands:
//   solve      decide a DIMACS formula by exact trace propagation
//   bounds     sweep decay/floor/error inequalities over a parameter grid
//   sample     Monte Carlo estimate of the boosted output distribution
//   nogo       random search for a unitary one-step counterexample
//   resources  gate/depth/time accounting for the boosted circuit
//
// Exit codes: 0 ok (solve: satisfiable), 1 unsatisfiable, 2 usage or
// runtime error, 3 a checked inequality failed.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lbsim/approx.hpp"
#include "lbsim/exact.hpp"
#include "lbsim/nogo.hpp"
#include "lbsim/report.hpp"
#include "lbsim/sampler.hpp"
#include "lbsim/sweep.hpp"

namespace {

lbsim::CnfFormula load_formula(const std::string& path) {
  if (path == "-") return lbsim::parse_dimacs(std::cin);
  std::ifstream in(path);
  if (!in) throw lbsim::Error("cannot open " + path);
  return lbsim::parse_dimacs(in);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw lbsim::Error("cannot write " + path);
  out << text;
}

lbsim::NoiseModel make_noise(const std::string& kind, double eps, std::uint64_t seed) {
  using lbsim::NoiseModel;
  if (kind == "exact") return NoiseModel::exact_clones();
  if (kind == "plus") return NoiseModel::fixed(eps, true);
  if (kind == "minus") return NoiseModel::fixed(eps, false);
  if (kind == "uniform") return NoiseModel::uniform(eps, seed);
  if (kind == "adversarial-max") return NoiseModel::adversarial(eps, NoiseModel::Target::maximize_d);
  if (kind == "adversarial-min") return NoiseModel::adversarial(eps, NoiseModel::Target::minimize_d);
  throw lbsim::Error("unknown noise kind: " + kind);
}

std::string prob_str(const lbsim::ExtProb& p) { return p.decimal_string(6); }

struct SolveOpts {
  std::string path;
  int level = -1;  // -1: var_count + 6
  int fan_in = 2;
  int count_cap = 30;
  bool json = false;
  std::string trace_csv_path;
};

int run_solve(const SolveOpts& o) {
  lbsim::CnfFormula f = load_formula(o.path);
  int level = o.level >= 0 ? o.level : f.var_count() + 6;
  lbsim::Decision d = lbsim::decide(f, level, o.fan_in, o.count_cap);

  if (!o.trace_csv_path.empty()) write_file(o.trace_csv_path, lbsim::report::trace_csv(d.trace));

  if (o.json) {
    std::cout << lbsim::report::to_json(d).dump(2) << '\n';
  } else {
    std::cout << (d.satisfiable ? "SATISFIABLE" : "UNSATISFIABLE") << '\n'
              << "models           " << d.models << '\n'
              << "level            " << level << '\n'
              << "P(output=1)      " << (1.0 - d.trace.final_d().to_double()) << '\n'
              << "final d          " << prob_str(d.trace.final_d()) << '\n';
    if (d.error_bound)
      std::cout << "d ceiling        " << prob_str(*d.error_bound) << '\n';
  }
  return d.satisfiable ? 0 : 1;
}

struct BoundsOpts {
  std::string suite = "all";
  int n_min = 7, n_max = 10;
  int off_min = 0, off_max = 6;
  int sat_off_max = 12;
  int random_per_n = 2;
  int width = 3;
  std::uint64_t seed = 1;
  std::vector<std::string> eps_tokens;
  bool json = false;
};

int run_bounds(const BoundsOpts& o) {
  using namespace lbsim::sweep;
  std::vector<EpsSpec> eps;
  for (const auto& t : o.eps_tokens) eps.push_back(EpsSpec::parse(t));
  if (eps.empty()) eps.push_back(EpsSpec::pow2_offset(1));

  bool all = o.suite == "all";
  bool ok = true;
  lbsim::report::json out;

  if (all || o.suite == "exact") {
    auto rep = exact_bound_sweep(o.n_min, o.n_max, o.off_min, o.off_max, o.random_per_n, o.width,
                                 o.seed);
    ok = ok && rep.all_hold;
    if (o.json) {
      out["exact"] = lbsim::report::to_json(rep);
    } else {
      std::cout << "ideal-clone ceiling: " << rep.rows.size() << " rows, "
                << (rep.all_hold ? "all hold" : "VIOLATED") << '\n';
      for (const auto& r : rep.rows)
        if (!r.holds)
          std::cout << "  FAIL " << r.instance << " n=" << r.var_count << " level=" << r.level
                    << " d=" << prob_str(r.d_final) << " bound=" << prob_str(*r.bound) << '\n';
    }
  }
  if (all || o.suite == "sat") {
    auto rep = sat_side_sweep(o.n_min, o.n_max, o.sat_off_max, eps.front());
    ok = ok && rep.all_hold;
    if (o.json) {
      out["sat"] = lbsim::report::to_json(rep);
    } else {
      std::cout << "noisy decay ceiling: " << rep.rows.size() << " rows, "
                << rep.milestones.size() << " checkpoint sets, "
                << (rep.all_hold ? "all hold" : "VIOLATED") << '\n';
    }
  }
  if (all || o.suite == "unsat") {
    bool hold = true;
    lbsim::report::json rows = lbsim::report::json::array();
    for (int n = o.n_min; n <= o.n_max; ++n) {
      auto rep = unsat_side_sweep(n, std::min(62, n + o.sat_off_max), eps.front());
      hold = hold && rep.all_hold;
      if (o.json) rows.push_back(lbsim::report::to_json(rep));
    }
    ok = ok && hold;
    if (o.json) {
      out["unsat"] = std::move(rows);
    } else {
      std::cout << "drift floor: n in [" << o.n_min << ", " << o.n_max << "], "
                << (hold ? "all hold" : "VIOLATED") << '\n';
    }
  }
  if (all || o.suite == "max") {
    auto grid = max_bound_grid(o.n_min, o.n_max, o.off_min, o.off_max, eps);
    if (o.json) {
      out["max"] = lbsim::report::to_json(grid);
    } else {
      std::cout << "error-bound grid: " << grid.rows.size() << " cells\n";
      for (const auto& r : grid.rows) {
        std::cout << "  n=" << r.var_count << " level=" << r.level << " eps=" << r.eps_label;
        if (r.hypotheses_ok)
          std::cout << " bound=" << prob_str(r.report->p_err_bound)
                    << (r.report->vacuous ? " (vacuous)" : "") << '\n';
        else
          std::cout << " (outside hypotheses)\n";
      }
    }
  }

  if (o.json) {
    out["all_hold"] = ok;
    std::cout << out.dump(2) << '\n';
  } else if (ok) {
    std::cout << "all checked inequalities hold\n";
  }
  return ok ? 0 : 3;
}

struct SampleOpts {
  std::string path;
  int level = 8;
  std::string noise = "exact";
  double eps = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  std::uint64_t budget = std::uint64_t(1) << 26;
  bool allow_large_level = false;
  std::string method = "flat";
  bool json = false;
  std::string per_trial_csv_path;
};

int run_sample(const SampleOpts& o) {
  lbsim::CnfFormula f = load_formula(o.path);
  lbsim::SamplerConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.work_budget = o.budget;
  cfg.allow_large_level = o.allow_large_level;
  cfg.method = o.method == "tree" ? lbsim::SamplerConfig::Method::recursive_tree
                                  : lbsim::SamplerConfig::Method::flat_or;
  cfg.keep_bits = !o.per_trial_csv_path.empty();

  lbsim::SampleReport rep = lbsim::sample_boosted(f, o.level, make_noise(o.noise, o.eps, o.seed), cfg);
  if (!o.per_trial_csv_path.empty())
    write_file(o.per_trial_csv_path, lbsim::report::per_trial_csv(rep));

  if (o.json) {
    auto j = lbsim::report::to_json(rep);
    j.erase("bits");  // per-trial data goes to the CSV, not stdout
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "trials           " << rep.emp.trials << '\n'
              << "P(output=1) est  " << rep.emp.freq << " +/- " << rep.emp.ci95 << '\n'
              << "predicted        " << rep.predicted << '\n';
    if (rep.z_defined)
      std::cout << "z-score          " << rep.z << '\n';
    else
      std::cout << "z-score          undefined (zero predicted variance, observed mismatch)\n";
  }
  return 0;
}

struct NogoOpts {
  int h_min = 1, h_max = 4;
  int instances = 20;
  int inputs = 8;
  int controls = 20;
  std::uint64_t seed = 2026;
  bool json = false;
  std::string dump_path;
};

int run_nogo(const NogoOpts& o) {
  auto rep = lbsim::nogo::verify_monotone(o.h_min, o.h_max, o.instances, o.inputs, o.seed,
                                          o.controls);
  if (!o.dump_path.empty()) {
    auto j = lbsim::report::to_json(rep);
    write_file(o.dump_path, j.contains("example") ? j["example"].dump(2) : "null");
  }
  if (o.json) {
    std::cout << lbsim::report::to_json(rep).dump(2) << '\n';
  } else {
    std::cout << "constrained instances  " << rep.mfp_instances << " (" << rep.mfp_evaluations
              << " evaluations)\n"
              << "monotone violations    " << rep.violations << '\n'
              << "min slack              " << rep.min_slack << '\n'
              << "max cross term         " << rep.max_cross_term << '\n'
              << "max unitarity defect   " << rep.max_unitary_defect << '\n'
              << "control instances      " << rep.control_instances << ", " << rep.control_decreases
              << " decreased (min slack " << rep.control_min_slack << ")\n";
    std::cout << (rep.violations == 0 ? "zero-probability is nondecreasing on every constrained instance\n"
                                      : "FOUND a decreasing constrained instance\n");
  }
  return rep.violations == 0 ? 0 : 3;
}

struct ResourceOpts {
  std::string path;
  int level = -1;
  int fan_in = 2;
  std::int64_t tq = 1, tk = 1, tc = 1;
  bool json = false;
  std::string circuit_json_path;
};

int run_resources(const ResourceOpts& o) {
  lbsim::CnfFormula f = load_formula(o.path);
  int level = o.level >= 0 ? o.level : f.var_count() + 6;
  lbsim::BoostParams p;
  p.var_count = f.var_count();
  p.level = level;
  p.fan_in = o.fan_in;
  lbsim::BoostCircuit c = lbsim::BoostCircuit::build(f, p);
  lbsim::ResourceReport r = lbsim::report_resources(c);

  if (!o.circuit_json_path.empty())
    write_file(o.circuit_json_path, lbsim::report::circuit_json(c).dump(2));

  if (o.json) {
    auto j = lbsim::report::to_json(r);
    j["exact_time_total"] = lbsim::time_total(r.exact_time, o.tq, o.tk, o.tc);
    j["coarse_time_total"] = lbsim::time_total(r.coarse_time, o.tq, o.tk, o.tc);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "sources     " << r.sources << '\n'
              << "NOT gates   " << r.not_gates << '\n'
              << "OR gates    " << r.or_gates << '\n'
              << "AND gates   " << r.and_gates << '\n'
              << "clones      " << r.clones << '\n'
              << "gate depth  " << r.depth << " (formula " << r.formula_depth << ")\n"
              << "time, constructed depth: " << lbsim::time_total(r.exact_time, o.tq, o.tk, o.tc)
              << "  (prep " << r.exact_time.prep << ", layers " << r.exact_time.gate_layers
              << ", clones " << r.exact_time.clones << ")\n"
              << "time, clause-serial:     " << lbsim::time_total(r.coarse_time, o.tq, o.tk, o.tc)
              << "  (prep " << r.coarse_time.prep << ", layers " << r.coarse_time.gate_layers
              << ", clones " << r.coarse_time.clones << ")\n";
    for (const auto& w : c.warnings()) std::cout << "note: " << w << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clone-boosted satisfiability: simulate, sample, and verify the bounds"};
  app.require_subcommand(1);
  app.set_config("--config");
  app.set_version_flag("--version", "lbsim 0.1.0");

  SolveOpts so;
  auto* solve = app.add_subcommand("solve", "decide a DIMACS formula via the boosted trace");
  solve->add_option("formula", so.path, "DIMACS CNF path, or - for stdin")->required();
  solve->add_option("--level", so.level, "clone+OR stages (default: variables + 6)");
  solve->add_option("--fan-in", so.fan_in, "gate fan-in")->check(CLI::Range(2, 64));
  solve->add_option("--count-cap", so.count_cap, "max variables for exact model counting");
  solve->add_flag("--json", so.json, "machine-readable output");
  solve->add_option("--trace-csv", so.trace_csv_path, "write the d_k trace as CSV");

  BoundsOpts bo;
  auto* bounds = app.add_subcommand("bounds", "verify decay ceilings, drift floors, error bounds");
  bounds->add_option("--suite", bo.suite, "exact|sat|unsat|max|all")
      ->check(CLI::IsMember({"exact", "sat", "unsat", "max", "all"}));
  bounds->add_option("--n-min", bo.n_min, "smallest variable count");
  bounds->add_option("--n-max", bo.n_max, "largest variable count");
  bounds->add_option("--off-min", bo.off_min, "smallest level offset (level = n + offset)");
  bounds->add_option("--off-max", bo.off_max, "largest level offset");
  bounds->add_option("--sat-off-max", bo.sat_off_max, "largest offset for decay/floor rows");
  bounds->add_option("--random-per-n", bo.random_per_n, "random formulas per variable count");
  bounds->add_option("--width", bo.width, "random clause width")->check(CLI::Range(1, 16));
  bounds->add_option("--seed", bo.seed, "random-formula seed");
  bounds->add_option("--eps", bo.eps_tokens, "noise magnitudes: 0, 1e-3, 2^-20, 2^-n-1");
  bounds->add_flag("--json", bo.json, "machine-readable output");

  SampleOpts mo;
  auto* sample = app.add_subcommand("sample", "Monte Carlo check of the boosted output");
  sample->add_option("formula", mo.path, "DIMACS CNF path, or - for stdin")->required();
  sample->add_option("--level", mo.level, "clone+OR stages")->check(CLI::Range(0, 62));
  sample->add_option("--noise", mo.noise, "exact|plus|minus|uniform|adversarial-max|adversarial-min")
      ->check(CLI::IsMember({"exact", "plus", "minus", "uniform", "adversarial-max",
                             "adversarial-min"}));
  sample->add_option("--eps", mo.eps, "per-stage noise magnitude");
  sample->add_option("--seed", mo.seed, "sampler seed");
  sample->add_option("--trials", mo.trials, "number of boosted draws");
  sample->add_option("--work-budget", mo.budget, "cap on formula evaluations")
      ->envname("LBSIM_WORK_BUDGET");
  sample->add_flag("--allow-large-level", mo.allow_large_level,
                   "permit level > 20 with ideal clones (cost doubles per level)");
  sample->add_option("--method", mo.method, "flat|tree ideal-clone layout")
      ->check(CLI::IsMember({"flat", "tree"}));
  sample->add_flag("--json", mo.json, "machine-readable output");
  sample->add_option("--per-trial-csv", mo.per_trial_csv_path, "write per-trial outcomes as CSV");

  NogoOpts no;
  auto* nogo = app.add_subcommand("nogo", "search for a unitary step that lowers d");
  nogo->add_option("--h-min", no.h_min, "smallest hidden-register width (qubits)");
  nogo->add_option("--h-max", no.h_max, "largest hidden-register width");
  nogo->add_option("--instances", no.instances, "constrained instances per width");
  nogo->add_option("--inputs", no.inputs, "random inputs per instance (plus |0> and |1>)");
  nogo->add_option("--controls", no.controls, "unconstrained control instances per width");
  nogo->add_option("--seed", no.seed, "instance seed");
  nogo->add_flag("--json", no.json, "machine-readable output");
  nogo->add_option("--dump-violation", no.dump_path, "write the example instance as JSON");

  ResourceOpts ro;
  auto* resources = app.add_subcommand("resources", "gate, depth and time accounting");
  resources->add_option("formula", ro.path, "DIMACS CNF path, or - for stdin")->required();
  resources->add_option("--level", ro.level, "clone+OR stages (default: variables + 6)");
  resources->add_option("--fan-in", ro.fan_in, "gate fan-in")->check(CLI::Range(2, 64));
  resources->add_option("--tq", ro.tq, "cost of one source preparation");
  resources->add_option("--tk", ro.tk, "cost of one gate layer");
  resources->add_option("--tc", ro.tc, "cost of one clone stage");
  resources->add_flag("--json", ro.json, "machine-readable output");
  resources->add_option("--circuit-json", ro.circuit_json_path, "write the gate list as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(solve)) return run_solve(so);
    if (app.got_subcommand(bounds)) return run_bounds(bo);
    if (app.got_subcommand(sample)) return run_sample(mo);
    if (app.got_subcommand(nogo)) return run_nogo(no);
    if (app.got_subcommand(resources)) return run_resources(ro);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
