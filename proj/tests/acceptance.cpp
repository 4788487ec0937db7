// Acceptance gate: one line per criterion, exit code = number of failures.
//
// Each check pins its own tolerances and runtime ceiling; a criterion fails
// on any violated inequality, a mismatched count, or a blown time box.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <lbsim/approx.hpp>
#include <lbsim/circuit.hpp>
#include <lbsim/exact.hpp>
#include <lbsim/generate.hpp>
#include <lbsim/nogo.hpp>
#include <lbsim/rng.hpp>
#include <lbsim/sampler.hpp>
#include <lbsim/sweep.hpp>

#include "support.hpp"

namespace {

using lbsim::ExtProb;

// Criterion 2: the ideal bound constant at offset 6 and its published ceiling.
constexpr double kConstantRelTol = 1e-6;  // six significant digits
constexpr double kConstantCeiling = 1.61e-28;

// Criterion 4: first noisy stage must land within one double ulp of 1 - eps.
constexpr double kUlp = 2.220446049250313e-16;

// Criterion 6: binomial z window and required hit rate.
constexpr double kSigmaWindow = 3.0;
constexpr int kMinMonteCarloHits = 19;

// Criterion 7: monotonicity slack and overlap ceiling.
constexpr double kMonotoneSlack = 1e-12;
constexpr double kOverlapCeiling = 1e-10;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(4);
  ss << v;
  return ss.str();
}

// 1. Ideal-clone decay stays under the closed-form ceiling across crafted
//    and random 3-CNF instances.
Outcome ideal_clone_ceiling() {
  const int n_min = 4, n_max = 12, off_max = 16, random_per_n = 25;
  auto rep = lbsim::sweep::exact_bound_sweep(n_min, n_max, 0, off_max, random_per_n, 3, 424242);

  const std::size_t instances = std::size_t(n_max - n_min + 1) * (3 + random_per_n);
  const std::size_t expect_rows = instances * (off_max + 1);
  if (rep.rows.size() != expect_rows)
    return fail("expected " + std::to_string(expect_rows) + " rows, got " +
                std::to_string(rep.rows.size()));

  std::size_t applicable = 0, violations = 0;
  for (const auto& r : rep.rows) {
    if (!r.applicable) continue;
    ++applicable;
    if (!r.holds) ++violations;
  }
  if (violations > 0) return fail(std::to_string(violations) + " rows broke the ceiling");
  if (applicable < 200 * std::size_t(off_max + 1))
    return fail("too few applicable rows: " + std::to_string(applicable));
  return pass(std::to_string(instances) + " instances, " + std::to_string(applicable) +
              " bounded rows, 0 violations");
}

// 2. The offset-6 single-model ceiling equals e^-64 to six digits and stays
//    under 1.61e-28, independent of the variable count.
Outcome boosted_error_constant() {
  const double reference = static_cast<double>(std::exp(-64.0L));
  for (int n = 4; n <= 12; ++n) {
    ExtProb b = lbsim::exact_error_bound(1, n, n + 6);
    double v = b.to_double();
    if (std::abs(v / reference - 1.0) > kConstantRelTol)
      return fail("n=" + std::to_string(n) + ": " + b.decimal_string(9) + " is not e^-64");
    if (!(b < ExtProb::from_double(kConstantCeiling)))
      return fail("n=" + std::to_string(n) + ": " + b.decimal_string(9) + " >= 1.61e-28");
  }
  return pass(lbsim::exact_error_bound(1, 8, 14).decimal_string(7) + " < 1.61e-28 for all n");
}

// 3. Worst-case +eps decay stays under 2^(-7(k-n)+34) for 40 stages past n,
//    and every checkpoint inequality holds, for n in [7, 24].
Outcome noisy_decay_ceiling() {
  auto rep = lbsim::sweep::sat_side_sweep(7, 24, 40, lbsim::sweep::EpsSpec::pow2_offset(1));
  std::size_t bad_rows = 0;
  for (const auto& r : rep.rows)
    if (!r.holds) ++bad_rows;
  if (bad_rows > 0) return fail(std::to_string(bad_rows) + " rows broke the envelope");
  std::size_t bad_points = 0, points = 0;
  for (const auto& m : rep.milestones) {
    points += m.points.size();
    for (const auto& p : m.points)
      if (!p.holds) ++bad_points;
  }
  if (bad_points > 0) return fail(std::to_string(bad_points) + " checkpoints failed");
  if (!rep.all_hold) return fail("sweep flagged a violation");
  return pass(std::to_string(rep.rows.size()) + " rows, " + std::to_string(points) +
              " checkpoints, 0 violations");
}

// 4. Worst-case -eps drift stays on or above 1 - (2^k - 1) eps while that
//    floor is positive, and the first stage lands exactly on 1 - eps.
Outcome drift_floor() {
  const double epsilons[] = {1e-3, 1e-6, std::ldexp(1.0, -20)};
  std::size_t rows = 0;
  for (double eps : epsilons) {
    auto rep = lbsim::sweep::unsat_side_sweep(8, 62, lbsim::sweep::EpsSpec::absolute(eps));
    rows += rep.rows.size();
    if (!rep.all_hold) return fail("floor broken at eps=" + fmt(eps));

    auto one_stage =
        lbsim::boost_approx(ExtProb::one(), 1, lbsim::NoiseModel::fixed(eps, false));
    double d1 = one_stage.final_d().to_double();
    if (std::abs(d1 - (1.0 - eps)) > kUlp)
      return fail("d_1 off by " + fmt(std::abs(d1 - (1.0 - eps))) + " at eps=" + fmt(eps));
  }
  return pass(std::to_string(rows) + " floor rows hold, first stage exact");
}

// 5. Combined error bound: at offset 12 with eps = 2^-(n+62) the dominant
//    term sits under 2^-49.5; at offset 4 with eps = 2^-(n+6) the worst-case
//    trace is already under 1/4 - 3 eps.
Outcome combined_bound_constants() {
  const ExtProb ceiling = ExtProb::from_ln(-49.5L * std::log(2.0L));
  for (int n : {7, 10, 16}) {
    auto rep = lbsim::alb_error_bound(n, n + 12, std::ldexp(1.0, -(n + 62)));
    if (!(rep.p_err_bound < ceiling))
      return fail("n=" + std::to_string(n) + ": bound " + rep.p_err_bound.decimal_string(6) +
                  " >= 2^-49.5");

    double eps = std::ldexp(1.0, -(n + 6));
    ExtProb d0 = ExtProb::from_double(1.0 - std::ldexp(1.0, -n));
    auto trace = lbsim::boost_approx(d0, n + 4, lbsim::NoiseModel::fixed(eps, true), n);
    if (!(trace.final_d() < ExtProb::from_double(0.25 - 3 * eps)))
      return fail("n=" + std::to_string(n) + ": d_{n+4} = " +
                  trace.final_d().decimal_string(6) + " >= 1/4 - 3eps");
  }
  return pass("offset-12 bound < 2^-49.5 and offset-4 trace < 1/4 - 3eps at n = 7, 10, 16");
}

// 6. Sampled boosted-output frequency agrees with the propagated prediction
//    within 3 binomial sigmas in at least 19 of 20 seeded runs.
Outcome monte_carlo_consistency() {
  struct Case {
    lbsim::CnfFormula formula;
    int level;
  };
  std::vector<Case> cases;
  for (int level : {5, 6, 7}) cases.push_back({lbsim::one_model_formula(6), level});
  for (int level : {7, 8, 9, 10}) cases.push_back({lbsim::one_model_formula(8), level});
  for (int level : {9, 10, 11, 12}) cases.push_back({lbsim::one_model_formula(10), level});
  for (int level : {7, 8, 9}) cases.push_back({lbsim::two_model_formula(8), level});
  for (int level : {10, 11}) cases.push_back({lbsim::two_model_formula(10), level});
  auto reference = lbsim::parse_dimacs("p cnf 4 2\n-3 -4 0\n1 3 2 0\n");
  for (int level : {2, 3}) cases.push_back({reference, level});
  cases.push_back({lbsim::unsat_formula(4), 8});
  cases.push_back({lbsim::tautology_formula(6), 8});
  if (cases.size() != 20) return fail("case list is not 20 entries");

  int hits = 0;
  std::ostringstream detail;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    lbsim::SamplerConfig cfg;
    cfg.seed = 1000 + i;
    cfg.trials = 10000;
    auto rep = lbsim::sample_boosted(cases[i].formula, cases[i].level,
                                     lbsim::NoiseModel::exact_clones(), cfg);
    bool ok = rep.sigma == 0.0
                  ? rep.emp.freq == rep.predicted
                  : std::abs(rep.emp.freq - rep.predicted) <= kSigmaWindow * rep.sigma;
    if (ok)
      ++hits;
    else
      detail << " case " << i << " |" << fmt(rep.emp.freq) << " - " << fmt(rep.predicted)
             << "| > 3 sigma;";
  }
  if (hits < kMinMonteCarloHits)
    return fail("only " + std::to_string(hits) + "/20 within 3 sigma:" + detail.str());
  return pass(std::to_string(hits) + "/20 runs within 3 sigma at 10^4 trials");
}

// 7. No constrained unitary step lowers the zero-probability: 1000 instances
//    per hidden width with zero slack violations and negligible overlap, while
//    unconstrained controls do produce decreases.
Outcome unitary_monotonicity() {
  auto rep = lbsim::nogo::verify_monotone(1, 3, 1000, 4, 99991, 50);
  if (rep.mfp_instances != 3000)
    return fail("expected 3000 constrained instances, got " + std::to_string(rep.mfp_instances));
  if (rep.violations != 0)
    return fail(std::to_string(rep.violations) + " decreasing constrained steps");
  if (rep.min_slack < -kMonotoneSlack)
    return fail("min slack " + fmt(rep.min_slack) + " below -1e-12");
  if (rep.max_cross_term > kOverlapCeiling)
    return fail("overlap " + fmt(rep.max_cross_term) + " above 1e-10");
  if (rep.control_decreases < 1) return fail("no control decrease: the constraint never bound");
  return pass(std::to_string(rep.mfp_evaluations) + " constrained evaluations, 0 decreases, " +
              std::to_string(rep.control_decreases) + "/" +
              std::to_string(rep.control_instances) + " controls decreased");
}

// 8. Reduction trees: exact gate count for every (M, K), correct value on
//    exhaustive inputs.
Outcome gate_accounting() {
  for (int m = 1; m <= 64; ++m)
    for (int k = 2; k <= 8; ++k) {
      auto tree = lbsim::decompose_gate(m, k);
      int expect = m == 1 ? 0 : (m - 2) / (k - 1) + 1;
      if (tree.gate_count != expect)
        return fail("count(" + std::to_string(m) + "," + std::to_string(k) + ") = " +
                    std::to_string(tree.gate_count) + ", want " + std::to_string(expect));
    }
  std::uint64_t evals = 0;
  for (int m = 1; m <= 16; ++m)
    for (int k = 2; k <= 8; ++k) {
      auto or_tree = lbsim::decompose_gate(m, k, lbsim::GateKind::or_gate);
      auto and_tree = lbsim::decompose_gate(m, k, lbsim::GateKind::and_gate);
      const std::uint64_t full = (std::uint64_t(1) << m) - 1;
      for (std::uint64_t bits = 0; bits <= full; ++bits) {
        if (lbsim::evaluate_tree(or_tree, bits) != (bits != 0))
          return fail("OR tree wrong at M=" + std::to_string(m) + " K=" + std::to_string(k));
        if (lbsim::evaluate_tree(and_tree, bits) != (bits == full))
          return fail("AND tree wrong at M=" + std::to_string(m) + " K=" + std::to_string(k));
        evals += 2;
      }
    }
  return pass("448 gate counts exact, " + std::to_string(evals) + " exhaustive evaluations");
}

// 9. Cloner quality: exact fractions at (1,2) and strict monotone approach
//    of the single-copy precision to 1/3 with gap exactly 1/(3M).
Outcome cloning_precision() {
  using lbsim::Rational;
  auto base = lbsim::gisin_massar(1, 2);
  if (!(base.fidelity == Rational::of(5, 6))) return fail("fidelity(1,2) != 5/6");
  if (!(base.precision == Rational::of(1, 6))) return fail("precision(1,2) != 1/6");

  const Rational third = Rational::of(1, 3);
  Rational prev = base.precision;
  for (std::int64_t m = 3; m <= 200; ++m) {
    Rational cur = lbsim::gisin_massar(1, m).precision;
    if (!(prev < cur)) return fail("precision not increasing at M=" + std::to_string(m));
    if (!(cur < third)) return fail("precision reached 1/3 at M=" + std::to_string(m));
    if (!(third - cur == Rational::of(1, 3 * m)))
      return fail("gap to 1/3 is not 1/(3M) at M=" + std::to_string(m));
    prev = cur;
  }
  return pass("5/6 and 1/6 exact; precision climbs to 1/3 with gap 1/(3M) through M=200");
}

// 10. The library model counter agrees with an independently coded
//     enumeration on 500 random formulas.
Outcome model_counter_cross_check() {
  lbsim::CounterRng rng(20260816, 0);
  for (int i = 0; i < 500; ++i) {
    int n = 3 + (i % 14);
    auto f = lbsim::random_cnf(rng, n, 3 * n, 3);
    std::uint64_t lib = lbsim::count_models(f);
    std::uint64_t oracle = testsup::oracle_count_models(f);
    if (lib != oracle)
      return fail("formula " + std::to_string(i) + " (n=" + std::to_string(n) + "): " +
                  std::to_string(lib) + " vs oracle " + std::to_string(oracle));
  }
  return pass("500 random formulas up to n=16 agree with the oracle");
}

struct Criterion {
  int id;
  const char* name;
  double time_box_s;  // 0: no runtime ceiling
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "ideal-clone ceiling sweep", 10.0, ideal_clone_ceiling},
      {2, "boosted error constant", 0.0, boosted_error_constant},
      {3, "noisy decay ceiling and checkpoints", 5.0, noisy_decay_ceiling},
      {4, "drift floor and first-stage exactness", 0.0, drift_floor},
      {5, "combined error-bound constants", 0.0, combined_bound_constants},
      {6, "Monte Carlo consistency", 60.0, monte_carlo_consistency},
      {7, "unitary monotonicity search", 30.0, unitary_monotonicity},
      {8, "gate decomposition accounting", 0.0, gate_accounting},
      {9, "cloning fidelity and precision", 0.0, cloning_precision},
      {10, "model-counter cross-check", 0.0, model_counter_cross_check},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && c.time_box_s > 0 && elapsed > c.time_box_s)
      out = fail("passed but took " + fmt(elapsed) + "s, ceiling " + fmt(c.time_box_s) + "s");

    std::ostringstream line;
    line << (out.pass ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.name << " (" << out.detail
         << ", " << fmt(elapsed) << "s)";
    std::cout << line.str() << '\n';
    if (!out.pass) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria hold"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << '\n';
  return failures;
}
