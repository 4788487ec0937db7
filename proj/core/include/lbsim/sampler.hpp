#pragma once

#include <cstdint>
#include <vector>

#include "lbsim/cnf.hpp"
#include "lbsim/exact.hpp"
#include "lbsim/noise.hpp"
#include "lbsim/rng.hpp"

namespace lbsim {

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  /// Budget in formula evaluations.  One boosted draw with ideal clones costs
  /// 2^level of them; the distribution-level noisy path costs one per trial.
  std::uint64_t work_budget = std::uint64_t(1) << 26;
  /// level > 20 is refused unless explicitly enabled.
  bool allow_large_level = false;
  /// Ideal-clone sampling layout; both have the same distribution.
  enum class Method { flat_or, recursive_tree };
  Method method = Method::flat_or;
  /// Keep per-trial outcome bits in the report.
  bool keep_bits = false;
};

struct EmpiricalResult {
  std::uint64_t ones = 0;
  std::uint64_t trials = 0;
  double freq = 0;
  double ci95 = 0;  // binomial normal-approx half width
};

struct SampleReport {
  EmpiricalResult emp;
  double predicted = 0;  // 1 - d_level from the propagated trace
  double sigma = 0;      // sqrt(p (1-p) / trials) under the prediction
  double z = 0;          // (freq - predicted) / sigma; 0 when sigma == 0
  bool z_defined = true; // false only if sigma == 0 and freq != predicted
  ProbTrace trace;
  std::vector<std::uint8_t> bits;  // per-trial outcomes if requested
};

/// One formula draw: fair random assignment, evaluate.  var_count <= 62.
bool sample_formula_bit(const CnfFormula& f, CounterRng& rng);

/// Monte Carlo estimate of P(formula = 1) under fair inputs.
EmpiricalResult sample_d0(const CnfFormula& f, const SamplerConfig& cfg);

/// Monte Carlo estimate of P(boosted output = 1) after `level` stages.
/// Ideal clones resample the whole subtree (2^level formula draws per trial,
/// OR-combined, early exit allowed); noisy clones draw each stage's clone
/// from its tracked perturbed law.  Per-trial RNG streams are indexed by
/// trial number, so results are reproducible and order-independent.
SampleReport sample_boosted(const CnfFormula& f, int level, const NoiseModel& model,
                            const SamplerConfig& cfg);

struct CostReport {
  std::uint64_t draws_per_trial = 0;     // 2^level
  std::uint64_t literals_per_draw = 0;   // total literal occurrences
  double literal_evals_per_trial = 0;    // product, as a double
};

/// Nominal ideal-clone cost of one boosted draw.  level <= 62.
CostReport cost_report(const CnfFormula& f, int level);

}  // namespace lbsim
