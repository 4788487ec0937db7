#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lbsim/circuit.hpp"
#include "lbsim/cnf.hpp"
#include "lbsim/extprob.hpp"

namespace lbsim {

/// Zero-probability trace d_0..d_level of the boosted output, with the
/// realized per-stage perturbation (all zero for ideal clones).
struct ProbTrace {
  BoostParams params;
  std::vector<ExtProb> d;
  std::vector<double> eps_used;

  const ExtProb& final_d() const { return d.back(); }
};

/// d_0 = 1 - models / 2^var_count.  Exact for var_count <= 52.
ExtProb initial_d0(std::uint64_t models, int var_count);

/// Ideal-clone amplification: d_{v+1} = d_v^2, one rounded multiply per stage.
/// Cumulative budget: |error of ln d_level| <= (2^level - 1) * 2^-52.
ProbTrace boost_exact(const ExtProb& d0, int level, int var_count = 0, int fan_in = 2);

/// Closed-form ceiling (e^-models)^(2^(level - var_count)) on the final
/// zero-probability of a satisfiable formula.  Requires models >= 1; valid
/// for any level >= 0, meaningful amplification needs level >= var_count.
ExtProb exact_error_bound(std::uint64_t models, int var_count, int level);

/// a_m = (1 - k/m)^m for m > k: increases strictly toward e^-k from below,
/// which is what makes the closed-form bound one-sided.  Long double.
long double exp_limit_term(std::uint64_t k, std::uint64_t m);

struct Decision {
  bool satisfiable = false;
  std::uint64_t models = 0;
  ProbTrace trace;
  std::optional<ExtProb> error_bound;  // absent for unsatisfiable input
};

/// Counts models exactly, propagates the trace, reads the verdict.
Decision decide(const CnfFormula& f, int level, int fan_in = 2, int count_cap = 30);

}  // namespace lbsim
