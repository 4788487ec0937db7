#pragma once

#include "lbsim/cnf.hpp"
#include "lbsim/rng.hpp"

namespace lbsim {

/// Random k-CNF: `clause_count` clauses of `width` distinct variables each,
/// signs fair coin flips.  Requires width <= var_count.
CnfFormula random_cnf(CounterRng& rng, int var_count, int clause_count, int width = 3);

/// Exactly one model (all-true): unit clauses x0 .. x{n-1}.
CnfFormula one_model_formula(int var_count);

/// Exactly two models: unit clauses pinning all variables except the last.
CnfFormula two_model_formula(int var_count);

/// All 2^n assignments satisfy: single tautological clause (x0 | ~x0).
CnfFormula tautology_formula(int var_count);

/// No models: (x0)(~x0).
CnfFormula unsat_formula(int var_count);

}  // namespace lbsim
