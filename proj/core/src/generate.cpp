#include "lbsim/generate.hpp"

#include <algorithm>

namespace lbsim {

CnfFormula random_cnf(CounterRng& rng, int var_count, int clause_count, int width) {
  if (width < 1 || width > var_count) throw Error("random_cnf: width must be in [1, var_count]");
  if (clause_count < 1) throw Error("random_cnf: need at least one clause");
  std::vector<Clause> clauses;
  clauses.reserve(clause_count);
  std::vector<int> vars(var_count);
  for (int i = 0; i < var_count; ++i) vars[i] = i;
  for (int j = 0; j < clause_count; ++j) {
    // partial Fisher-Yates for `width` distinct variables
    for (int i = 0; i < width; ++i)
      std::swap(vars[i], vars[i + static_cast<int>(rng.next_below(var_count - i))]);
    Clause c;
    for (int i = 0; i < width; ++i) c.literals.push_back({vars[i], rng.next_bit()});
    clauses.push_back(std::move(c));
  }
  return CnfFormula(var_count, std::move(clauses));
}

CnfFormula one_model_formula(int var_count) {
  std::vector<Clause> clauses;
  for (int i = 0; i < var_count; ++i) clauses.push_back({{{i, false}}});
  return CnfFormula(var_count, std::move(clauses));
}

CnfFormula two_model_formula(int var_count) {
  if (var_count < 2) throw Error("two_model_formula: need at least two variables");
  std::vector<Clause> clauses;
  for (int i = 0; i + 1 < var_count; ++i) clauses.push_back({{{i, false}}});
  return CnfFormula(var_count, std::move(clauses));
}

CnfFormula tautology_formula(int var_count) {
  if (var_count < 1) throw Error("tautology_formula: need at least one variable");
  return CnfFormula(var_count, {Clause{{{0, false}, {0, true}}}});
}

CnfFormula unsat_formula(int var_count) {
  if (var_count < 1) throw Error("unsat_formula: need at least one variable");
  return CnfFormula(var_count, {Clause{{{0, false}}}, Clause{{{0, true}}}});
}

}  // namespace lbsim
