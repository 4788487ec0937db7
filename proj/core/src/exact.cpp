#include "lbsim/exact.hpp"

#include <cmath>

namespace lbsim {

ExtProb initial_d0(std::uint64_t models, int var_count) {
  if (var_count < 0 || var_count > 62) throw CapacityError("initial_d0: var_count must be in [0, 62]");
  std::uint64_t total = std::uint64_t(1) << var_count;
  if (models > total) throw Error("initial_d0: model count exceeds 2^var_count");
  // total - models <= 2^62 is exact in double; the 2^-var_count scale is too.
  return ExtProb::from_double(static_cast<double>(total - models)).scaled_pow2(-var_count);
}

ProbTrace boost_exact(const ExtProb& d0, int level, int var_count, int fan_in) {
  if (level < 0) throw Error("boost_exact: level must be >= 0");
  if (ExtProb::one() < d0) throw Error("boost_exact: d0 must be a probability in [0, 1]");
  ProbTrace t;
  t.params = {var_count, level, fan_in, NoiseModel::exact_clones()};
  t.d.reserve(level + 1);
  t.d.push_back(d0);
  for (int v = 0; v < level; ++v) t.d.push_back(t.d.back().squared());
  t.eps_used.assign(level, 0.0);
  return t;
}

ExtProb exact_error_bound(std::uint64_t models, int var_count, int level) {
  if (models == 0) throw HypothesisError("exact_error_bound: needs a satisfiable formula (models >= 1)");
  if (var_count < 0 || level < 0) throw Error("exact_error_bound: negative parameters");
  // ln bound = -models * 2^(level - var_count); exact in long double while
  // models * 2^(level - var_count) stays below 2^63.
  long double ln_bound = -std::ldexp(static_cast<long double>(models), level - var_count);
  return ExtProb::from_ln(ln_bound);
}

long double exp_limit_term(std::uint64_t k, std::uint64_t m) {
  if (m <= k) throw Error("exp_limit_term: requires m > k");
  long double x = -static_cast<long double>(k) / static_cast<long double>(m);
  return std::exp(static_cast<long double>(m) * std::log1p(x));
}

Decision decide(const CnfFormula& f, int level, int fan_in, int count_cap) {
  Decision r;
  r.models = count_models(f, count_cap);
  r.satisfiable = r.models > 0;
  ExtProb d0 = initial_d0(r.models, f.var_count());
  r.trace = boost_exact(d0, level, f.var_count(), fan_in);
  if (r.satisfiable) r.error_bound = exact_error_bound(r.models, f.var_count(), level);
  return r;
}

}  // namespace lbsim
