#include "lbsim/sampler.hpp"

#include <cmath>
#include <string>

#include "lbsim/approx.hpp"

namespace lbsim {

namespace {

void fill_stats(EmpiricalResult& r) {
  r.freq = r.trials ? static_cast<double>(r.ones) / static_cast<double>(r.trials) : 0.0;
  r.ci95 = r.trials ? 1.96 * std::sqrt(r.freq * (1.0 - r.freq) / static_cast<double>(r.trials)) : 0.0;
}

void check_budget(std::uint64_t trials, std::uint64_t evals_per_trial, std::uint64_t budget,
                  const std::string& what) {
  __int128 need = static_cast<__int128>(trials) * evals_per_trial;
  if (need > static_cast<__int128>(budget))
    throw BudgetError("sampler: " + what + " costs " + std::to_string(evals_per_trial) +
                      " formula evaluations per trial; " + std::to_string(trials) +
                      " trials need more than the work budget of " + std::to_string(budget) +
                      " (raise the budget to proceed)");
}

// Ideal-clone draw, fresh subtree per clone.  Identical in distribution to
// the flat OR of 2^level draws; both may stop at the first 1.
bool draw_tree(const CnfFormula& f, CounterRng& rng, int level) {
  if (level == 0) return sample_formula_bit(f, rng);
  if (draw_tree(f, rng, level - 1)) return true;
  return draw_tree(f, rng, level - 1);
}

bool draw_flat(const CnfFormula& f, CounterRng& rng, int level) {
  std::uint64_t draws = std::uint64_t(1) << level;
  for (std::uint64_t j = 0; j < draws; ++j)
    if (sample_formula_bit(f, rng)) return true;
  return false;
}

}  // namespace

bool sample_formula_bit(const CnfFormula& f, CounterRng& rng) {
  if (f.var_count() > 62) throw CapacityError("sampler: var_count must be <= 62");
  return f.evaluate_bits(rng.next_bits(f.var_count()));
}

EmpiricalResult sample_d0(const CnfFormula& f, const SamplerConfig& cfg) {
  check_budget(cfg.trials, 1, cfg.work_budget, "one formula draw");
  EmpiricalResult r;
  r.trials = cfg.trials;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    CounterRng rng(cfg.seed, t);
    r.ones += sample_formula_bit(f, rng);
  }
  fill_stats(r);
  return r;
}

SampleReport sample_boosted(const CnfFormula& f, int level, const NoiseModel& model,
                            const SamplerConfig& cfg) {
  if (level < 0 || level > 62) throw Error("sampler: level must be in [0, 62]");
  if (level > 20 && !cfg.allow_large_level)
    throw BudgetError("sampler: level " + std::to_string(level) +
                      " > 20 needs the explicit large-level override (one ideal-clone draw costs 2^" +
                      std::to_string(level) + " formula evaluations)");

  SampleReport rep;
  std::uint64_t models = count_models(f);
  ExtProb d0 = initial_d0(models, f.var_count());
  rep.trace = model.is_exact() ? boost_exact(d0, level, f.var_count())
                               : boost_approx(d0, level, model, f.var_count());
  rep.predicted = 1.0 - rep.trace.final_d().to_double();

  bool exact = model.is_exact();
  if (exact) {
    check_budget(cfg.trials, std::uint64_t(1) << level, cfg.work_budget,
                 "one ideal-clone boosted draw (2^" + std::to_string(level) + ")");
  } else {
    check_budget(cfg.trials, 1, cfg.work_budget, "one noisy boosted draw");
  }

  // Perturbed clone laws as doubles; underflow to 0 only loses mass below
  // double range, which no finite trial count can see.
  std::vector<double> clone_zero_prob(level);
  for (int k = 0; k < level; ++k) {
    ExtProb t = rep.trace.d[k];
    double e = rep.trace.eps_used[k];
    double p = t.to_double() + e;
    clone_zero_prob[k] = p < 0.0 ? 0.0 : p > 1.0 ? 1.0 : p;
  }

  rep.emp.trials = cfg.trials;
  if (cfg.keep_bits) rep.bits.reserve(cfg.trials);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    CounterRng rng(cfg.seed, t);
    bool bit;
    if (exact) {
      bit = cfg.method == SamplerConfig::Method::recursive_tree ? draw_tree(f, rng, level)
                                                                : draw_flat(f, rng, level);
    } else {
      bit = sample_formula_bit(f, rng);
      for (int k = 0; k < level; ++k) {
        bool clone = rng.next_unit() >= clone_zero_prob[k];
        bit = bit || clone;
      }
    }
    rep.emp.ones += bit;
    if (cfg.keep_bits) rep.bits.push_back(bit);
  }
  fill_stats(rep.emp);

  rep.sigma = std::sqrt(rep.predicted * (1.0 - rep.predicted) / static_cast<double>(cfg.trials));
  if (rep.sigma > 0) {
    rep.z = (rep.emp.freq - rep.predicted) / rep.sigma;
  } else {
    rep.z = 0;
    rep.z_defined = rep.emp.freq == rep.predicted;
  }
  return rep;
}

CostReport cost_report(const CnfFormula& f, int level) {
  if (level < 0 || level > 62) throw Error("cost_report: level must be in [0, 62]");
  CostReport c;
  c.draws_per_trial = std::uint64_t(1) << level;
  c.literals_per_draw = f.literal_count();
  c.literal_evals_per_trial =
      static_cast<double>(c.draws_per_trial) * static_cast<double>(c.literals_per_draw);
  return c;
}

}  // namespace lbsim
