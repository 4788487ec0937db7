#include "lbsim/sweep.hpp"

#include <cmath>
#include <cstdlib>

#include "lbsim/generate.hpp"
#include "lbsim/rng.hpp"

namespace lbsim::sweep {
namespace {

void require_level_window(int n_min, int n_max, int off_min, int off_max) {
  if (n_min < 1 || n_min > n_max) throw Error("empty variable-count range");
  if (off_min > off_max) throw Error("empty level-offset range");
  if (off_max > 64) throw Error("level offset above variable count is capped at 64");
}

int parse_int(std::string_view s, bool& ok) {
  ok = false;
  if (s.empty()) return 0;
  char* end = nullptr;
  std::string buf(s);
  long v = std::strtol(buf.c_str(), &end, 10);
  if (end != buf.c_str() + buf.size()) return 0;
  ok = true;
  return static_cast<int>(v);
}

}  // namespace

double EpsSpec::resolve(int var_count) const {
  if (kind == Kind::absolute) return value;
  int e = var_count + offset;
  if (e < 0 || e > 1074) throw Error("noise exponent out of range");
  return std::ldexp(1.0, -e);
}

std::string EpsSpec::str() const {
  if (kind == Kind::pow2_offset) return "2^-n-" + std::to_string(offset);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

EpsSpec EpsSpec::absolute(double v) {
  if (!(v >= 0.0) || v > 1.0) throw Error("noise magnitude must be in [0, 1]");
  EpsSpec s;
  s.kind = Kind::absolute;
  s.value = v;
  return s;
}

EpsSpec EpsSpec::pow2_offset(int off) {
  if (off < 0 || off > 1024) throw Error("noise offset must be in [0, 1024]");
  EpsSpec s;
  s.kind = Kind::pow2_offset;
  s.offset = off;
  return s;
}

EpsSpec EpsSpec::parse(std::string_view text) {
  if (text.rfind("2^-n-", 0) == 0) {
    bool ok = false;
    int off = parse_int(text.substr(5), ok);
    if (!ok) throw ParseError("bad noise spec: " + std::string(text));
    return pow2_offset(off);
  }
  if (text.rfind("2^-", 0) == 0) {
    bool ok = false;
    int e = parse_int(text.substr(3), ok);
    if (!ok || e < 0 || e > 1074) throw ParseError("bad noise spec: " + std::string(text));
    return absolute(std::ldexp(1.0, -e));
  }
  char* end = nullptr;
  std::string buf(text);
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !(v >= 0.0) || v > 1.0)
    throw ParseError("bad noise spec: " + std::string(text));
  return absolute(v);
}

ExactSweepReport exact_bound_sweep(int n_min, int n_max, int off_min, int off_max,
                                   int random_per_n, int clause_width, std::uint64_t seed) {
  require_level_window(n_min, n_max, off_min, off_max);
  if (n_max > 26) throw Error("model counts above 26 variables are too slow for a sweep");
  if (random_per_n < 0) throw Error("random instance count must be >= 0");

  ExactSweepReport rep;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<std::pair<std::string, CnfFormula>> cases;
    cases.emplace_back("one-model", one_model_formula(n));
    if (n >= 2) cases.emplace_back("two-model", two_model_formula(n));
    cases.emplace_back("tautology", tautology_formula(n));
    CounterRng rng(seed, static_cast<std::uint64_t>(n));
    for (int r = 0; r < random_per_n; ++r) {
      int m = 4 * n;
      cases.emplace_back("random-" + std::to_string(r),
                         random_cnf(rng, n, m, clause_width));
    }

    for (auto& [tag, f] : cases) {
      std::uint64_t models = count_models(f, 26);
      for (int off = off_min; off <= off_max; ++off) {
        int level = n + off;
        if (level < 0) continue;
        ExactSweepRow row;
        row.instance = tag;
        row.var_count = n;
        row.models = models;
        row.level = level;
        ProbTrace tr = boost_exact(initial_d0(models, n), level, n);
        row.d_final = tr.final_d();
        row.applicable = models >= 1;
        if (row.applicable) {
          row.bound = exact_error_bound(models, n, level);
          row.holds = row.d_final < *row.bound;
        }
        rep.all_hold = rep.all_hold && row.holds;
        rep.rows.push_back(std::move(row));
      }
    }
  }
  return rep;
}

SatSideReport sat_side_sweep(int n_min, int n_max, int off_max, const EpsSpec& eps) {
  require_level_window(n_min, n_max, 0, off_max);

  SatSideReport rep;
  for (int n = n_min; n <= n_max; ++n) {
    double e = eps.resolve(n);
    if (n < 7) throw HypothesisError("noisy decay bound needs at least 7 variables");
    if (e > std::ldexp(1.0, -(n + 1)))
      throw HypothesisError("noise must be at most 2^-(n+1)");

    // Worst starting point and worst noise direction for the decay side.
    ExtProb d0 = ExtProb::one() - ExtProb::pow2(-n);
    int levels = std::max(off_max, 6) + n;
    ProbTrace tr = boost_approx(d0, levels, NoiseModel::fixed(e, true), n);

    for (int off = 0; off <= off_max; ++off) {
      SatDecayRow row;
      row.var_count = n;
      row.level = n + off;
      row.d = tr.d[static_cast<std::size_t>(row.level)];
      row.bound = sat_decay_bound(row.level, n);
      row.vacuous = !(row.bound < ExtProb::one());
      row.holds = row.vacuous || row.d < row.bound;
      rep.all_hold = rep.all_hold && row.holds;
      rep.rows.push_back(row);
    }
    DecayMilestones ms = check_decay_milestones(tr, e);
    rep.all_hold = rep.all_hold && ms.all_hold;
    rep.milestones.push_back(std::move(ms));
  }
  return rep;
}

UnsatSideReport unsat_side_sweep(int var_count, int max_level, const EpsSpec& eps) {
  if (var_count < 1) throw Error("variable count must be >= 1");
  if (max_level < 1 || max_level > 62) throw Error("level must be in [1, 62]");
  double e = eps.resolve(var_count);

  UnsatSideReport rep;
  rep.var_count = var_count;
  ProbTrace tr =
      boost_approx(ExtProb::one(), max_level, NoiseModel::fixed(e, false), var_count);

  for (int k = 1; k <= max_level; ++k) {
    auto floor = unsat_drift_floor(k, e);
    if (!floor) {
      rep.first_vacuous_level = k;
      break;
    }
    UnsatFloorRow row;
    row.level = k;
    row.d = tr.d[static_cast<std::size_t>(k)];
    row.floor = *floor;
    row.holds = !(row.d < row.floor);
    rep.all_hold = rep.all_hold && row.holds;
    rep.rows.push_back(row);
  }
  return rep;
}

MaxBoundGrid max_bound_grid(int n_min, int n_max, int off_min, int off_max,
                            const std::vector<EpsSpec>& eps_list) {
  require_level_window(n_min, n_max, off_min, off_max);
  if (eps_list.empty()) throw Error("need at least one noise spec");

  MaxBoundGrid grid;
  for (int n = n_min; n <= n_max; ++n) {
    for (int off = off_min; off <= off_max; ++off) {
      int level = n + off;
      if (level < 0 || level > 62) continue;
      for (const EpsSpec& spec : eps_list) {
        MaxBoundRow row;
        row.var_count = n;
        row.level = level;
        row.eps_label = spec.str();
        try {
          row.eps = spec.resolve(n);
          row.report = alb_error_bound(n, level, row.eps);
          row.hypotheses_ok = true;
        } catch (const HypothesisError&) {
          row.hypotheses_ok = false;
        }
        grid.rows.push_back(std::move(row));
      }
    }
  }
  return grid;
}

}  // namespace lbsim::sweep
