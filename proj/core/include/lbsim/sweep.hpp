#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lbsim/approx.hpp"
#include "lbsim/exact.hpp"

namespace lbsim::sweep {

/// Per-stage noise magnitude, either fixed or tied to the variable count as
/// 2^-(n + offset). Parses "0", "1e-3", "2^-20", "2^-n-1".
struct EpsSpec {
  enum class Kind { absolute, pow2_offset };
  Kind kind = Kind::absolute;
  double value = 0;
  int offset = 0;

  double resolve(int var_count) const;
  std::string str() const;

  static EpsSpec absolute(double v);
  static EpsSpec pow2_offset(int off);
  static EpsSpec parse(std::string_view text);
};

/// Ideal-clone decay versus the closed-form bound across crafted and random
/// formulas. `holds` is vacuously true where the bound does not apply
/// (unsatisfiable instances).
struct ExactSweepRow {
  std::string instance;
  int var_count = 0;
  std::uint64_t models = 0;
  int level = 0;
  ExtProb d_final;
  std::optional<ExtProb> bound;
  bool applicable = false;
  bool holds = true;
};

struct ExactSweepReport {
  std::vector<ExactSweepRow> rows;
  bool all_hold = true;
};

ExactSweepReport exact_bound_sweep(int n_min, int n_max, int off_min, int off_max,
                                   int random_per_n, int clause_width, std::uint64_t seed);

/// Satisfiable-side decay under worst-direction noise (each stage pushed up
/// by eps) against the 2^(-7(k-n)+34) envelope, plus the fixed checkpoint
/// inequalities per variable count.
struct SatDecayRow {
  int var_count = 0;
  int level = 0;
  ExtProb d;
  ExtProb bound;
  bool vacuous = false;  // bound >= 1
  bool holds = true;
};

struct SatSideReport {
  std::vector<SatDecayRow> rows;
  std::vector<DecayMilestones> milestones;
  bool all_hold = true;
};

SatSideReport sat_side_sweep(int n_min, int n_max, int off_max, const EpsSpec& eps);

/// Unsatisfiable-side floor: with d_0 = 1 and every stage pushed down by
/// eps, d_k stays above 1 - (2^k - 1) eps while that floor is positive.
struct UnsatFloorRow {
  int level = 0;
  ExtProb d;
  ExtProb floor;
  bool holds = true;
};

struct UnsatSideReport {
  int var_count = 0;
  std::vector<UnsatFloorRow> rows;
  int first_vacuous_level = -1;  // smallest level whose floor is not positive
  bool all_hold = true;
};

UnsatSideReport unsat_side_sweep(int var_count, int max_level, const EpsSpec& eps);

/// Combined error-bound grid over variable counts, stage offsets and noise
/// levels. Rows outside the bound's hypotheses are kept and flagged.
struct MaxBoundRow {
  int var_count = 0;
  int level = 0;
  double eps = 0;
  std::string eps_label;
  bool hypotheses_ok = false;
  std::optional<AlbBoundReport> report;
};

struct MaxBoundGrid {
  std::vector<MaxBoundRow> rows;
};

MaxBoundGrid max_bound_grid(int n_min, int n_max, int off_min, int off_max,
                            const std::vector<EpsSpec>& eps_list);

}  // namespace lbsim::sweep
