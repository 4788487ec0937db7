#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lbsim/exact.hpp"
#include "lbsim/noise.hpp"

namespace lbsim {

/// Noisy-clone amplification: d_{k+1} = d_k * clamp(d_k + e_k, 0, 1) with the
/// per-stage e_k realized by the noise model.  The realized e_k sequence is
/// recorded in the trace, so a run is reproducible from (model, level).
ProbTrace boost_approx(const ExtProb& d0, int level, const NoiseModel& model, int var_count = 0,
                       int fan_in = 2);

/// Worst-case ceiling 2^(-7(k - var_count) + 34) on the satisfiable-side
/// zero-probability after k stages under eps <= 2^-(var_count+1) noise,
/// var_count >= 7.  Values above 1 are vacuous but returned raw.
ExtProb sat_decay_bound(int k, int var_count);

/// Floor 1 - (2^k - 1) * eps on the unsatisfiable-side trace (d_0 = 1) under
/// adversarial -eps noise; nullopt once the expression is no longer positive.
std::optional<ExtProb> unsat_drift_floor(int k, double eps);

struct AlbBoundReport {
  int var_count = 0;
  int level = 0;
  double eps = 0;
  ExtProb sat_term;    // 2^(-7(level - var_count) + 34)
  ExtProb unsat_term;  // (2^level - 1) * eps
  ExtProb p_err_bound; // max of the two
  bool sat_term_vacuous = false;
  bool unsat_term_vacuous = false;
  bool vacuous = false;
};

/// Error ceiling for the noisy decision procedure at the given level:
/// max{sat_term, unsat_term}.  Hypotheses: var_count >= 7 and
/// eps <= 2^-(var_count+1); violations throw HypothesisError.
AlbBoundReport alb_error_bound(int var_count, int level, double eps);

/// Checkpoints the worst-case satisfiable-side trace must pass on its way
/// down: d at var_count+2..+6 under 2/3, 1/2-4eps, 1/4-3eps, 1/16-eps, 1/256,
/// plus d_{n+6} + eps < 1/128.
struct DecayMilestones {
  struct Point {
    int k;
    std::string label;
    ExtProb threshold;
    ExtProb value;
    bool holds = false;
  };
  std::vector<Point> points;
  bool all_hold = false;
};

/// Requires trace.params.var_count >= 7 and a trace reaching var_count+6.
DecayMilestones check_decay_milestones(const ProbTrace& trace, double eps);

/// Exact reduced fraction with cross-multiplied comparison.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return of(static_cast<std::int64_t>(static_cast<__int128>(a.num) * b.den -
                                        static_cast<__int128>(b.num) * a.den),
              a.den * b.den);
  }
};

/// Optimal symmetric-cloner quality for in_count -> out_count qubit cloning
/// (Gisin-Massar): fidelity and worst-case amplitude precision, both exact.
struct CloningPrecision {
  std::int64_t in_count = 0;
  std::int64_t out_count = 0;
  Rational fidelity;
  Rational precision;
};

/// Requires 1 <= in_count < out_count.
CloningPrecision gisin_massar(std::int64_t in_count, std::int64_t out_count);

}  // namespace lbsim
