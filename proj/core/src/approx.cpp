#include "lbsim/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lbsim/rng.hpp"

namespace lbsim {

std::string NoiseModel::name() const {
  switch (kind) {
    case Kind::exact: return "exact";
    case Kind::fixed_plus: return "fixed-plus";
    case Kind::fixed_minus: return "fixed-minus";
    case Kind::uniform_random: return "uniform";
    case Kind::adversarial:
      return target == Target::maximize_d ? "adversarial-max-d" : "adversarial-min-d";
  }
  return "?";
}

namespace {

// One noisy stage.  The perturbed clone law is clamped into [0, 1] before the
// product, so a trace never leaves the probability range.
ExtProb stage(const ExtProb& d, double e) {
  ExtProb t;
  if (e >= 0.0) {
    t = d + ExtProb::from_double(e);
    if (ExtProb::one() < t) t = ExtProb::one();
  } else {
    ExtProb a = ExtProb::from_double(-e);
    t = (d <= a) ? ExtProb::zero() : d - a;
  }
  return d * t;
}

}  // namespace

ProbTrace boost_approx(const ExtProb& d0, int level, const NoiseModel& model, int var_count,
                       int fan_in) {
  if (level < 0) throw Error("boost_approx: level must be >= 0");
  if (ExtProb::one() < d0) throw Error("boost_approx: d0 must be a probability in [0, 1]");
  ProbTrace t;
  t.params = {var_count, level, fan_in, model};
  t.d.reserve(level + 1);
  t.d.push_back(d0);
  t.eps_used.reserve(level);
  CounterRng rng(model.seed, 0x6e6f697365ull);  // stream shared by every stage draw
  for (int k = 0; k < level; ++k) {
    double e = 0.0;
    switch (model.kind) {
      case NoiseModel::Kind::exact: e = 0.0; break;
      case NoiseModel::Kind::fixed_plus: e = model.eps; break;
      case NoiseModel::Kind::fixed_minus: e = -model.eps; break;
      case NoiseModel::Kind::uniform_random: e = (2.0 * rng.next_unit() - 1.0) * model.eps; break;
      case NoiseModel::Kind::adversarial:
        // d_{k+1} is nondecreasing in e_k, so the per-stage extreme is the
        // global extreme for the whole trace.
        e = model.target == NoiseModel::Target::maximize_d ? model.eps : -model.eps;
        break;
    }
    t.eps_used.push_back(e);
    t.d.push_back(stage(t.d.back(), e));
  }
  return t;
}

ExtProb sat_decay_bound(int k, int var_count) {
  return ExtProb::pow2(-std::int64_t(7) * (k - var_count) + 34);
}

std::optional<ExtProb> unsat_drift_floor(int k, double eps) {
  if (k < 0 || k > 62) throw Error("unsat_drift_floor: k must be in [0, 62]");
  ExtProb e = ExtProb::from_double(eps);
  if (e.is_zero()) return ExtProb::one();
  ExtProb drift = e.scaled_pow2(k) - e;  // (2^k - 1) * eps
  if (!(drift < ExtProb::one())) return std::nullopt;
  return ExtProb::one() - drift;
}

AlbBoundReport alb_error_bound(int var_count, int level, double eps) {
  if (var_count < 7)
    throw HypothesisError("alb_error_bound: requires var_count >= 7");
  if (!(eps >= 0.0) || eps > std::ldexp(1.0, -(var_count + 1)))
    throw HypothesisError("alb_error_bound: requires 0 <= eps <= 2^-(var_count+1)");
  if (level < 0 || level > 62) throw Error("alb_error_bound: level must be in [0, 62]");
  AlbBoundReport r;
  r.var_count = var_count;
  r.level = level;
  r.eps = eps;
  r.sat_term = sat_decay_bound(level, var_count);
  ExtProb e = ExtProb::from_double(eps);
  r.unsat_term = e.is_zero() ? ExtProb::zero() : e.scaled_pow2(level) - e;
  r.p_err_bound = std::max(r.sat_term, r.unsat_term);
  r.sat_term_vacuous = ExtProb::one() < r.sat_term;
  r.unsat_term_vacuous = ExtProb::one() < r.unsat_term;
  r.vacuous = ExtProb::one() < r.p_err_bound;
  return r;
}

DecayMilestones check_decay_milestones(const ProbTrace& trace, double eps) {
  int n = trace.params.var_count;
  if (n < 7) throw HypothesisError("decay milestones: requires var_count >= 7");
  if (static_cast<int>(trace.d.size()) <= n + 6)
    throw Error("decay milestones: trace must reach var_count + 6");
  ExtProb e = ExtProb::from_double(eps);
  DecayMilestones m;
  auto point = [&](int k, std::string label, ExtProb threshold, ExtProb value) {
    m.points.push_back({k, std::move(label), threshold, value, value < threshold});
  };
  point(n + 2, "2/3", ExtProb::from_double(2.0 / 3.0), trace.d[n + 2]);
  point(n + 3, "1/2-4eps", ExtProb::pow2(-1) - ExtProb::from_double(4 * eps), trace.d[n + 3]);
  point(n + 4, "1/4-3eps", ExtProb::pow2(-2) - ExtProb::from_double(3 * eps), trace.d[n + 4]);
  point(n + 5, "1/16-eps", ExtProb::pow2(-4) - e, trace.d[n + 5]);
  point(n + 6, "1/256", ExtProb::pow2(-8), trace.d[n + 6]);
  point(n + 6, "+eps<1/128", ExtProb::pow2(-7), trace.d[n + 6] + e);
  m.all_hold = std::all_of(m.points.begin(), m.points.end(),
                           [](const DecayMilestones::Point& p) { return p.holds; });
  return m;
}

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num = num;
  r.den = den;
  return r;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

CloningPrecision gisin_massar(std::int64_t in_count, std::int64_t out_count) {
  if (in_count < 1 || out_count <= in_count)
    throw HypothesisError("gisin_massar: requires 1 <= in_count < out_count");
  if (out_count > (std::int64_t(1) << 30))
    throw CapacityError("gisin_massar: out_count too large for exact arithmetic");
  CloningPrecision c;
  c.in_count = in_count;
  c.out_count = out_count;
  c.fidelity = Rational::of(out_count * (in_count + 1) + in_count, out_count * (in_count + 2));
  c.precision = Rational::of(out_count - in_count, out_count * (in_count + 2));
  return c;
}

}  // namespace lbsim
