#pragma once

#include <cstdint>
#include <string>

#include "lbsim/errors.hpp"

namespace lbsim {

/// Per-stage cloning error model.  A noisy clone of a bit whose law has
/// zero-probability p produces an independent bit with zero-probability
/// p + e_k for some |e_k| <= eps; the model picks e_k per stage.
struct NoiseModel {
  enum class Kind {
    exact,           // e_k = 0
    fixed_plus,      // e_k = +eps
    fixed_minus,     // e_k = -eps
    uniform_random,  // e_k ~ U[-eps, +eps], derived from `seed`
    adversarial,     // e_k = +eps or -eps, whichever pushes d_N toward `target`
  };
  enum class Target { maximize_d, minimize_d };

  Kind kind = Kind::exact;
  double eps = 0.0;
  std::uint64_t seed = 0;
  Target target = Target::maximize_d;

  static NoiseModel exact_clones() { return {}; }
  static NoiseModel fixed(double eps, bool plus) {
    NoiseModel m;
    m.kind = plus ? Kind::fixed_plus : Kind::fixed_minus;
    m.eps = check(eps);
    return m;
  }
  static NoiseModel uniform(double eps, std::uint64_t seed) {
    NoiseModel m;
    m.kind = Kind::uniform_random;
    m.eps = check(eps);
    m.seed = seed;
    return m;
  }
  static NoiseModel adversarial(double eps, Target t) {
    NoiseModel m;
    m.kind = Kind::adversarial;
    m.eps = check(eps);
    m.target = t;
    return m;
  }

  bool is_exact() const { return kind == Kind::exact || eps == 0.0; }
  std::string name() const;

 private:
  static double check(double eps) {
    if (!(eps >= 0.0) || eps > 1.0) throw Error("noise model: eps must be in [0, 1]");
    return eps;
  }
};

}  // namespace lbsim
