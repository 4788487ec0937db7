#include "lbsim/nogo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace lbsim::nogo {
namespace {

double gaussian(CounterRng& rng) {
  double u1 = rng.next_unit_pos();
  double u2 = rng.next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cx gaussian_cx(CounterRng& rng) { return {gaussian(rng), gaussian(rng)}; }

double norm2_of(const std::vector<cx>& v) {
  double s = 0;
  for (const cx& z : v) s += std::norm(z);
  return s;
}

void normalize(std::vector<cx>& v) {
  double s = std::sqrt(norm2_of(v));
  if (s == 0.0) throw Error("cannot normalize a zero vector");
  for (cx& z : v) z /= s;
}

cx inner(const std::vector<cx>& a, const std::vector<cx>& b) {
  cx s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// Two-pass modified Gram-Schmidt of `v` against `cols`; returns the residual
/// norm before normalization so callers can detect dependence.
double orthogonalize(std::vector<cx>& v, const std::vector<std::vector<cx>>& cols) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& c : cols) {
      cx p = inner(c, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= p * c[i];
    }
  }
  double s = std::sqrt(norm2_of(v));
  if (s > 0) {
    for (cx& z : v) z /= s;
  }
  return s;
}

/// Extends `cols` (orthonormal) to a full basis of C^dim with random
/// directions, falling back to coordinate vectors if a draw degenerates.
void complete_basis(std::vector<std::vector<cx>>& cols, int dim, CounterRng& rng) {
  while (static_cast<int>(cols.size()) < dim) {
    std::vector<cx> v(dim);
    bool ok = false;
    for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
      for (cx& z : v) z = gaussian_cx(rng);
      ok = orthogonalize(v, cols) > 1e-8;
    }
    if (!ok) {
      for (int j = 0; j < dim && !ok; ++j) {
        std::fill(v.begin(), v.end(), cx{0, 0});
        v[j] = 1;
        ok = orthogonalize(v, cols) > 1e-8;
      }
    }
    if (!ok) throw Error("basis completion failed");
    cols.push_back(std::move(v));
  }
}

CMatrix from_columns(const std::vector<std::vector<cx>>& cols) {
  int n = static_cast<int>(cols.size());
  CMatrix m(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
  return m;
}

void require_hidden_bits(int hidden_bits) {
  if (hidden_bits < 1 || hidden_bits > kMaxHiddenBits)
    throw Error("hidden_bits must be in [1, " + std::to_string(kMaxHiddenBits) + "]");
}

UnitaryBoostInstance assemble(int hidden_bits, HiddenRegister hidden, LogicFunction logic,
                              std::vector<cx> col0, CounterRng& rng) {
  int dim = 2 << hidden_bits;
  std::vector<std::vector<cx>> cols;
  cols.push_back(std::move(col0));
  complete_basis(cols, dim, rng);

  UnitaryBoostInstance inst;
  inst.hidden_bits = hidden_bits;
  inst.hidden = std::move(hidden);
  inst.logic = std::move(logic);
  inst.basis = build_basis_matrix(inst.hidden);
  inst.cloner = from_columns(cols);
  inst.step = inst.cloner * inst.basis;

  double on_false = 0;
  for (int i : inst.logic.false_set()) on_false += std::norm(inst.cloner.at(i, 0));
  inst.mfp_defect = std::abs(on_false - 1.0);
  inst.unitary_defect = inst.step.unitary_defect();
  return inst;
}

}  // namespace

QubitState QubitState::random(CounterRng& rng) {
  QubitState q;
  q.a0 = gaussian_cx(rng);
  q.a1 = gaussian_cx(rng);
  double s = std::sqrt(q.norm2());
  if (s == 0.0) return random(rng);
  q.a0 /= s;
  q.a1 /= s;
  return q;
}

HiddenRegister random_hidden(int hidden_bits, CounterRng& rng) {
  require_hidden_bits(hidden_bits);
  HiddenRegister h(std::size_t{1} << hidden_bits);
  for (cx& z : h) z = gaussian_cx(rng);
  normalize(h);
  return h;
}

std::vector<int> LogicFunction::false_set() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(truth.size()); ++i)
    if (!truth[i]) out.push_back(i);
  return out;
}

std::vector<int> LogicFunction::true_set() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(truth.size()); ++i)
    if (truth[i]) out.push_back(i);
  return out;
}

LogicFunction LogicFunction::data_bit(int hidden_bits) {
  require_hidden_bits(hidden_bits);
  LogicFunction f;
  f.hidden_bits = hidden_bits;
  f.truth.resize(std::size_t{2} << hidden_bits);
  for (std::size_t i = 0; i < f.truth.size(); ++i) f.truth[i] = (i >> hidden_bits) & 1;
  return f;
}

LogicFunction LogicFunction::random(int hidden_bits, CounterRng& rng, bool need_false,
                                    bool need_true) {
  require_hidden_bits(hidden_bits);
  LogicFunction f;
  f.hidden_bits = hidden_bits;
  f.truth.resize(std::size_t{2} << hidden_bits);
  for (int attempt = 0; attempt < 64; ++attempt) {
    bool any_false = false, any_true = false;
    for (std::size_t i = 0; i < f.truth.size(); ++i) {
      f.truth[i] = rng.next_bit();
      (f.truth[i] ? any_true : any_false) = true;
    }
    if ((any_false || !need_false) && (any_true || !need_true)) return f;
  }
  throw Error("failed to draw a readout with the requested outputs");
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(j, i) = std::conj(at(i, j));
  return m;
}

std::vector<cx> CMatrix::apply(const std::vector<cx>& v) const {
  if (static_cast<int>(v.size()) != n_) throw Error("matrix/vector dimension mismatch");
  std::vector<cx> out(v.size());
  for (int i = 0; i < n_; ++i) {
    cx s = 0;
    for (int j = 0; j < n_; ++j) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

std::vector<cx> CMatrix::column(int j) const {
  std::vector<cx> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = at(i, j);
  return out;
}

double CMatrix::unitary_defect() const {
  double worst = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      cx s = 0;
      for (int k = 0; k < n_; ++k) s += at(i, k) * std::conj(at(j, k));
      if (i == j) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.n_ != b.n_) throw Error("matrix dimension mismatch");
  CMatrix out(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      cx aik = a.at(i, k);
      if (aik == cx{}) continue;
      for (int j = 0; j < a.n_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

CMatrix build_basis_matrix(const HiddenRegister& hidden) {
  int half = static_cast<int>(hidden.size());
  if (half < 2 || (half & (half - 1)) != 0) throw Error("hidden register size must be a power of two >= 2");
  if (std::abs(norm2_of(hidden) - 1.0) > 1e-9) throw Error("hidden register must be normalized");

  // Columns of R: conj(hidden) first, then coordinate vectors orthogonalized.
  std::vector<std::vector<cx>> cols;
  {
    std::vector<cx> c0(hidden.size());
    for (std::size_t i = 0; i < hidden.size(); ++i) c0[i] = std::conj(hidden[i]);
    normalize(c0);
    cols.push_back(std::move(c0));
  }
  for (int j = 0; j < half && static_cast<int>(cols.size()) < half; ++j) {
    std::vector<cx> v(hidden.size());
    v[j] = 1;
    if (orthogonalize(v, cols) > 1e-8) cols.push_back(std::move(v));
  }
  if (static_cast<int>(cols.size()) != half) throw Error("basis completion failed");

  // X = blockdiag(R^T, R^T) sends a H (+) b H to a e_0 + b e_half.
  CMatrix x(2 * half);
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < half; ++j) {
      cx rt = cols[i][j];  // (R^T)_{ij} = R_{ji}
      x.at(i, j) = rt;
      x.at(half + i, half + j) = rt;
    }
  return x;
}

UnitaryBoostInstance make_mfp_instance(int hidden_bits, LogicFunction logic, CounterRng& rng) {
  require_hidden_bits(hidden_bits);
  int dim = 2 << hidden_bits;
  if (static_cast<int>(logic.truth.size()) != dim) throw Error("readout size mismatch");
  std::vector<int> fs = logic.false_set();
  if (fs.empty())
    throw HypothesisError("readout is identically true; no zero-output support to pin column 0 to");

  std::vector<cx> col0(dim);
  for (int i : fs) col0[i] = gaussian_cx(rng);
  normalize(col0);

  HiddenRegister hidden = random_hidden(hidden_bits, rng);
  return assemble(hidden_bits, std::move(hidden), std::move(logic), std::move(col0), rng);
}

UnitaryBoostInstance make_control_instance(int hidden_bits, LogicFunction logic, CounterRng& rng) {
  require_hidden_bits(hidden_bits);
  int dim = 2 << hidden_bits;
  if (static_cast<int>(logic.truth.size()) != dim) throw Error("readout size mismatch");

  std::vector<cx> col0(dim);
  for (cx& z : col0) z = gaussian_cx(rng);
  normalize(col0);

  HiddenRegister hidden = random_hidden(hidden_bits, rng);
  return assemble(hidden_bits, std::move(hidden), std::move(logic), std::move(col0), rng);
}

StepResult apply_step(const UnitaryBoostInstance& inst, const QubitState& q) {
  int half = 1 << inst.hidden_bits;
  double s00 = 0, s11 = 0;
  cx y = 0;
  for (int i : inst.logic.false_set()) {
    cx c0 = inst.cloner.at(i, 0);
    cx c1 = inst.cloner.at(i, half);
    s00 += std::norm(c0);
    s11 += std::norm(c1);
    y += std::conj(c0) * c1;
  }
  StepResult r;
  r.d_in = q.p_zero();
  cx mixed = std::conj(q.a0) * q.a1 * y;
  r.d_out = std::norm(q.a0) * s00 + std::norm(q.a1) * s11 + 2.0 * mixed.real();
  r.cross_term = std::abs(y);
  return r;
}

double apply_step_full(const UnitaryBoostInstance& inst, const QubitState& q) {
  int half = 1 << inst.hidden_bits;
  std::vector<cx> v(static_cast<std::size_t>(2) * half);
  for (int i = 0; i < half; ++i) {
    v[i] = q.a0 * inst.hidden[i];
    v[half + i] = q.a1 * inst.hidden[i];
  }
  std::vector<cx> w = inst.step.apply(v);
  double out = 0;
  for (int i : inst.logic.false_set()) out += std::norm(w[i]);
  return out;
}

MonotoneReport verify_monotone(int h_min, int h_max, int instances_per_h, int inputs_per_instance,
                               std::uint64_t seed, int control_instances_per_h) {
  require_hidden_bits(h_min);
  require_hidden_bits(h_max);
  if (h_min > h_max) throw Error("empty hidden-bit range");
  if (instances_per_h < 1 || inputs_per_instance < 1) throw Error("instance and input counts must be >= 1");
  if (control_instances_per_h < 0) throw Error("control instance count must be >= 0");

  MonotoneReport rep;
  rep.h_min = h_min;
  rep.h_max = h_max;
  rep.min_slack = std::numeric_limits<double>::infinity();
  rep.control_min_slack = std::numeric_limits<double>::infinity();

  auto inputs_for = [&](CounterRng& rng) {
    std::vector<QubitState> in;
    in.push_back(QubitState{{1, 0}, {0, 0}});
    in.push_back(QubitState{{0, 0}, {1, 0}});
    while (static_cast<int>(in.size()) < inputs_per_instance + 2) in.push_back(QubitState::random(rng));
    return in;
  };

  auto check_routes = [](const UnitaryBoostInstance& inst, const QubitState& q, const StepResult& r) {
    double full = apply_step_full(inst, q);
    if (std::abs(full - r.d_out) > kAlgebraTol) throw Error("step evaluation routes disagree");
  };

  std::uint64_t stream = 0;
  for (int h = h_min; h <= h_max; ++h) {
    for (int t = 0; t < instances_per_h; ++t) {
      CounterRng rng(seed, (static_cast<std::uint64_t>(h) << 32) | stream++);
      LogicFunction logic =
          t == 0 ? LogicFunction::data_bit(h) : LogicFunction::random(h, rng, true, true);
      UnitaryBoostInstance inst = make_mfp_instance(h, std::move(logic), rng);
      rep.mfp_instances += 1;
      rep.max_unitary_defect = std::max(rep.max_unitary_defect, inst.unitary_defect);
      rep.max_mfp_defect = std::max(rep.max_mfp_defect, inst.mfp_defect);

      for (const QubitState& q : inputs_for(rng)) {
        StepResult r = apply_step(inst, q);
        check_routes(inst, q, r);
        rep.mfp_evaluations += 1;
        double slack = r.d_out - r.d_in;
        rep.min_slack = std::min(rep.min_slack, slack);
        rep.max_cross_term = std::max(rep.max_cross_term, r.cross_term);
        if (slack < -kMonotoneSlack) {
          rep.violations += 1;
          if (!rep.example) rep.example = ViolationExample{inst, q, r, false};
        }
      }
    }

    for (int t = 0; t < control_instances_per_h; ++t) {
      CounterRng rng(seed, (static_cast<std::uint64_t>(h) << 32) | stream++);
      LogicFunction logic = LogicFunction::random(h, rng, true, true);
      UnitaryBoostInstance inst = make_control_instance(h, std::move(logic), rng);
      rep.control_instances += 1;

      bool decreased = false;
      for (const QubitState& q : inputs_for(rng)) {
        StepResult r = apply_step(inst, q);
        check_routes(inst, q, r);
        double slack = r.d_out - r.d_in;
        rep.control_min_slack = std::min(rep.control_min_slack, slack);
        if (slack < -kMonotoneSlack) {
          decreased = true;
          if (!rep.example && rep.violations == 0) {
            // Keep one decreasing control around for inspection when the
            // constrained runs are clean.
            rep.example = ViolationExample{inst, q, r, true};
          }
        }
      }
      if (decreased) rep.control_decreases += 1;
    }
  }

  if (rep.mfp_evaluations == 0) rep.min_slack = 0;
  if (rep.control_instances == 0 || !std::isfinite(rep.control_min_slack)) rep.control_min_slack = 0;
  return rep;
}

}  // namespace lbsim::nogo
