#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "lbsim/errors.hpp"
#include "lbsim/rng.hpp"

namespace lbsim::nogo {

using cx = std::complex<double>;

/// Algebraic identities (unitarity, route agreement, cross terms) hold to
/// this tolerance; monotonicity is asserted with the slack below.
inline constexpr double kAlgebraTol = 1e-10;
inline constexpr double kMonotoneSlack = 1e-12;

/// Hidden registers up to 2^6 amplitudes keep every matrix at most 128x128.
inline constexpr int kMaxHiddenBits = 6;

struct QubitState {
  cx a0{1.0, 0.0};
  cx a1{0.0, 0.0};

  double p_zero() const { return std::norm(a0); }
  double norm2() const { return std::norm(a0) + std::norm(a1); }
  bool normalized(double tol = 1e-12) const { return std::abs(norm2() - 1.0) <= tol; }

  static QubitState random(CounterRng& rng);
};

/// Unit vector of 2^h hidden-register amplitudes.
using HiddenRegister = std::vector<cx>;
HiddenRegister random_hidden(int hidden_bits, CounterRng& rng);

/// Boolean readout over (data bit, hidden bits); amplitude index is
/// (data << hidden_bits) | hidden, so the data qubit is the top bit.
struct LogicFunction {
  int hidden_bits = 0;
  std::vector<bool> truth;  // size 2^(hidden_bits + 1)

  std::vector<int> false_set() const;
  std::vector<int> true_set() const;

  /// Readout = data bit, hidden register ignored.
  static LogicFunction data_bit(int hidden_bits);
  static LogicFunction random(int hidden_bits, CounterRng& rng, bool need_false = true,
                              bool need_true = false);
};

/// Dense complex matrix, row major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  int dim() const { return n_; }
  cx& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const cx& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  static CMatrix identity(int n);
  CMatrix adjoint() const;
  std::vector<cx> apply(const std::vector<cx>& v) const;
  std::vector<cx> column(int j) const;
  /// max |(M M^dagger - I)_{ij}|
  double unitary_defect() const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  int n_ = 0;
  std::vector<cx> a_;
};

/// Basis-change matrix X of dimension 2^(h+1): the transpose-pair block
/// diagonal of the orthonormal basis whose first column is conj(hidden).
/// X (a H (+) b H) = a e_0 + b e_{2^h}, and X is unitary by construction.
CMatrix build_basis_matrix(const HiddenRegister& hidden);

/// One candidate cloning step U = A X over data qubit + hidden register.
struct UnitaryBoostInstance {
  int hidden_bits = 0;
  HiddenRegister hidden;
  LogicFunction logic;
  CMatrix basis;   // X
  CMatrix cloner;  // A; its column 0 decides the fixed-point property
  CMatrix step;    // U = A X
  double mfp_defect = 0;     // |sum over false set of |A_{i,0}|^2  -  1|
  double unitary_defect = 0; // of U
};

/// Instance with the measurement-fixed-point constraint imposed: column 0 of
/// A is a random unit vector supported on the readout's false set, the rest
/// is a random unitary completion.
UnitaryBoostInstance make_mfp_instance(int hidden_bits, LogicFunction logic, CounterRng& rng);

/// Control instance: column 0 unconstrained, generically violating the
/// fixed-point condition.
UnitaryBoostInstance make_control_instance(int hidden_bits, LogicFunction logic, CounterRng& rng);

struct StepResult {
  double d_in = 0;       // |a_k|^2
  double d_out = 0;      // zero-probability of the readout after the step
  double cross_term = 0; // |sum over the false set of conj(A_{i,0}) A_{i,2^h}|
};

/// Step evaluation through columns 0 and 2^h of A, the reduced form.
StepResult apply_step(const UnitaryBoostInstance& inst, const QubitState& q);

/// Same quantity through the full U (qubit tensor hidden) product; an
/// independent route used to cross-check apply_step.
double apply_step_full(const UnitaryBoostInstance& inst, const QubitState& q);

struct ViolationExample {
  UnitaryBoostInstance instance;
  QubitState input;
  StepResult result;
  bool from_control = false;
};

struct MonotoneReport {
  int h_min = 0, h_max = 0;
  std::uint64_t mfp_instances = 0;
  std::uint64_t mfp_evaluations = 0;
  std::uint64_t violations = 0;  // d_out < d_in - kMonotoneSlack on mfp instances
  double min_slack = 0;          // min d_out - d_in over mfp evaluations
  double max_cross_term = 0;
  double max_unitary_defect = 0;
  double max_mfp_defect = 0;
  std::uint64_t control_instances = 0;
  std::uint64_t control_decreases = 0;  // control instances showing a strict decrease
  double control_min_slack = 0;
  std::optional<ViolationExample> example;  // first mfp violation, else first control decrease
};

/// Random-instance sweep: per h, `instances_per_h` constrained instances
/// evaluated on [1,0], [0,1] and random qubits, plus unconstrained controls.
MonotoneReport verify_monotone(int h_min, int h_max, int instances_per_h, int inputs_per_instance,
                               std::uint64_t seed, int control_instances_per_h);

}  // namespace lbsim::nogo
