#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lbsim/cnf.hpp"
#include "lbsim/noise.hpp"

namespace lbsim {

enum class GateKind { source, not_gate, or_gate, and_gate, clone };

const char* gate_kind_name(GateKind k);

struct Gate {
  GateKind kind;
  std::vector<std::int32_t> inputs;
  // Count of OR/AND gate stages on the longest path up to and including this
  // node.  Sources, NOTs and clones add no stage: the time model charges
  // NOT to state preparation and clones separately.
  int layer = 0;
};

/// Parameters of one boosted run: formula width n, boost level N (number of
/// clone+merge stages), gate fan-in K, and the cloning noise model.
struct BoostParams {
  int var_count = 0;
  int level = 0;
  int fan_in = 2;
  NoiseModel noise{};
};

/// Wire-level result of reducing M inputs with K-input gates of one kind:
/// exactly ceil((M-1)/(K-1)) gates arranged in ceil(log_K M) layers.
struct GateTree {
  std::vector<Gate> nodes;
  std::vector<std::int32_t> leaves;
  std::int32_t output = 0;
  int gate_count = 0;
  int depth = 0;
};

/// Builds the reduction tree for `input_count` >= 1 leaves; fan_in >= 2.
GateTree decompose_gate(int input_count, int fan_in, GateKind kind = GateKind::or_gate);

/// Evaluates a decomposed tree; leaf i = bit i of leaf_bits (input_count <= 64).
bool evaluate_tree(const GateTree& t, std::uint64_t leaf_bits);

/// Per-quantity coefficients of the symbolic run time
/// t_q * prep + t_K * gate_layers + t_C * clones.
struct TimeModel {
  std::int64_t prep = 0;        // coefficient of t_q
  std::int64_t gate_layers = 0; // coefficient of t_K
  std::int64_t clones = 0;      // coefficient of t_C
};

struct ResourceReport {
  std::int64_t sources = 0;
  std::int64_t not_gates = 0;
  std::int64_t or_gates = 0;
  std::int64_t and_gates = 0;
  std::int64_t clones = 0;
  int depth = 0;          // OR/AND layers, formula stage plus boost stages
  int formula_depth = 0;  // OR/AND layers up to the formula output
  // Exact time uses the constructed formula depth; the coarse variant charges
  // every clause ceil(log_K n) layers plus ceil(log_K m) for the conjunction,
  // evaluated clause-sequentially.
  TimeModel exact_time;
  TimeModel coarse_time;
};

/// Boosted circuit over a formula: per-clause OR trees over literal wires
/// (one NOT per negated occurrence), an AND tree across clauses, then `level`
/// clone+OR stages.  Nodes are in topological order.
class BoostCircuit {
 public:
  static BoostCircuit build(const CnfFormula& f, const BoostParams& p);

  const std::vector<Gate>& nodes() const { return nodes_; }
  const BoostParams& params() const { return params_; }
  int clause_count() const { return clause_count_; }
  std::int32_t output() const { return output_; }
  std::int32_t formula_output() const { return formula_output_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::int64_t count(GateKind k) const;

  /// Value at the final output; var i = bit i (var_count <= 64).  With ideal
  /// clones every boost stage ORs two copies of the same value, so this
  /// equals the formula value.
  bool evaluate_bits(std::uint64_t assignment_bits) const;

  /// Value at the formula output node.
  bool evaluate_formula_bits(std::uint64_t assignment_bits) const;

 private:
  std::vector<Gate> nodes_;
  BoostParams params_;
  int clause_count_ = 0;
  std::int32_t output_ = 0;
  std::int32_t formula_output_ = 0;
  std::vector<std::string> warnings_;
};

ResourceReport report_resources(const BoostCircuit& c);

/// Numeric total of the symbolic time for concrete unit costs.
std::int64_t time_total(const TimeModel& t, std::int64_t t_q, std::int64_t t_k, std::int64_t t_c);

}  // namespace lbsim
