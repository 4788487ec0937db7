#include "lbsim/circuit.hpp"

#include <algorithm>

namespace lbsim {

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::source: return "source";
    case GateKind::not_gate: return "not";
    case GateKind::or_gate: return "or";
    case GateKind::and_gate: return "and";
    case GateKind::clone: return "clone";
  }
  return "?";
}

namespace {

// Smallest d with base^d >= m.
int ceil_log(int base, std::int64_t m) {
  int d = 0;
  std::int64_t p = 1;
  while (p < m) {
    p *= base;
    ++d;
  }
  return d;
}

// Reduces wires to one output with K-input gates, left to right.  Each level
// brings the wire count down to fan_in^(levels remaining - 1): full gates
// first, at most one narrower gate, the rightmost wires pass through.  This
// keeps every gate except one saturated, so the total is exactly
// ceil((M-1)/(K-1)) gates in ceil(log_K M) layers.
template <typename AddGate>
std::int32_t reduce_wires(std::vector<std::int32_t> wires, int fan_in, AddGate&& add) {
  if (wires.size() == 1) return wires[0];
  std::int64_t target = 1;
  for (int i = 1, d = ceil_log(fan_in, static_cast<std::int64_t>(wires.size())); i < d; ++i)
    target *= fan_in;
  while (wires.size() > 1) {
    std::int64_t reduce_by = static_cast<std::int64_t>(wires.size()) - target;
    std::int64_t full = reduce_by / (fan_in - 1);
    std::int64_t rem = reduce_by % (fan_in - 1);
    std::vector<std::int32_t> next;
    auto it = wires.begin();
    for (std::int64_t g = 0; g < full; ++g, it += fan_in)
      next.push_back(add(std::vector<std::int32_t>(it, it + fan_in)));
    if (rem) {
      next.push_back(add(std::vector<std::int32_t>(it, it + rem + 1)));
      it += rem + 1;
    }
    next.insert(next.end(), it, wires.end());
    wires = std::move(next);
    target /= fan_in;
  }
  return wires[0];
}

int input_layer(const std::vector<Gate>& nodes, const std::vector<std::int32_t>& in) {
  int layer = 0;
  for (std::int32_t i : in) layer = std::max(layer, nodes[i].layer);
  return layer;
}

std::int32_t add_node(std::vector<Gate>& nodes, GateKind kind, std::vector<std::int32_t> in) {
  int layer = input_layer(nodes, in);
  if (kind == GateKind::or_gate || kind == GateKind::and_gate) ++layer;
  nodes.push_back({kind, std::move(in), layer});
  return static_cast<std::int32_t>(nodes.size() - 1);
}

bool node_value(const std::vector<Gate>& nodes, std::size_t count, std::uint64_t source_bits,
                std::int32_t at) {
  std::vector<char> val(count);
  int source_index = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Gate& g = nodes[i];
    switch (g.kind) {
      case GateKind::source:
        val[i] = (source_bits >> source_index++) & 1;
        break;
      case GateKind::not_gate:
        val[i] = !val[g.inputs[0]];
        break;
      case GateKind::clone:
        val[i] = val[g.inputs[0]];
        break;
      case GateKind::or_gate: {
        char v = 0;
        for (std::int32_t in : g.inputs) v |= val[in];
        val[i] = v;
        break;
      }
      case GateKind::and_gate: {
        char v = 1;
        for (std::int32_t in : g.inputs) v &= val[in];
        val[i] = v;
        break;
      }
    }
  }
  return val[at];
}

}  // namespace

GateTree decompose_gate(int input_count, int fan_in, GateKind kind) {
  if (input_count < 1) throw Error("decompose_gate: need at least one input");
  if (fan_in < 2) throw Error("decompose_gate: fan-in must be >= 2");
  if (kind != GateKind::or_gate && kind != GateKind::and_gate)
    throw Error("decompose_gate: only OR and AND decompose");
  GateTree t;
  for (int i = 0; i < input_count; ++i) {
    t.leaves.push_back(add_node(t.nodes, GateKind::source, {}));
  }
  t.output = reduce_wires(t.leaves, fan_in,
                          [&](std::vector<std::int32_t> in) { return add_node(t.nodes, kind, std::move(in)); });
  t.gate_count = static_cast<int>(t.nodes.size()) - input_count;
  t.depth = t.nodes[t.output].layer;
  return t;
}

bool evaluate_tree(const GateTree& t, std::uint64_t leaf_bits) {
  return node_value(t.nodes, t.nodes.size(), leaf_bits, t.output);
}

BoostCircuit BoostCircuit::build(const CnfFormula& f, const BoostParams& p) {
  if (p.fan_in < 2) throw Error("circuit: fan-in must be >= 2");
  if (p.level < 0) throw Error("circuit: boost level must be >= 0");
  BoostCircuit c;
  c.params_ = p;
  c.params_.var_count = f.var_count();
  c.clause_count_ = f.clause_count();

  std::vector<std::int32_t> sources;
  for (int i = 0; i < f.var_count(); ++i) sources.push_back(add_node(c.nodes_, GateKind::source, {}));

  auto or_join = [&](std::vector<std::int32_t> in) {
    return add_node(c.nodes_, GateKind::or_gate, std::move(in));
  };
  std::vector<std::int32_t> clause_wires;
  for (const Clause& cl : f.clauses()) {
    std::vector<std::int32_t> lits;
    for (const Literal& l : cl.literals)
      lits.push_back(l.negated ? add_node(c.nodes_, GateKind::not_gate, {sources[l.var]})
                               : sources[l.var]);
    clause_wires.push_back(reduce_wires(std::move(lits), p.fan_in, or_join));
  }
  c.formula_output_ = reduce_wires(std::move(clause_wires), p.fan_in, [&](std::vector<std::int32_t> in) {
    return add_node(c.nodes_, GateKind::and_gate, std::move(in));
  });

  std::int32_t cur = c.formula_output_;
  for (int v = 0; v < p.level; ++v) {
    std::int32_t copy = add_node(c.nodes_, GateKind::clone, {cur});
    cur = add_node(c.nodes_, GateKind::or_gate, {cur, copy});
  }
  c.output_ = cur;

  if (p.level < f.var_count())
    c.warnings_.push_back("boost level " + std::to_string(p.level) + " is below the variable count " +
                          std::to_string(f.var_count()) +
                          "; the amplification guarantee assumes level >= var_count");
  return c;
}

std::int64_t BoostCircuit::count(GateKind k) const {
  return std::count_if(nodes_.begin(), nodes_.end(), [k](const Gate& g) { return g.kind == k; });
}

bool BoostCircuit::evaluate_bits(std::uint64_t assignment_bits) const {
  return node_value(nodes_, nodes_.size(), assignment_bits, output_);
}

bool BoostCircuit::evaluate_formula_bits(std::uint64_t assignment_bits) const {
  return node_value(nodes_, nodes_.size(), assignment_bits, formula_output_);
}

ResourceReport report_resources(const BoostCircuit& c) {
  ResourceReport r;
  r.sources = c.count(GateKind::source);
  r.not_gates = c.count(GateKind::not_gate);
  r.or_gates = c.count(GateKind::or_gate);
  r.and_gates = c.count(GateKind::and_gate);
  r.clones = c.count(GateKind::clone);
  r.depth = c.nodes()[c.output()].layer;
  r.formula_depth = c.nodes()[c.formula_output()].layer;

  const BoostParams& p = c.params();
  r.exact_time = {p.var_count, static_cast<std::int64_t>(r.formula_depth) + p.level,
                  static_cast<std::int64_t>(p.level)};
  std::int64_t m = c.clause_count();
  r.coarse_time = {p.var_count,
                   m * ceil_log(p.fan_in, p.var_count) + ceil_log(p.fan_in, m) + p.level,
                   static_cast<std::int64_t>(p.level)};
  return r;
}

std::int64_t time_total(const TimeModel& t, std::int64_t t_q, std::int64_t t_k, std::int64_t t_c) {
  return t.prep * t_q + t.gate_layers * t_k + t.clones * t_c;
}

}  // namespace lbsim
