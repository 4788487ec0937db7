#include "lbsim/report.hpp"

#include <sstream>

namespace lbsim::report {

json to_json(const ExtProb& p) {
  return json{{"mantissa", p.mantissa()},
              {"exp2", p.exponent()},
              {"decimal", p.decimal_string(17)},
              {"log10", p.is_zero() ? json() : json(p.log10())}};
}

json to_json(const NoiseModel& m) {
  json j{{"kind", m.name()}, {"eps", m.eps}};
  if (m.kind == NoiseModel::Kind::uniform_random) j["seed"] = m.seed;
  return j;
}

json to_json(const ProbTrace& t) {
  json d = json::array();
  for (const ExtProb& p : t.d) d.push_back(to_json(p));
  return json{{"var_count", t.params.var_count},
              {"level", t.params.level},
              {"fan_in", t.params.fan_in},
              {"noise", to_json(t.params.noise)},
              {"d", std::move(d)},
              {"eps_used", t.eps_used},
              {"d_final", to_json(t.final_d())}};
}

json to_json(const TimeModel& t) {
  return json{{"prep", t.prep}, {"gate_layers", t.gate_layers}, {"clones", t.clones}};
}

json to_json(const ResourceReport& r) {
  return json{{"sources", r.sources},
              {"not_gates", r.not_gates},
              {"or_gates", r.or_gates},
              {"and_gates", r.and_gates},
              {"clones", r.clones},
              {"depth", r.depth},
              {"formula_depth", r.formula_depth},
              {"exact_time", to_json(r.exact_time)},
              {"coarse_time", to_json(r.coarse_time)}};
}

json to_json(const Decision& d) {
  json j{{"satisfiable", d.satisfiable},
         {"models", d.models},
         {"trace", to_json(d.trace)},
         {"p_one_final", 1.0 - d.trace.final_d().to_double()}};
  j["error_bound"] = d.error_bound ? to_json(*d.error_bound) : json();
  return j;
}

json to_json(const AlbBoundReport& r) {
  return json{{"var_count", r.var_count},
              {"level", r.level},
              {"eps", r.eps},
              {"sat_term", to_json(r.sat_term)},
              {"unsat_term", to_json(r.unsat_term)},
              {"p_err_bound", to_json(r.p_err_bound)},
              {"sat_term_vacuous", r.sat_term_vacuous},
              {"unsat_term_vacuous", r.unsat_term_vacuous},
              {"vacuous", r.vacuous}};
}

json to_json(const DecayMilestones& m) {
  json pts = json::array();
  for (const auto& p : m.points) {
    pts.push_back(json{{"level", p.k},
                       {"label", p.label},
                       {"threshold", to_json(p.threshold)},
                       {"value", to_json(p.value)},
                       {"holds", p.holds}});
  }
  return json{{"points", std::move(pts)}, {"all_hold", m.all_hold}};
}

json to_json(const CloningPrecision& p) {
  auto frac = [](const Rational& r) {
    return json{{"num", r.num}, {"den", r.den}, {"value", r.value()}};
  };
  return json{{"in_count", p.in_count},
              {"out_count", p.out_count},
              {"fidelity", frac(p.fidelity)},
              {"precision", frac(p.precision)}};
}

json to_json(const EmpiricalResult& e) {
  return json{{"ones", e.ones}, {"trials", e.trials}, {"freq", e.freq}, {"ci95", e.ci95}};
}

json to_json(const SampleReport& r) {
  json j{{"empirical", to_json(r.emp)},
         {"predicted", r.predicted},
         {"sigma", r.sigma},
         {"z", r.z},
         {"z_defined", r.z_defined},
         {"trace", to_json(r.trace)}};
  if (!r.bits.empty()) j["bits"] = r.bits;
  return j;
}

json to_json(const CostReport& c) {
  return json{{"draws_per_trial", c.draws_per_trial},
              {"literals_per_draw", c.literals_per_draw},
              {"literal_evals_per_trial", c.literal_evals_per_trial}};
}

json to_json(const nogo::MonotoneReport& r) {
  json j{{"h_min", r.h_min},
         {"h_max", r.h_max},
         {"mfp_instances", r.mfp_instances},
         {"mfp_evaluations", r.mfp_evaluations},
         {"violations", r.violations},
         {"min_slack", r.min_slack},
         {"max_cross_term", r.max_cross_term},
         {"max_unitary_defect", r.max_unitary_defect},
         {"max_mfp_defect", r.max_mfp_defect},
         {"control_instances", r.control_instances},
         {"control_decreases", r.control_decreases},
         {"control_min_slack", r.control_min_slack},
         {"monotone", r.violations == 0}};
  if (r.example) {
    const auto& ex = *r.example;
    j["example"] = json{{"from_control", ex.from_control},
                        {"hidden_bits", ex.instance.hidden_bits},
                        {"input", json{{"a0_re", ex.input.a0.real()},
                                       {"a0_im", ex.input.a0.imag()},
                                       {"a1_re", ex.input.a1.real()},
                                       {"a1_im", ex.input.a1.imag()}}},
                        {"d_in", ex.result.d_in},
                        {"d_out", ex.result.d_out},
                        {"cross_term", ex.result.cross_term}};
  }
  return j;
}

json to_json(const sweep::ExactSweepReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j{{"instance", row.instance},
           {"var_count", row.var_count},
           {"models", row.models},
           {"level", row.level},
           {"d_final", to_json(row.d_final)},
           {"applicable", row.applicable},
           {"holds", row.holds}};
    j["bound"] = row.bound ? to_json(*row.bound) : json();
    rows.push_back(std::move(j));
  }
  return json{{"rows", std::move(rows)}, {"all_hold", r.all_hold}};
}

json to_json(const sweep::SatSideReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"var_count", row.var_count},
                        {"level", row.level},
                        {"d", to_json(row.d)},
                        {"bound", to_json(row.bound)},
                        {"vacuous", row.vacuous},
                        {"holds", row.holds}});
  }
  json ms = json::array();
  for (const auto& m : r.milestones) ms.push_back(to_json(m));
  return json{{"rows", std::move(rows)}, {"milestones", std::move(ms)}, {"all_hold", r.all_hold}};
}

json to_json(const sweep::UnsatSideReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"level", row.level},
                        {"d", to_json(row.d)},
                        {"floor", to_json(row.floor)},
                        {"holds", row.holds}});
  }
  return json{{"var_count", r.var_count},
              {"rows", std::move(rows)},
              {"first_vacuous_level", r.first_vacuous_level},
              {"all_hold", r.all_hold}};
}

json to_json(const sweep::MaxBoundGrid& g) {
  json rows = json::array();
  for (const auto& row : g.rows) {
    json j{{"var_count", row.var_count},
           {"level", row.level},
           {"eps", row.eps},
           {"eps_label", row.eps_label},
           {"hypotheses_ok", row.hypotheses_ok}};
    j["report"] = row.report ? to_json(*row.report) : json();
    rows.push_back(std::move(j));
  }
  return json{{"rows", std::move(rows)}};
}

json circuit_json(const BoostCircuit& c) {
  json nodes = json::array();
  for (const Gate& g : c.nodes()) {
    nodes.push_back(json{{"kind", gate_kind_name(g.kind)},
                         {"inputs", g.inputs},
                         {"layer", g.layer}});
  }
  return json{{"var_count", c.params().var_count},
              {"level", c.params().level},
              {"fan_in", c.params().fan_in},
              {"clause_count", c.clause_count()},
              {"output", c.output()},
              {"formula_output", c.formula_output()},
              {"nodes", std::move(nodes)},
              {"warnings", c.warnings()}};
}

std::string trace_csv(const ProbTrace& t) {
  std::ostringstream out;
  out << "level,mantissa,exp2,log10,eps\n";
  out.precision(17);
  for (std::size_t k = 0; k < t.d.size(); ++k) {
    const ExtProb& p = t.d[k];
    out << k << ',' << p.mantissa() << ',' << p.exponent() << ',';
    if (p.is_zero())
      out << "-inf";
    else
      out << p.log10();
    out << ',' << (k < t.eps_used.size() ? t.eps_used[k] : 0.0) << '\n';
  }
  return out.str();
}

std::string per_trial_csv(const SampleReport& r) {
  std::ostringstream out;
  out << "trial,outcome\n";
  for (std::size_t i = 0; i < r.bits.size(); ++i)
    out << i << ',' << static_cast<int>(r.bits[i]) << '\n';
  return out.str();
}

}  // namespace lbsim::report
