#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lbsim/approx.hpp"
#include "lbsim/circuit.hpp"
#include "lbsim/exact.hpp"
#include "lbsim/nogo.hpp"
#include "lbsim/sampler.hpp"
#include "lbsim/sweep.hpp"

namespace lbsim::report {

using nlohmann::json;

json to_json(const ExtProb& p);
json to_json(const NoiseModel& m);
json to_json(const ProbTrace& t);
json to_json(const TimeModel& t);
json to_json(const ResourceReport& r);
json to_json(const Decision& d);
json to_json(const AlbBoundReport& r);
json to_json(const DecayMilestones& m);
json to_json(const CloningPrecision& p);
json to_json(const EmpiricalResult& e);
json to_json(const SampleReport& r);
json to_json(const CostReport& c);
json to_json(const nogo::MonotoneReport& r);
json to_json(const sweep::ExactSweepReport& r);
json to_json(const sweep::SatSideReport& r);
json to_json(const sweep::UnsatSideReport& r);
json to_json(const sweep::MaxBoundGrid& g);

/// Gate-level dump: nodes, counts, outputs, warnings.
json circuit_json(const BoostCircuit& c);

/// Columns: level,mantissa,exp2,log10,eps
std::string trace_csv(const ProbTrace& t);

/// Columns: trial,outcome (needs SamplerConfig::keep_bits)
std::string per_trial_csv(const SampleReport& r);

}  // namespace lbsim::report
