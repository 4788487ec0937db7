#include <benchmark/benchmark.h>

#include <lbsim/approx.hpp>
#include <lbsim/cnf.hpp>
#include <lbsim/circuit.hpp>
#include <lbsim/exact.hpp>
#include <lbsim/generate.hpp>
#include <lbsim/nogo.hpp>
#include <lbsim/rng.hpp>
#include <lbsim/sampler.hpp>

namespace {

lbsim::CnfFormula make_formula(int n) {
  lbsim::CounterRng rng(7, 0);
  return lbsim::random_cnf(rng, n, 4 * n, 3);
}

void bm_parse_dimacs(benchmark::State& state) {
  std::string text = lbsim::to_dimacs(make_formula(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto f = lbsim::parse_dimacs(text);
    benchmark::DoNotOptimize(f);
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(bm_parse_dimacs)->Arg(16)->Arg(64);

void bm_count_models(benchmark::State& state) {
  auto f = make_formula(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lbsim::count_models(f));
}
BENCHMARK(bm_count_models)->Arg(12)->Arg(16)->Arg(20);

void bm_boost_exact(benchmark::State& state) {
  auto d0 = lbsim::initial_d0(1, 20);
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lbsim::boost_exact(d0, level, 20));
}
BENCHMARK(bm_boost_exact)->Arg(32)->Arg(1024);

void bm_boost_noisy(benchmark::State& state) {
  auto d0 = lbsim::initial_d0(1, 20);
  auto model = lbsim::NoiseModel::uniform(1e-9, 11);
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lbsim::boost_approx(d0, level, model, 20));
}
BENCHMARK(bm_boost_noisy)->Arg(32)->Arg(1024);

void bm_decompose_gate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lbsim::decompose_gate(m, 2));
}
BENCHMARK(bm_decompose_gate)->Arg(64)->Arg(4096);

void bm_build_circuit(benchmark::State& state) {
  auto f = make_formula(static_cast<int>(state.range(0)));
  lbsim::BoostParams p;
  p.var_count = f.var_count();
  p.level = p.var_count + 6;
  for (auto _ : state) benchmark::DoNotOptimize(lbsim::BoostCircuit::build(f, p));
}
BENCHMARK(bm_build_circuit)->Arg(16)->Arg(64);

void bm_sample_boosted(benchmark::State& state) {
  auto f = make_formula(10);
  lbsim::SamplerConfig cfg;
  cfg.seed = 3;
  cfg.trials = 1000;
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(lbsim::sample_boosted(f, level, lbsim::NoiseModel::exact_clones(), cfg));
}
BENCHMARK(bm_sample_boosted)->Arg(4)->Arg(10);

void bm_nogo_instance(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    lbsim::CounterRng rng(13, stream++);
    auto logic = lbsim::nogo::LogicFunction::random(h, rng);
    auto inst = lbsim::nogo::make_mfp_instance(h, logic, rng);
    benchmark::DoNotOptimize(inst);
  }
}
BENCHMARK(bm_nogo_instance)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
