// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include <multidet/analytic.hpp>
#include <multidet/calibrate.hpp>
#include <multidet/equivalence.hpp>
#include <multidet/experiment.hpp>
#include <multidet/oracle.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace multidet;

TwoParticleState random_state(const ModeBasis& basis, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CoeffVector b(basis.num_modes()), d(basis.num_modes());
  for (auto& c : b) c = {g(rng), g(rng)};
  for (auto& c : d) c = {g(rng), g(rng)};
  return TwoParticleState(Packet(b, Spin::Up), Packet(d, Spin::Up), Statistics::Boson);
}

void BM_AnalyticDouble(benchmark::State& st) {
  const ModeBasis basis = make_basis(static_cast<int>(st.range(0)), 1.0);
  const TwoParticleState s = random_state(basis, 1);
  double x = 0.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(p_double(s, basis, x, 0.1, Spin::Up, Spin::Up));
    x += 1e-3;
  }
}
BENCHMARK(BM_AnalyticDouble)->Arg(7)->Arg(41)->Arg(201);

// Same quantity through dense Fock-space matrices; sector built once.
void BM_OracleDouble(benchmark::State& st) {
  const ModeBasis basis = make_basis(static_cast<int>(st.range(0)), 1.0);
  const TwoParticleState s = random_state(basis, 1);
  const FockSector sector(basis, {Spin::Up}, Statistics::Boson);
  const FockVector v = embed_state(s, sector);
  double x = 0.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(oracle_double(v, sector, x, 0.1, Spin::Up, Spin::Up));
    x += 1e-3;
  }
}
BENCHMARK(BM_OracleDouble)->Arg(7)->Arg(21)->Arg(41);

void BM_EquivalenceSuite(benchmark::State& st) {
  EquivalenceOptions opts;
  opts.trials = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(run_equivalence_suite(opts));
}
BENCHMARK(BM_EquivalenceSuite)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ScanPattern(benchmark::State& st) {
  ExperimentConfig cfg;
  cfg.grid = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(scan_pattern(cfg));
}
BENCHMARK(BM_ScanPattern)->Arg(201)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_FitAlphas(benchmark::State& st) {
  ExperimentConfig cfg;
  const PatternTable pattern = sample_counts(scan_pattern(cfg), cfg.exposure, cfg.seed);
  for (auto _ : st) benchmark::DoNotOptimize(fit_alphas(pattern));
}
BENCHMARK(BM_FitAlphas)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
