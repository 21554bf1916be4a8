// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "pi2/algebra.hpp"
#include "pi2/decide.hpp"
#include "pi2/semantics.hpp"
#include "pi2/symbolic.hpp"

namespace {

using namespace pi2;

void BM_BruteForceDensity(benchmark::State& state) {
  const auto chain = make_chain(static_cast<int>(state.range(0)));
  const auto rule = make_density();
  for (auto _ : state) benchmark::DoNotOptimize(rule_holds(chain, rule).holds);
}
BENCHMARK(BM_BruteForceDensity)->DenseRange(3, 9, 2);

void BM_BruteForceRho(benchmark::State& state) {
  const auto chain = make_chain(static_cast<int>(state.range(0)));
  const auto rule = make_rho(3);
  for (auto _ : state) benchmark::DoNotOptimize(rule_holds(chain, rule).holds);
}
BENCHMARK(BM_BruteForceRho)->DenseRange(5, 11, 2);

void BM_SymbolicDensity(benchmark::State& state) {
  const auto rule = make_density();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rule_holds_on_chain_symbolic(rule, n));
}
BENCHMARK(BM_SymbolicDensity)->Arg(3)->Arg(9)->Arg(100)->Arg(10000);

void BM_Spectrum(benchmark::State& state) {
  const auto rule = make_rho(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chain_spectrum(rule).tail);
}
BENCHMARK(BM_Spectrum)->DenseRange(1, 3);

void BM_DecideDensity(benchmark::State& state) {
  const auto rule = make_density();
  for (auto _ : state) benchmark::DoNotOptimize(decide_lc(rule).admissible);
}
BENCHMARK(BM_DecideDensity);

void BM_LambdaIdentity(benchmark::State& state) {
  const auto chain = make_chain(8);
  const auto lambda = make_lambda(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(holds_identity(chain, lambda));
}
BENCHMARK(BM_LambdaIdentity)->DenseRange(2, 6);

void BM_ChainBoundProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<FiniteGodelAlgebra> f{make_chain(n), make_chain(n)};
  const auto alg = make_product(f);
  for (auto _ : state) benchmark::DoNotOptimize(chain_bound(alg));
}
BENCHMARK(BM_ChainBoundProduct)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
