// Copyright 2026 The ptsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "ptsim/sweep.hpp"
#include "ptsim/tomography.hpp"

namespace {

using ptsim::Exec;

const ptsim::PTParams kParams{2.0, 1.0, 1.0, M_PI / 8, 1.0};

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_Sweep(benchmark::State& state) {
    const auto times = ptsim::uniform_grid(0.0, 1.5521, state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(ptsim::sweep(kParams, times, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_Sweep)->ArgNames({"parallel", "points"})->ArgsProduct({{0, 1}, {200, 20000}});

void BM_CheckDilation(benchmark::State& state) {
    const auto times = ptsim::uniform_grid(0.0, 1.5521, state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(ptsim::check_dilation(kParams, times, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_CheckDilation)->ArgNames({"parallel", "points"})->ArgsProduct({{0, 1}, {200, 20000}});

void BM_MonteCarlo(benchmark::State& state) {
    const ptsim::Density2 rho = ptsim::rho_theory(kParams, 0.7876);
    const ptsim::CountData counts = ptsim::sample_counts(rho, 10000, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(ptsim::monte_carlo(counts, state.range(1), 7, rho, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_MonteCarlo)->ArgNames({"parallel", "resamples"})->ArgsProduct({{0, 1}, {500, 20000}});

void BM_SimulateTomography(benchmark::State& state) {
    const std::vector<double> times{0.0, 0.7876, 0.9894, 1.5521};
    for (auto _ : state)
        benchmark::DoNotOptimize(ptsim::simulate_tomography(kParams, times, 10000, 500, 42, exec_of(state)));
}
BENCHMARK(BM_SimulateTomography)->ArgNames({"parallel"})->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
