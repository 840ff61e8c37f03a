// Copyright 2026 The entcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "entcap/hamsim.hpp"
#include "entcap/oracle.hpp"
#include "entcap/protocol.hpp"

using namespace entcap;

namespace {

void BM_CanonicalForm(benchmark::State &state) {
    TwoQubitHamiltonian h(random_hermitian(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(h));
    }
}
BENCHMARK(BM_CanonicalForm);

void BM_AnalyzeCapability(benchmark::State &state) {
    TwoQubitHamiltonian h(random_hermitian(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze_capability(h));
    }
}
BENCHMARK(BM_AnalyzeCapability);

void BM_BruteForceHMax(benchmark::State &state) {
    TwoQubitHamiltonian h(random_hermitian(3));
    SearchConfig cfg;
    cfg.restarts = 8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_h_max(h, cfg).value);
    }
}
BENCHMARK(BM_BruteForceHMax)->Unit(benchmark::kMillisecond);

void BM_OptimalProtocol(benchmark::State &state) {
    TwoQubitHamiltonian h(random_hermitian(4));
    CanonicalForm cf = canonical_form(h);
    ProtocolConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 1.0 / (cf.mu(0) + cf.mu(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_optimal_protocol(h, cfg).total_steps);
    }
}
BENCHMARK(BM_OptimalProtocol)->Unit(benchmark::kMillisecond);

void BM_BuildAndExecuteSchedule(benchmark::State &state) {
    TwoQubitHamiltonian source(random_hermitian(5));
    TwoQubitHamiltonian target(random_hermitian(6));
    CanonicalForm cf = canonical_form(source);
    for (auto _ : state) {
        SimulationSchedule s = build_schedule(cf, target, 0.5, 1e-3);
        benchmark::DoNotOptimize(execute_schedule(s, source));
    }
}
BENCHMARK(BM_BuildAndExecuteSchedule)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
