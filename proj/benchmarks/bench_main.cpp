// Copyright 2026 The srent Authors
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

#include "srent/clifford.hpp"
#include "srent/pauli.hpp"
#include "srent/power.hpp"
#include "srent/protocol.hpp"

namespace {

using namespace srent;

// Full Pauli spectrum through the Walsh-Hadamard kernel.
void BM_Spectrum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto psi = states::haar_state(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(pauli::expectation_spectrum(psi));
}
BENCHMARK(BM_Spectrum)->DenseRange(2, 10, 2);

// Same spectrum one Pauli at a time.
void BM_SpectrumPerPauli(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto psi = states::haar_state(n, 1);
    for (auto _ : state) {
        double sum = 0.0;
        for (const auto& p : pauli::enumerate(n)) sum += pauli::expectation(p, psi);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_SpectrumPerPauli)->DenseRange(2, 8, 2);

void BM_QuadSumFast(benchmark::State& state) {
    const auto p = protocol::outcome_distribution(states::haar_state(static_cast<int>(state.range(0)), 2),
                                                  CliffordTableau::identity(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(protocol::weighted_quad_sum(p));
}
BENCHMARK(BM_QuadSumFast)->DenseRange(1, 5);

void BM_QuadSumNaive(benchmark::State& state) {
    const auto p = protocol::outcome_distribution(states::haar_state(static_cast<int>(state.range(0)), 2),
                                                  CliffordTableau::identity(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(protocol::weighted_quad_sum_naive(p));
}
BENCHMARK(BM_QuadSumNaive)->DenseRange(1, 4);

void BM_PowerTrace(benchmark::State& state) {
    const auto u = states::haar_unitary(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(power::power_trace(u).m_lin);
}
BENCHMARK(BM_PowerTrace)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_RandomClifford(benchmark::State& state) {
    Rng rng(4);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(clifford::random_clifford(n, rng));
}
BENCHMARK(BM_RandomClifford)->RangeMultiplier(2)->Range(1, 16);

}  // namespace

BENCHMARK_MAIN();
