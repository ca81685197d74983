// Copyright 2026 The paritybit Authors
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

#include "paritybit/analysis.h"
#include "paritybit/parity.h"

namespace {

using paritybit::SignalPair;

void BM_ClosedFormInformation(benchmark::State &state) {
    SignalPair sig(0.05, 0.0);
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(paritybit::optimal_information(sig, n));
    }
}
BENCHMARK(BM_ClosedFormInformation)->RangeMultiplier(10)->Range(10, 100000);

void BM_BruteforceMatrices(benchmark::State &state) {
    SignalPair sig(0.3, 0.05);
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(paritybit::parity_matrices_bruteforce(sig, n));
    }
}
BENCHMARK(BM_BruteforceMatrices)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BruteforceInformation(benchmark::State &state) {
    SignalPair sig(0.3, 0.05);
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(paritybit::bruteforce_information(sig, n));
    }
}
BENCHMARK(BM_BruteforceInformation)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_SumOverStrings(benchmark::State &state) {
    SignalPair sig(0.3, 0.05);
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(paritybit::sum_over_strings_oracle(sig, n));
    }
}
BENCHMARK(BM_SumOverStrings)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
