// Copyright 2026 The fqse Authors
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

#include <numbers>

#include "benchmark/benchmark.h"
#include "fqse/gateset.h"
#include "fqse/linalg.h"
#include "fqse/state.h"

namespace {

using namespace fqse;

fqse::StateVector uniform_state(std::size_t n) {
    auto s = basis_state(n, 0);
    for (std::size_t q = 0; q < n; q++) {
        s = apply_gate(s, hadamard(), {q});
    }
    return s;
}

void BM_apply_hadamard(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto s = uniform_state(n);
    const Gate h = hadamard();
    std::size_t q = 0;
    for (auto _ : state) {
        s = apply_gate(s, h, {q});
        q = (q + 1) % n;
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_apply_hadamard)->DenseRange(2, 12, 2);

void BM_apply_cnot(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto s = uniform_state(n);
    const Gate cx = cnot();
    for (auto _ : state) {
        s = apply_gate(s, cx, {0, n - 1});
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_apply_cnot)->DenseRange(2, 12, 2);

void BM_measure(benchmark::State &state) {
    auto s = uniform_state(static_cast<std::size_t>(state.range(0)));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_qubit(s, 0, seed++));
    }
}
BENCHMARK(BM_measure)->Arg(4)->Arg(12);

void BM_kron(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto a = phase_shift(std::numbers::pi / 4).matrix;
    auto b = ComplexMatrix::identity(std::size_t{1} << n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kron(a, b));
    }
}
BENCHMARK(BM_kron)->Arg(2)->Arg(4)->Arg(6);

void BM_mapping_to_matrix(benchmark::State &state) {
    const auto m = *hadamard().mapping;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mapping_to_matrix(m));
    }
}
BENCHMARK(BM_mapping_to_matrix);

}  // namespace
