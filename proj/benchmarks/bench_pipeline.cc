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

#include <string>

#include "benchmark/benchmark.h"
#include "fqse/checker.h"
#include "fqse/circuit.h"
#include "fqse/speclang.h"

namespace {

using namespace fqse;

const char *kSource =
    "oracle f = not\n"
    "qubit x = H|0>\n"
    "qubit y = H|1>\n"
    "N[f] x y\n"
    "H x\n"
    "measure x\n";

void BM_deutsch(benchmark::State &state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(deutsch(OracleFn::kIdentity, seed++));
    }
}
BENCHMARK(BM_deutsch);

void BM_parse(benchmark::State &state) {
    std::string src = kSource;
    for (int k = 1; k < state.range(0); k++) {
        src += "H x\nR(pi/4) y\nN[f] y x\n";
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse(src));
    }
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(src.size()));
}
BENCHMARK(BM_parse)->Arg(1)->Arg(100);

void BM_check_program(benchmark::State &state) {
    auto p = parse(kSource);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_program(p));
    }
}
BENCHMARK(BM_check_program);

void BM_run_shots(benchmark::State &state) {
    auto compiled = compile(parse(kSource));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_shots(compiled.circuit, compiled.oracles, 1000, 42));
    }
}
BENCHMARK(BM_run_shots);

}  // namespace
