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

#include "fqse/circuit.h"

#include <cmath>
#include <set>

namespace fqse {

int evaluate(OracleFn f, int x) {
    switch (f) {
        case OracleFn::kConst0:
            return 0;
        case OracleFn::kConst1:
            return 1;
        case OracleFn::kIdentity:
            return x;
        case OracleFn::kNegation:
            return 1 - x;
    }
    throw std::logic_error("unhandled OracleFn");
}

bool is_constant(OracleFn f) {
    return f == OracleFn::kConst0 || f == OracleFn::kConst1;
}

std::string_view oracle_keyword(OracleFn f) {
    switch (f) {
        case OracleFn::kConst0:
            return "const0";
        case OracleFn::kConst1:
            return "const1";
        case OracleFn::kIdentity:
            return "id";
        case OracleFn::kNegation:
            return "not";
    }
    throw std::logic_error("unhandled OracleFn");
}

std::optional<OracleFn> oracle_from_keyword(std::string_view keyword) {
    for (auto f : kAllOracles) {
        if (oracle_keyword(f) == keyword) {
            return f;
        }
    }
    return std::nullopt;
}

namespace {

constexpr std::array<InitialKet, 6> kAllKets = {
    InitialKet::kZero,  InitialKet::kOne,          InitialKet::kPlus,
    InitialKet::kMinus, InitialKet::kHadamardZero, InitialKet::kHadamardOne};

}  // namespace

std::string_view ket_spelling(InitialKet ket) {
    switch (ket) {
        case InitialKet::kZero:
            return "|0>";
        case InitialKet::kOne:
            return "|1>";
        case InitialKet::kPlus:
            return "|+>";
        case InitialKet::kMinus:
            return "|->";
        case InitialKet::kHadamardZero:
            return "H|0>";
        case InitialKet::kHadamardOne:
            return "H|1>";
    }
    throw std::logic_error("unhandled InitialKet");
}

std::optional<InitialKet> ket_from_spelling(std::string_view spelling) {
    for (auto k : kAllKets) {
        if (ket_spelling(k) == spelling) {
            return k;
        }
    }
    return std::nullopt;
}

StateVector initial_state(InitialKet ket) {
    switch (ket) {
        case InitialKet::kZero:
            return basis_state(1, 0);
        case InitialKet::kOne:
            return basis_state(1, 1);
        case InitialKet::kPlus:
        case InitialKet::kHadamardZero:
            return apply_gate(basis_state(1, 0), hadamard(), {0});
        case InitialKet::kMinus:
        case InitialKet::kHadamardOne:
            return apply_gate(basis_state(1, 1), hadamard(), {0});
    }
    throw std::logic_error("unhandled InitialKet");
}

CircuitError::CircuitError(const std::string &message, std::size_t instruction_index)
    : std::invalid_argument("instruction " + std::to_string(instruction_index) + ": " + message),
      instruction_index_(instruction_index) {
}

namespace {

// Resolves names to register positions while walking the circuit.
class Register {
   public:
    std::size_t index_of(const std::string &qubit, std::size_t at) const {
        auto it = positions_.find(qubit);
        if (it == positions_.end()) {
            throw CircuitError("undeclared qubit " + qubit, at);
        }
        return it->second;
    }

    void allocate(const std::string &qubit, std::size_t at) {
        if (positions_.contains(qubit)) {
            throw CircuitError("qubit " + qubit + " allocated twice", at);
        }
        if (positions_.size() == kMaxQubits) {
            throw CircuitError("register exceeds " + std::to_string(kMaxQubits) + " qubits", at);
        }
        positions_.emplace(qubit, positions_.size());
    }

   private:
    std::map<std::string, std::size_t, std::less<>> positions_;
};

OracleFn lookup_oracle(const OracleMap &oracles, const std::string &name, std::size_t at) {
    auto it = oracles.find(name);
    if (it == oracles.end()) {
        throw CircuitError("undeclared oracle " + name, at);
    }
    return it->second;
}

void require_distinct(const std::vector<std::size_t> &targets, std::size_t at) {
    std::set<std::size_t> seen(targets.begin(), targets.end());
    if (seen.size() != targets.size()) {
        throw CircuitError("repeated target qubit", at);
    }
}

Gate resolve_gate(const Apply &apply, std::size_t at) {
    try {
        return gate_by_name(apply.gate, apply.parameter);
    } catch (const std::invalid_argument &e) {
        throw CircuitError(e.what(), at);
    }
}

}  // namespace

void validate(const Circuit &circuit, const OracleMap &oracles) {
    Register reg;
    for (std::size_t at = 0; at < circuit.instructions.size(); at++) {
        const auto &inst = circuit.instructions[at];
        if (const auto *alloc = std::get_if<Alloc>(&inst)) {
            reg.allocate(alloc->qubit, at);
        } else if (const auto *apply = std::get_if<Apply>(&inst)) {
            Gate g = resolve_gate(*apply, at);
            if (apply->targets.size() != g.arity) {
                throw CircuitError("gate " + g.name + " expects " + std::to_string(g.arity) + " target(s)", at);
            }
            std::vector<std::size_t> targets;
            for (const auto &t : apply->targets) {
                targets.push_back(reg.index_of(t, at));
            }
            require_distinct(targets, at);
        } else if (const auto *oracle = std::get_if<ApplyOracle>(&inst)) {
            lookup_oracle(oracles, oracle->oracle, at);
            require_distinct({reg.index_of(oracle->control, at), reg.index_of(oracle->target, at)}, at);
        } else if (const auto *measure = std::get_if<Measure>(&inst)) {
            reg.index_of(measure->qubit, at);
        }
    }
}

std::string RunReport::outcome() const {
    std::string out;
    for (const auto &m : measured) {
        out += m.bit ? '1' : '0';
    }
    return out;
}

std::optional<StateVector> RunReport::unmeasured_state() const {
    if (!pre_measurement_states.empty()) {
        return pre_measurement_states.front();
    }
    return final_state;
}

RunReport run_circuit(
    const Circuit &circuit, const OracleMap &oracles, std::uint64_t seed, const StepObserver &observer) {
    validate(circuit, oracles);

    Register reg;
    Rng rng(seed);
    RunReport report;
    std::optional<StateVector> state;
    for (std::size_t at = 0; at < circuit.instructions.size(); at++) {
        const auto &inst = circuit.instructions[at];
        if (const auto *alloc = std::get_if<Alloc>(&inst)) {
            reg.allocate(alloc->qubit, at);
            auto fresh = initial_state(alloc->ket);
            state = state ? tensor_product(*state, fresh) : fresh;
        } else if (const auto *apply = std::get_if<Apply>(&inst)) {
            std::vector<std::size_t> targets;
            for (const auto &t : apply->targets) {
                targets.push_back(reg.index_of(t, at));
            }
            state = apply_gate(*state, resolve_gate(*apply, at), targets);
        } else if (const auto *oracle = std::get_if<ApplyOracle>(&inst)) {
            std::size_t targets[] = {reg.index_of(oracle->control, at), reg.index_of(oracle->target, at)};
            state = apply_gate(*state, oracle_gate(lookup_oracle(oracles, oracle->oracle, at)), targets);
        } else if (const auto *measure = std::get_if<Measure>(&inst)) {
            report.pre_measurement_states.push_back(*state);
            auto result = measure_qubit(*state, reg.index_of(measure->qubit, at), rng);
            report.measured.push_back({measure->qubit, result.bit, result.probability});
            state = std::move(result.post_state);
        }
        if (observer && state) {
            observer(at, *state);
        }
    }
    report.final_state = std::move(state);
    return report;
}

std::uint64_t shot_seed(std::uint64_t root, std::uint64_t shot_index) noexcept {
    return mix64(root ^ shot_index);
}

RunReport run_shots(const Circuit &circuit, const OracleMap &oracles, std::size_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    RunReport first;
    std::map<std::string, std::size_t> counts;
    for (std::size_t i = 0; i < shots; i++) {
        RunReport r = run_circuit(circuit, oracles, shot_seed(seed, i));
        counts[r.outcome()]++;
        if (i == 0) {
            first = std::move(r);
        }
    }
    first.shots = std::move(counts);
    return first;
}

ComplexMatrix oracle_unitary(OracleFn f) {
    std::vector<Complex> entries(16);
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            int col = 2 * x + y;
            int row = 2 * x + (evaluate(f, x) ^ y);
            entries[row * 4 + col] = 1.0;
        }
    }
    return ComplexMatrix(4, 4, std::move(entries));
}

Gate oracle_gate(OracleFn f) {
    return Gate{"N[" + std::string(oracle_keyword(f)) + "]", 2, oracle_unitary(f), std::nullopt, std::nullopt};
}

std::string_view verdict_name(Verdict v) {
    return v == Verdict::kConstant ? "CONSTANT" : "BALANCED";
}

Circuit deutsch_circuit(const std::string &oracle_name) {
    return Circuit{{
        Alloc{"x", InitialKet::kHadamardZero},
        Alloc{"y", InitialKet::kHadamardOne},
        ApplyOracle{oracle_name, "x", "y"},
        Apply{"H", std::nullopt, {"x"}},
        Measure{"x"},
    }};
}

Circuit deutsch_circuit_nested(const std::string &oracle_name) {
    return Circuit{{
        Alloc{"x", InitialKet::kZero},
        Apply{"H", std::nullopt, {"x"}},
        Alloc{"y", InitialKet::kOne},
        Apply{"H", std::nullopt, {"y"}},
        ApplyOracle{oracle_name, "x", "y"},
        Apply{"H", std::nullopt, {"x"}},
        Measure{"x"},
    }};
}

DeutschVerdict deutsch(OracleFn f, std::uint64_t seed) {
    RunReport report = run_circuit(deutsch_circuit("f"), {{"f", f}}, seed);
    const auto &m = report.measured.front();
    return DeutschVerdict{m.bit == 0 ? Verdict::kConstant : Verdict::kBalanced, m.bit, m.probability};
}

bool circuits_equivalent(const Circuit &a, const Circuit &b, const OracleMap &oracles, Tolerance tol) {
    auto sa = run_circuit(a, oracles, 0).unmeasured_state();
    auto sb = run_circuit(b, oracles, 0).unmeasured_state();
    if (!sa || !sb) {
        return !sa && !sb;
    }
    return approx_equal(
        ComplexMatrix::column(sa->amplitudes()), ComplexMatrix::column(sb->amplitudes()), tol);
}

bool deutsch_seq_equivalence_check() {
    for (auto f : kAllOracles) {
        OracleMap oracles{{"f", f}};
        if (!circuits_equivalent(deutsch_circuit_nested("f"), deutsch_circuit("f"), oracles, Tolerance(1e-12))) {
            return false;
        }
    }
    return true;
}

}  // namespace fqse
