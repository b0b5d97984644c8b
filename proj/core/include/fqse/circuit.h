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

#ifndef FQSE_CIRCUIT_H
#define FQSE_CIRCUIT_H

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fqse/gateset.h"
#include "fqse/linalg.h"
#include "fqse/state.h"

namespace fqse {

/// The four total functions Z2 -> Z2.
enum class OracleFn { kConst0, kConst1, kIdentity, kNegation };

inline constexpr std::array<OracleFn, 4> kAllOracles = {
    OracleFn::kConst0, OracleFn::kConst1, OracleFn::kIdentity, OracleFn::kNegation};

int evaluate(OracleFn f, int x);
bool is_constant(OracleFn f);
/// "const0", "const1", "id", "not".
std::string_view oracle_keyword(OracleFn f);
std::optional<OracleFn> oracle_from_keyword(std::string_view keyword);

/// Initial states a qubit can be allocated in.
enum class InitialKet { kZero, kOne, kPlus, kMinus, kHadamardZero, kHadamardOne };

/// "|0>", "|1>", "|+>", "|->", "H|0>", "H|1>".
std::string_view ket_spelling(InitialKet ket);
std::optional<InitialKet> ket_from_spelling(std::string_view spelling);
StateVector initial_state(InitialKet ket);

struct Alloc {
    std::string qubit;
    InitialKet ket;
    bool operator==(const Alloc &) const = default;
};

struct Apply {
    /// Canonical gate name, see gate_by_name.
    std::string gate;
    std::optional<double> parameter;
    std::vector<std::string> targets;
    bool operator==(const Apply &) const = default;
};

/// |x, y> -> |x, f(x) xor y>.
struct ApplyOracle {
    std::string oracle;
    std::string control;
    std::string target;
    bool operator==(const ApplyOracle &) const = default;
};

struct Measure {
    std::string qubit;
    bool operator==(const Measure &) const = default;
};

using Instruction = std::variant<Alloc, Apply, ApplyOracle, Measure>;

struct Circuit {
    std::vector<Instruction> instructions;
    bool operator==(const Circuit &) const = default;
};

using OracleMap = std::map<std::string, OracleFn, std::less<>>;

class CircuitError : public std::invalid_argument {
   public:
    CircuitError(const std::string &message, std::size_t instruction_index);

    std::size_t instruction_index() const noexcept {
        return instruction_index_;
    }

   private:
    std::size_t instruction_index_;
};

/// Throws CircuitError for the first instruction that uses an unallocated
/// qubit, reallocates one, names an unknown oracle or gate, repeats a target,
/// or grows the register beyond kMaxQubits.
void validate(const Circuit &circuit, const OracleMap &oracles);

struct MeasuredBit {
    std::string qubit;
    int bit;
    double probability;
};

struct RunReport {
    /// Empty when the circuit allocates nothing.
    std::optional<StateVector> final_state;
    /// The register just before each Measure, in execution order.
    std::vector<StateVector> pre_measurement_states;
    std::vector<MeasuredBit> measured;
    /// Outcome string -> count, filled by run_shots.
    std::optional<std::map<std::string, std::size_t>> shots;

    /// Measured bits concatenated in execution order, e.g. "01".
    std::string outcome() const;
    /// The state before the first measurement, or the final state if nothing was measured.
    std::optional<StateVector> unmeasured_state() const;
};

/// Called after every instruction with its index and the register it left behind.
using StepObserver = std::function<void(std::size_t, const StateVector &)>;

/// Executes instructions in order. Alloc appends a qubit (the first allocated
/// qubit is the most significant). Measurements draw from one Rng seeded with seed.
RunReport run_circuit(
    const Circuit &circuit, const OracleMap &oracles, std::uint64_t seed, const StepObserver &observer = {});

/// Seed of shot i: mix64(root ^ i).
std::uint64_t shot_seed(std::uint64_t root, std::uint64_t shot_index) noexcept;

/// Runs `shots` independent executions. Returns the report of shot 0 with
/// the aggregate counts attached. Throws std::invalid_argument if shots is 0.
RunReport run_shots(const Circuit &circuit, const OracleMap &oracles, std::size_t shots, std::uint64_t seed);

/// The 4x4 permutation sending |x y> to |x, f(x) xor y>.
ComplexMatrix oracle_unitary(OracleFn f);
/// oracle_unitary wrapped as a two-qubit gate named "N[<keyword>]".
Gate oracle_gate(OracleFn f);

enum class Verdict { kConstant, kBalanced };
std::string_view verdict_name(Verdict v);

struct DeutschVerdict {
    Verdict verdict;
    int measured_bit;
    /// Pre-measurement probability of measured_bit.
    double probability;
};

/// x = H|0>; y = H|1>; N_f x y; H x; measure x.
Circuit deutsch_circuit(const std::string &oracle_name = "f");

/// The same algorithm with each preparation spelled as an allocation in the
/// computational basis followed by an explicit Hadamard.
Circuit deutsch_circuit_nested(const std::string &oracle_name = "f");

/// Bit 0 means CONSTANT, bit 1 means BALANCED.
DeutschVerdict deutsch(OracleFn f, std::uint64_t seed);

/// Compares the states of two circuits just before their first measurement.
bool circuits_equivalent(const Circuit &a, const Circuit &b, const OracleMap &oracles, Tolerance tol);

/// Both readings of the algorithm agree within 1e-12 for all four oracles.
bool deutsch_seq_equivalence_check();

}  // namespace fqse

#endif
