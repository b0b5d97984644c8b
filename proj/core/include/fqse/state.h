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

#ifndef FQSE_STATE_H
#define FQSE_STATE_H

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "fqse/gateset.h"
#include "fqse/linalg.h"

namespace fqse {

inline constexpr std::size_t kMaxQubits = 12;

/// Normalized amplitudes over an n-qubit register.
///
/// Qubit 0 is the most significant bit of the basis index, so |xy> has index
/// 2x + y.
class StateVector {
   public:
    /// Throws std::invalid_argument if n_qubits is 0 or above kMaxQubits, the
    /// length is not 2^n_qubits, an amplitude is not finite, or the squared
    /// norm is more than 1e-9 away from 1.
    StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

    std::size_t n_qubits() const noexcept {
        return n_qubits_;
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    double norm_squared() const noexcept;

    bool operator==(const StateVector &other) const = default;

   private:
    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

StateVector basis_state(std::size_t n_qubits, std::size_t index);

/// |a>|b>, with a's qubits first.
StateVector tensor_product(const StateVector &a, const StateVector &b);

/// Applies g to the listed qubits. targets[0] is the gate's most significant
/// input. Throws std::invalid_argument on an arity mismatch or duplicate or
/// out-of-range targets.
StateVector apply_gate(const StateVector &s, const Gate &g, std::span<const std::size_t> targets);
StateVector apply_gate(const StateVector &s, const Gate &g, std::initializer_list<std::size_t> targets);

/// |c_i|^2 for each basis index.
std::vector<double> probabilities(const StateVector &s);

/// 64-bit finalizer from SplitMix64. Used to derive independent seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Deterministic sampling source: std::mt19937_64 seeded with mix64(seed).
/// uniform() takes the top 53 bits of one draw, so results do not depend on
/// the standard library's distribution implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

   private:
    std::mt19937_64 engine_;
};

struct MeasurementResult {
    int bit;
    StateVector post_state;
    /// Pre-measurement probability of the observed bit.
    double probability;
};

/// Branches with probability below this are never selected.
inline constexpr double kUnreachableBranch = 1e-12;

/// Projective Z-basis measurement of one qubit with collapse and renormalization.
MeasurementResult measure_qubit(const StateVector &s, std::size_t target, std::uint64_t seed);
MeasurementResult measure_qubit(const StateVector &s, std::size_t target, Rng &rng);

}  // namespace fqse

#endif
