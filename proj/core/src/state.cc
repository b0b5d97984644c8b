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

#include "fqse/state.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fqse {

namespace {

constexpr double kNormEps = 1e-9;

std::size_t bit_position(std::size_t n_qubits, std::size_t qubit) {
    return n_qubits - 1 - qubit;
}

void check_qubit(const StateVector &s, std::size_t qubit) {
    if (qubit >= s.n_qubits()) {
        throw std::invalid_argument(
            "qubit " + std::to_string(qubit) + " out of range for a " + std::to_string(s.n_qubits()) +
            "-qubit register");
    }
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits_ == 0 || n_qubits_ > kMaxQubits) {
        throw std::invalid_argument(
            "register size must be in [1, " + std::to_string(kMaxQubits) + "], got " + std::to_string(n_qubits_));
    }
    if (amplitudes_.size() != (std::size_t{1} << n_qubits_)) {
        throw std::invalid_argument("state of " + std::to_string(n_qubits_) + " qubits needs 2^n amplitudes");
    }
    for (const auto &c : amplitudes_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("state amplitudes must be finite");
        }
    }
    double n = norm_squared();
    if (std::abs(n - 1.0) > kNormEps) {
        throw std::invalid_argument("state is not normalized (norm^2 = " + std::to_string(n) + ")");
    }
}

double StateVector::norm_squared() const noexcept {
    double total = 0;
    for (const auto &c : amplitudes_) {
        total += std::norm(c);
    }
    return total;
}

StateVector basis_state(std::size_t n_qubits, std::size_t index) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("register size must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (index >= (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument(
            "basis index " + std::to_string(index) + " out of range for " + std::to_string(n_qubits) + " qubits");
    }
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector tensor_product(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() + b.n_qubits() > kMaxQubits) {
        throw std::invalid_argument("register would exceed " + std::to_string(kMaxQubits) + " qubits");
    }
    auto aa = a.amplitudes();
    auto bb = b.amplitudes();
    std::vector<Complex> out;
    out.reserve(aa.size() * bb.size());
    for (const auto &x : aa) {
        for (const auto &y : bb) {
            out.push_back(x * y);
        }
    }
    return StateVector(a.n_qubits() + b.n_qubits(), std::move(out));
}

StateVector apply_gate(const StateVector &s, const Gate &g, std::span<const std::size_t> targets) {
    if (targets.size() != g.arity) {
        throw std::invalid_argument(
            "gate " + g.name + " acts on " + std::to_string(g.arity) + " qubit(s), got " +
            std::to_string(targets.size()) + " target(s)");
    }
    const std::size_t dim = std::size_t{1} << g.arity;
    if (g.matrix.n_rows() != dim || g.matrix.n_cols() != dim) {
        throw std::invalid_argument("gate " + g.name + " has a matrix of the wrong size");
    }
    std::size_t target_mask = 0;
    std::vector<std::size_t> masks;
    for (std::size_t t : targets) {
        check_qubit(s, t);
        std::size_t m = std::size_t{1} << bit_position(s.n_qubits(), t);
        if (target_mask & m) {
            throw std::invalid_argument("duplicate target qubit " + std::to_string(t));
        }
        target_mask |= m;
        masks.push_back(m);
    }

    // offsets[j] is the index displacement of gate basis state j.
    std::vector<std::size_t> offsets(dim, 0);
    for (std::size_t j = 0; j < dim; j++) {
        for (std::size_t k = 0; k < g.arity; k++) {
            if (j & (std::size_t{1} << (g.arity - 1 - k))) {
                offsets[j] |= masks[k];
            }
        }
    }

    auto in = s.amplitudes();
    std::vector<Complex> out(in.begin(), in.end());
    std::vector<Complex> gathered(dim);
    for (std::size_t base = 0; base < in.size(); base++) {
        if (base & target_mask) {
            continue;
        }
        for (std::size_t j = 0; j < dim; j++) {
            gathered[j] = in[base | offsets[j]];
        }
        for (std::size_t r = 0; r < dim; r++) {
            Complex total{};
            for (std::size_t c = 0; c < dim; c++) {
                total += g.matrix(r, c) * gathered[c];
            }
            out[base | offsets[r]] = total;
        }
    }
    return StateVector(s.n_qubits(), std::move(out));
}

StateVector apply_gate(const StateVector &s, const Gate &g, std::initializer_list<std::size_t> targets) {
    return apply_gate(s, g, std::span<const std::size_t>(targets.begin(), targets.size()));
}

std::vector<double> probabilities(const StateVector &s) {
    std::vector<double> out;
    out.reserve(s.amplitudes().size());
    for (const auto &c : s.amplitudes()) {
        out.push_back(std::norm(c));
    }
    return out;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

MeasurementResult measure_qubit(const StateVector &s, std::size_t target, std::uint64_t seed) {
    Rng rng(seed);
    return measure_qubit(s, target, rng);
}

MeasurementResult measure_qubit(const StateVector &s, std::size_t target, Rng &rng) {
    check_qubit(s, target);
    const std::size_t mask = std::size_t{1} << bit_position(s.n_qubits(), target);
    auto amps = s.amplitudes();

    double p1 = 0;
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (i & mask) {
            p1 += std::norm(amps[i]);
        }
    }
    double p0 = 0;
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (!(i & mask)) {
            p0 += std::norm(amps[i]);
        }
    }

    // Always draw, so that the stream position does not depend on the state.
    const double u = rng.uniform();
    int bit;
    if (p0 < kUnreachableBranch) {
        bit = 1;
    } else if (p1 < kUnreachableBranch) {
        bit = 0;
    } else {
        bit = u * (p0 + p1) < p0 ? 0 : 1;
    }
    const double p = bit ? p1 : p0;
    const double scale = 1.0 / std::sqrt(p);
    std::vector<Complex> post(amps.size());
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (static_cast<bool>(i & mask) == static_cast<bool>(bit)) {
            post[i] = amps[i] * scale;
        }
    }
    return MeasurementResult{bit, StateVector(s.n_qubits(), std::move(post)), p};
}

}  // namespace fqse
