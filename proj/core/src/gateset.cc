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

#include "fqse/gateset.h"

#include <algorithm>
#include <cmath>

namespace fqse {

namespace {

constexpr double kMappingEps = 1e-9;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

using Vec = std::vector<Complex>;

Complex inner(const Vec &a, const Vec &b) {
    Complex total{};
    for (std::size_t k = 0; k < a.size(); k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

double max_abs_diff(const Vec &a, const Vec &b) {
    double worst = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

// Greedy Gram-Schmidt: indices of a maximal linearly independent subset, in order.
std::vector<std::size_t> independent_subset(const std::vector<Vec> &vectors) {
    std::vector<std::size_t> chosen;
    std::vector<Vec> basis;
    for (std::size_t k = 0; k < vectors.size(); k++) {
        Vec residual = vectors[k];
        for (const auto &e : basis) {
            Complex c = inner(e, residual);
            for (std::size_t t = 0; t < residual.size(); t++) {
                residual[t] -= c * e[t];
            }
        }
        double norm = std::sqrt(std::real(inner(residual, residual)));
        if (norm > kMappingEps) {
            for (auto &z : residual) {
                z /= norm;
            }
            basis.push_back(std::move(residual));
            chosen.push_back(k);
        }
    }
    return chosen;
}

// Gauss-Jordan with partial pivoting. The caller guarantees invertibility.
std::vector<Vec> invert(std::vector<Vec> a) {
    const std::size_t n = a.size();
    std::vector<Vec> inv(n, Vec(n));
    for (std::size_t k = 0; k < n; k++) {
        inv[k][k] = 1.0;
    }
    for (std::size_t col = 0; col < n; col++) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; r++) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
                pivot = r;
            }
        }
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        Complex p = a[col][col];
        for (std::size_t c = 0; c < n; c++) {
            a[col][c] /= p;
            inv[col][c] /= p;
        }
        for (std::size_t r = 0; r < n; r++) {
            if (r == col) {
                continue;
            }
            Complex f = a[r][col];
            for (std::size_t c = 0; c < n; c++) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

Vec mat_vec(const ComplexMatrix &m, const Vec &v) {
    Vec out(m.n_rows());
    for (std::size_t i = 0; i < m.n_rows(); i++) {
        for (std::size_t j = 0; j < m.n_cols(); j++) {
            out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

}  // namespace

KetLabel::KetLabel(std::string_view symbol) : symbol_(symbol) {
    bool ok = false;
    if (symbol.size() == 1) {
        ok = symbol == "0" || symbol == "1" || symbol == "+" || symbol == "-";
    } else if (symbol.size() == 2) {
        ok = (symbol[0] == '0' || symbol[0] == '1') && (symbol[1] == '0' || symbol[1] == '1');
    }
    if (!ok) {
        throw std::invalid_argument("not a ket label: '" + std::string(symbol) + "'");
    }
}

std::vector<Complex> KetLabel::amplitudes() const {
    if (symbol_ == "+") {
        return {kInvSqrt2, kInvSqrt2};
    }
    if (symbol_ == "-") {
        return {kInvSqrt2, -kInvSqrt2};
    }
    std::size_t index = 0;
    for (char c : symbol_) {
        index = index * 2 + (c == '1' ? 1 : 0);
    }
    std::vector<Complex> out(std::size_t{1} << symbol_.size());
    out[index] = 1.0;
    return out;
}

std::string KetLabel::to_string() const {
    return "|" + symbol_ + ">";
}

KetExpr::KetExpr(KetLabel label) : KetExpr(1.0, std::move(label)) {
}

KetExpr::KetExpr(Complex amplitude, KetLabel label) : KetExpr(std::vector<Term>{{amplitude, std::move(label)}}) {
}

KetExpr::KetExpr(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw std::invalid_argument("ket expression needs at least one term");
    }
    double norm_sq = 0;
    for (std::size_t k = 0; k < terms_.size(); k++) {
        if (terms_[k].label.arity() != terms_.front().label.arity()) {
            throw std::invalid_argument("ket expression mixes labels of different arity");
        }
        for (std::size_t j = 0; j < k; j++) {
            if (terms_[j].label == terms_[k].label) {
                throw std::invalid_argument("ket expression repeats label " + terms_[k].label.to_string());
            }
        }
        norm_sq += std::norm(terms_[k].amplitude);
    }
    if (std::abs(norm_sq - 1.0) > kMappingEps) {
        throw std::invalid_argument("ket expression is not a unit vector (norm^2 = " + std::to_string(norm_sq) + ")");
    }
}

std::vector<Complex> KetExpr::amplitudes() const {
    std::vector<Complex> out(std::size_t{1} << arity());
    for (const auto &term : terms_) {
        auto basis = term.label.amplitudes();
        for (std::size_t k = 0; k < out.size(); k++) {
            out[k] += term.amplitude * basis[k];
        }
    }
    return out;
}

std::string KetExpr::to_string() const {
    std::string out;
    for (const auto &term : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        if (term.amplitude == Complex{1.0}) {
            out += term.label.to_string();
        } else if (term.amplitude == Complex{-1.0}) {
            out += "-" + term.label.to_string();
        } else {
            out += "(" + std::to_string(term.amplitude.real()) + "," + std::to_string(term.amplitude.imag()) + ")" +
                   term.label.to_string();
        }
    }
    return out;
}

BasisMapping::BasisMapping(std::size_t arity, std::vector<Pair> pairs) : arity_(arity), pairs_(std::move(pairs)) {
    if (arity_ != 1 && arity_ != 2) {
        throw std::invalid_argument("mapping arity must be 1 or 2");
    }
    std::vector<Vec> inputs;
    for (std::size_t k = 0; k < pairs_.size(); k++) {
        const auto &p = pairs_[k];
        if (p.input.arity() != arity_ || p.output.arity() != arity_) {
            throw std::invalid_argument("pair " + std::to_string(k) + " has the wrong arity");
        }
        for (std::size_t j = 0; j < k; j++) {
            if (pairs_[j].input == p.input) {
                throw std::invalid_argument("input " + p.input.to_string() + " is mapped twice");
            }
        }
        inputs.push_back(p.input.amplitudes());
    }
    if (independent_subset(inputs).size() != (std::size_t{1} << arity_)) {
        throw std::invalid_argument("mapping inputs do not span the computational basis");
    }
}

MappingError::MappingError(
    const std::string &message, std::size_t pair_index, std::optional<std::size_t> other_pair_index)
    : std::invalid_argument(message), pair_index_(pair_index), other_pair_index_(other_pair_index) {
}

ComplexMatrix mapping_to_matrix(const BasisMapping &mapping) {
    const auto &pairs = mapping.pairs();
    const std::size_t dim = std::size_t{1} << mapping.arity();

    std::vector<Vec> inputs;
    std::vector<Vec> outputs;
    for (const auto &p : pairs) {
        inputs.push_back(p.input.amplitudes());
        outputs.push_back(p.output.amplitudes());
    }
    auto describe = [&](std::size_t k) {
        return "pair " + std::to_string(k) + " (" + pairs[k].input.to_string() + " -> " +
               pairs[k].output.to_string() + ")";
    };

    // Distinct inputs sent to one output can never be undone.
    for (std::size_t k = 0; k < pairs.size(); k++) {
        for (std::size_t j = 0; j < k; j++) {
            if (max_abs_diff(outputs[j], outputs[k]) <= kMappingEps) {
                throw MappingError(
                    "mapping is not injective: " + describe(j) + " and " + describe(k) + " share an output", j, k);
            }
        }
    }

    // U * A = B on a basis subset of the inputs, so U = B * A^-1.
    auto chosen = independent_subset(inputs);
    std::vector<Vec> a(dim, Vec(dim));
    std::vector<Vec> b(dim, Vec(dim));
    for (std::size_t c = 0; c < dim; c++) {
        for (std::size_t r = 0; r < dim; r++) {
            a[r][c] = inputs[chosen[c]][r];
            b[r][c] = outputs[chosen[c]][r];
        }
    }
    auto a_inv = invert(std::move(a));
    std::vector<Complex> entries(dim * dim);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            Complex total{};
            for (std::size_t t = 0; t < dim; t++) {
                total += b[r][t] * a_inv[t][c];
            }
            entries[r * dim + c] = total;
        }
    }
    ComplexMatrix u(dim, dim, std::move(entries));

    for (std::size_t k = 0; k < pairs.size(); k++) {
        if (max_abs_diff(mat_vec(u, inputs[k]), outputs[k]) > kMappingEps) {
            throw MappingError("mapping is inconsistent: " + describe(k) + " contradicts the other pairs", k, {});
        }
    }
    // A linear map is unitary iff it preserves inner products on a spanning set.
    for (std::size_t k = 0; k < pairs.size(); k++) {
        for (std::size_t j = 0; j < k; j++) {
            if (std::abs(inner(inputs[j], inputs[k]) - inner(outputs[j], outputs[k])) > kMappingEps) {
                throw MappingError(
                    "mapping is not unitary: " + describe(j) + " and " + describe(k) + " do not preserve overlap", j,
                    k);
            }
        }
    }
    return u;
}

namespace {

BasisMapping one_qubit_mapping(std::vector<BasisMapping::Pair> pairs) {
    return BasisMapping(1, std::move(pairs));
}

}  // namespace

Gate identity_gate() {
    return Gate{
        "I",
        1,
        ComplexMatrix::identity(2),
        one_qubit_mapping({{KetLabel("0"), KetLabel("0")}, {KetLabel("1"), KetLabel("1")}}),
        std::nullopt,
    };
}

Gate pauli_x() {
    return Gate{
        "X",
        1,
        ComplexMatrix::from_rows({{0, 1}, {1, 0}}),
        one_qubit_mapping({{KetLabel("0"), KetLabel("1")}, {KetLabel("1"), KetLabel("0")}}),
        std::nullopt,
    };
}

Gate phase_shift(double phi) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phase_shift angle must be finite");
    }
    const Complex phase = std::polar(1.0, phi);
    return Gate{
        "R_phi",
        1,
        ComplexMatrix::from_rows({{1, 0}, {0, phase}}),
        one_qubit_mapping({{KetLabel("0"), KetLabel("0")}, {KetLabel("1"), KetExpr(phase, KetLabel("1"))}}),
        phi,
    };
}

Gate pauli_z() {
    return Gate{
        "Z",
        1,
        ComplexMatrix::from_rows({{1, 0}, {0, -1}}),
        one_qubit_mapping({{KetLabel("0"), KetLabel("0")}, {KetLabel("1"), KetExpr(-1.0, KetLabel("1"))}}),
        std::nullopt,
    };
}

Gate hadamard() {
    const double s = kInvSqrt2;
    return Gate{
        "H",
        1,
        ComplexMatrix::from_rows({{s, s}, {s, -s}}),
        one_qubit_mapping({
            {KetLabel("0"), KetLabel("+")},
            {KetLabel("+"), KetLabel("0")},
            {KetLabel("1"), KetLabel("-")},
            {KetLabel("-"), KetLabel("1")},
        }),
        std::nullopt,
    };
}

Gate cnot() {
    return Gate{
        "CNOT",
        2,
        ComplexMatrix::from_rows({
            {1, 0, 0, 0},
            {0, 1, 0, 0},
            {0, 0, 0, 1},
            {0, 0, 1, 0},
        }),
        BasisMapping(
            2,
            {
                {KetLabel("00"), KetLabel("00")},
                {KetLabel("01"), KetLabel("01")},
                {KetLabel("10"), KetLabel("11")},
                {KetLabel("11"), KetLabel("10")},
            }),
        std::nullopt,
    };
}

std::vector<Gate> involutory_gates() {
    return {identity_gate(), pauli_x(), pauli_z(), hadamard(), cnot()};
}

Gate gate_by_name(std::string_view name, std::optional<double> parameter) {
    if (name == "R_phi") {
        if (!parameter.has_value()) {
            throw std::invalid_argument("R_phi needs an angle");
        }
        return phase_shift(*parameter);
    }
    if (parameter.has_value()) {
        throw std::invalid_argument("gate " + std::string(name) + " takes no parameter");
    }
    if (name == "I") {
        return identity_gate();
    }
    if (name == "X") {
        return pauli_x();
    }
    if (name == "Z") {
        return pauli_z();
    }
    if (name == "H") {
        return hadamard();
    }
    if (name == "CNOT") {
        return cnot();
    }
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

}  // namespace fqse
