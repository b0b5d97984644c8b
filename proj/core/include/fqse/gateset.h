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

#ifndef FQSE_GATESET_H
#define FQSE_GATESET_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqse/linalg.h"

namespace fqse {

/// A basis ket as written in a gate definition.
///
/// One-qubit labels are "0", "1", "+", "-" where |+> = (|0> + |1>)/sqrt2 and
/// |-> = (|0> - |1>)/sqrt2. Two-qubit labels are "00", "01", "10", "11" with
/// the first character as the most significant qubit.
class KetLabel {
   public:
    /// Throws std::invalid_argument for anything outside the alphabets above.
    explicit KetLabel(std::string_view symbol);

    const std::string &symbol() const noexcept {
        return symbol_;
    }
    std::size_t arity() const noexcept {
        return symbol_.size();
    }
    /// Amplitudes over the computational basis, length 2^arity.
    std::vector<Complex> amplitudes() const;
    /// "|0>", "|+>", "|10>".
    std::string to_string() const;

    bool operator==(const KetLabel &other) const = default;

   private:
    std::string symbol_;
};

/// A unit-norm linear combination of distinct kets, e.g. -|1> or e^{i phi}|1>.
class KetExpr {
   public:
    struct Term {
        Complex amplitude;
        KetLabel label;
    };

    /// The bare ket, amplitude 1.
    KetExpr(KetLabel label);  // NOLINT(google-explicit-constructor)
    KetExpr(Complex amplitude, KetLabel label);
    /// Throws std::invalid_argument on an empty term list, repeated or mixed
    /// arity labels, or a norm more than 1e-9 away from 1.
    explicit KetExpr(std::vector<Term> terms);

    const std::vector<Term> &terms() const noexcept {
        return terms_;
    }
    std::size_t arity() const noexcept {
        return terms_.front().label.arity();
    }
    std::vector<Complex> amplitudes() const;
    std::string to_string() const;

   private:
    std::vector<Term> terms_;
};

/// The relational form of a gate: a list of input ket |-> output ket pairs.
///
/// Inputs must be distinct and must span C^(2^arity). Redundant pairs are
/// allowed (the Hadamard definition lists four pairs for a 2-dim space) and are
/// checked for consistency by mapping_to_matrix.
class BasisMapping {
   public:
    struct Pair {
        KetLabel input;
        KetExpr output;
    };

    /// Throws std::invalid_argument when arity is not 1 or 2, a label has the
    /// wrong arity, inputs repeat, or inputs fail to span the basis.
    BasisMapping(std::size_t arity, std::vector<Pair> pairs);

    std::size_t arity() const noexcept {
        return arity_;
    }
    const std::vector<Pair> &pairs() const noexcept {
        return pairs_;
    }

   private:
    std::size_t arity_;
    std::vector<Pair> pairs_;
};

/// Raised by mapping_to_matrix. Identifies the offending pair(s) by index into
/// BasisMapping::pairs().
class MappingError : public std::invalid_argument {
   public:
    MappingError(const std::string &message, std::size_t pair_index, std::optional<std::size_t> other_pair_index);

    std::size_t pair_index() const noexcept {
        return pair_index_;
    }
    std::optional<std::size_t> other_pair_index() const noexcept {
        return other_pair_index_;
    }

   private:
    std::size_t pair_index_;
    std::optional<std::size_t> other_pair_index_;
};

/// The unique U with U|input> = output for every pair; column j of U is the
/// image of computational basis state j.
///
/// Throws MappingError when a redundant pair contradicts the others, when two
/// inputs share an output, or when the induced map does not preserve inner
/// products (i.e. is not unitary).
ComplexMatrix mapping_to_matrix(const BasisMapping &mapping);

/// A named unitary. Built-in constructors always produce well-formed gates;
/// hand-assembled ones are validated by check_gate, not on construction.
struct Gate {
    std::string name;
    std::size_t arity;
    ComplexMatrix matrix;
    std::optional<BasisMapping> mapping;
    std::optional<double> parameter;
};

Gate identity_gate();
Gate pauli_x();
/// R_phi = diag(1, e^{i phi}). Throws std::invalid_argument for non-finite phi.
Gate phase_shift(double phi);
Gate pauli_z();
Gate hadamard();
/// Control is the first (most significant) qubit.
Gate cnot();

/// I, X, Z, H, CNOT.
std::vector<Gate> involutory_gates();

/// Looks up a canonical gate name ("I", "X", "Z", "H", "CNOT", "R_phi").
/// R_phi requires a parameter; the others reject one. Throws
/// std::invalid_argument for unknown names or a parameter mismatch.
Gate gate_by_name(std::string_view name, std::optional<double> parameter = std::nullopt);

}  // namespace fqse

#endif
