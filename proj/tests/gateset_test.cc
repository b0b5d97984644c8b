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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace fqse;

namespace {

const double s = 1.0 / std::sqrt(2.0);
const double pi = std::numbers::pi;

std::vector<Complex> apply(const Gate &g, const KetLabel &ket) {
    auto out = mat_mul(g.matrix, ComplexMatrix::column(ket.amplitudes()));
    return {out.entries().begin(), out.entries().end()};
}

void expect_vec_near(const std::vector<Complex> &got, const std::vector<Complex> &want, double eps = 1e-12) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t k = 0; k < got.size(); k++) {
        EXPECT_NEAR(std::abs(got[k] - want[k]), 0, eps) << "component " << k;
    }
}

BasisMapping::Pair pair(const char *in, KetExpr out) {
    return {KetLabel(in), std::move(out)};
}

}  // namespace

TEST(KetLabel, alphabets) {
    for (const char *ok : {"0", "1", "+", "-", "00", "01", "10", "11"}) {
        EXPECT_NO_THROW(KetLabel{ok}) << ok;
    }
    for (const char *bad : {"", "2", "0+", "+-", "000", "a"}) {
        EXPECT_THROW(KetLabel{bad}, std::invalid_argument) << bad;
    }
    expect_vec_near(KetLabel("+").amplitudes(), {s, s});
    expect_vec_near(KetLabel("-").amplitudes(), {s, -s});
    expect_vec_near(KetLabel("10").amplitudes(), {0, 0, 1, 0});
}

TEST(KetExpr, invariants) {
    EXPECT_NO_THROW(KetExpr(-1.0, KetLabel("1")));
    EXPECT_NO_THROW(KetExpr(std::polar(1.0, 0.3), KetLabel("1")));
    EXPECT_THROW(KetExpr(2.0, KetLabel("1")), std::invalid_argument);
    EXPECT_THROW(KetExpr(std::vector<KetExpr::Term>{}), std::invalid_argument);
    EXPECT_THROW(
        KetExpr(std::vector<KetExpr::Term>{{s, KetLabel("0")}, {s, KetLabel("0")}}), std::invalid_argument);
    EXPECT_THROW(
        KetExpr(std::vector<KetExpr::Term>{{s, KetLabel("0")}, {s, KetLabel("00")}}), std::invalid_argument);
    KetExpr sum(std::vector<KetExpr::Term>{{s, KetLabel("0")}, {s, KetLabel("1")}});
    expect_vec_near(sum.amplitudes(), KetLabel("+").amplitudes());
}

TEST(BasisMapping, invariants) {
    EXPECT_THROW(BasisMapping(1, {pair("0", KetLabel("1")), pair("0", KetLabel("0"))}), std::invalid_argument);
    // |0> alone does not span C^2.
    EXPECT_THROW(BasisMapping(1, {pair("0", KetLabel("1"))}), std::invalid_argument);
    EXPECT_THROW(BasisMapping(3, {}), std::invalid_argument);
    EXPECT_THROW(BasisMapping(2, {pair("0", KetLabel("1")), pair("1", KetLabel("0"))}), std::invalid_argument);
    // {|0>, |+>} spans even though it is not orthogonal.
    EXPECT_NO_THROW(BasisMapping(1, {pair("0", KetLabel("0")), pair("+", KetLabel("+"))}));
}

TEST(mapping_to_matrix, examples) {
    EXPECT_EQ(
        mapping_to_matrix(BasisMapping(1, {pair("0", KetLabel("1")), pair("1", KetLabel("0"))})),
        ComplexMatrix::from_rows({{0, 1}, {1, 0}}));
    EXPECT_TRUE(approx_equal(
        mapping_to_matrix(BasisMapping(1, {pair("0", KetLabel("0")), pair("1", KetLabel("1"))})),
        ComplexMatrix::identity(2), Tolerance(1e-12)));
    auto h = mapping_to_matrix(BasisMapping(
        1, {pair("0", KetLabel("+")), pair("+", KetLabel("0")), pair("1", KetLabel("-")), pair("-", KetLabel("1"))}));
    EXPECT_TRUE(approx_equal(h, ComplexMatrix::from_rows({{s, s}, {s, -s}}), Tolerance(1e-12)));
}

TEST(mapping_to_matrix, solves_from_non_computational_inputs) {
    // H defined only on |+> and |->.
    auto h = mapping_to_matrix(BasisMapping(1, {pair("+", KetLabel("0")), pair("-", KetLabel("1"))}));
    EXPECT_TRUE(approx_equal(h, hadamard().matrix, Tolerance(1e-12)));
}

TEST(mapping_to_matrix, rejects_non_injective) {
    try {
        mapping_to_matrix(BasisMapping(1, {pair("0", KetLabel("0")), pair("1", KetLabel("0"))}));
        FAIL() << "expected MappingError";
    } catch (const MappingError &e) {
        EXPECT_EQ(e.pair_index(), 0u);
        EXPECT_EQ(e.other_pair_index(), 1u);
        EXPECT_NE(std::string(e.what()).find("injective"), std::string::npos);
    }
}

TEST(mapping_to_matrix, rejects_inconsistent_redundant_pair) {
    // The first two pairs fix X; |+> -> |-> contradicts it.
    try {
        mapping_to_matrix(BasisMapping(
            1, {pair("0", KetLabel("1")), pair("1", KetLabel("0")), pair("+", KetLabel("-"))}));
        FAIL() << "expected MappingError";
    } catch (const MappingError &e) {
        EXPECT_EQ(e.pair_index(), 2u);
    }
}

TEST(mapping_to_matrix, rejects_non_unitary) {
    // |0> -> |0>, |1> -> |+>: injective but the images overlap.
    try {
        mapping_to_matrix(BasisMapping(1, {pair("0", KetLabel("0")), pair("1", KetLabel("+"))}));
        FAIL() << "expected MappingError";
    } catch (const MappingError &e) {
        EXPECT_EQ(e.pair_index(), 0u);
        EXPECT_EQ(e.other_pair_index(), 1u);
        EXPECT_NE(std::string(e.what()).find("unitary"), std::string::npos);
    }
}

TEST(gates, identity) {
    auto g = identity_gate();
    EXPECT_EQ(g.name, "I");
    expect_vec_near(apply(g, KetLabel("0")), KetLabel("0").amplitudes());
    expect_vec_near(apply(g, KetLabel("1")), KetLabel("1").amplitudes());
    EXPECT_TRUE(is_hermitian(g.matrix));
    EXPECT_TRUE(is_unitary(g.matrix));
}

TEST(gates, pauli_x) {
    auto g = pauli_x();
    expect_vec_near(apply(g, KetLabel("0")), KetLabel("1").amplitudes());
    expect_vec_near(apply(g, KetLabel("1")), KetLabel("0").amplitudes());
    EXPECT_EQ(mat_mul(g.matrix, g.matrix), ComplexMatrix::identity(2));
}

TEST(gates, phase_shift) {
    EXPECT_TRUE(approx_equal(phase_shift(0).matrix, ComplexMatrix::identity(2), Tolerance(1e-12)));
    EXPECT_TRUE(approx_equal(phase_shift(pi).matrix, pauli_z().matrix, Tolerance(1e-9)));
    expect_vec_near(apply(phase_shift(pi / 2), KetLabel("1")), {0, Complex(0, 1)});
    EXPECT_EQ(phase_shift(0.25).parameter, 0.25);
    EXPECT_EQ(phase_shift(0.25).name, "R_phi");
    EXPECT_THROW(phase_shift(std::nan("")), std::invalid_argument);
    EXPECT_THROW(phase_shift(INFINITY), std::invalid_argument);
    EXPECT_FALSE(is_hermitian(phase_shift(pi / 2).matrix));
    EXPECT_TRUE(is_unitary(phase_shift(pi / 2).matrix));
}

TEST(gates, pauli_z) {
    auto g = pauli_z();
    expect_vec_near(apply(g, KetLabel("1")), {0, -1});
    expect_vec_near(apply(g, KetLabel("0")), {1, 0});
    EXPECT_EQ(mat_mul(g.matrix, g.matrix), ComplexMatrix::identity(2));
}

TEST(gates, hadamard) {
    auto g = hadamard();
    expect_vec_near(apply(g, KetLabel("0")), KetLabel("+").amplitudes());
    expect_vec_near(apply(g, KetLabel("+")), KetLabel("0").amplitudes());
    expect_vec_near(apply(g, KetLabel("1")), KetLabel("-").amplitudes());
    expect_vec_near(apply(g, KetLabel("-")), KetLabel("1").amplitudes());
    EXPECT_TRUE(approx_equal(mat_mul(g.matrix, g.matrix), ComplexMatrix::identity(2), Tolerance(1e-12)));
}

TEST(gates, cnot) {
    auto g = cnot();
    EXPECT_EQ(g.arity, 2u);
    expect_vec_near(apply(g, KetLabel("10")), KetLabel("11").amplitudes());
    expect_vec_near(apply(g, KetLabel("11")), KetLabel("10").amplitudes());
    expect_vec_near(apply(g, KetLabel("01")), KetLabel("01").amplitudes());
    expect_vec_near(apply(g, KetLabel("00")), KetLabel("00").amplitudes());
    EXPECT_EQ(mat_mul(g.matrix, g.matrix), ComplexMatrix::identity(4));
}

TEST(gates, builtin_invariants) {
    auto gates = involutory_gates();
    for (double phi : {0.0, 0.3, pi / 4, pi / 2, pi, -2.5}) {
        gates.push_back(phase_shift(phi));
    }
    for (const auto &g : gates) {
        SCOPED_TRACE(g.name);
        EXPECT_TRUE(is_unitary(g.matrix, Tolerance(1e-9)));
        ASSERT_TRUE(g.mapping.has_value());
        EXPECT_TRUE(approx_equal(mapping_to_matrix(*g.mapping), g.matrix, Tolerance(1e-9)));
    }
    for (const auto &g : involutory_gates()) {
        SCOPED_TRACE(g.name);
        EXPECT_TRUE(approx_equal(
            mat_mul(g.matrix, g.matrix), ComplexMatrix::identity(g.matrix.n_rows()), Tolerance(1e-9)));
        EXPECT_TRUE(is_hermitian(g.matrix));
    }
}

TEST(gate_by_name, lookup) {
    EXPECT_EQ(gate_by_name("H").matrix, hadamard().matrix);
    EXPECT_EQ(gate_by_name("CNOT").arity, 2u);
    EXPECT_EQ(gate_by_name("R_phi", 0.5).parameter, 0.5);
    EXPECT_THROW(gate_by_name("R_phi"), std::invalid_argument);
    EXPECT_THROW(gate_by_name("X", 1.0), std::invalid_argument);
    EXPECT_THROW(gate_by_name("Y"), std::invalid_argument);
}
