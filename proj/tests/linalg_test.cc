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

#include "fqse/linalg.h"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"

using namespace fqse;

namespace {

const Complex i1{0, 1};
const double s = 1.0 / std::sqrt(2.0);

ComplexMatrix X() {
    return ComplexMatrix::from_rows({{0, 1}, {1, 0}});
}

ComplexMatrix Z() {
    return ComplexMatrix::from_rows({{1, 0}, {0, -1}});
}

ComplexMatrix H() {
    return ComplexMatrix::from_rows({{s, s}, {s, -s}});
}

ComplexMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> d;
    std::vector<Complex> e(rows * cols);
    for (auto &z : e) {
        z = {d(rng), d(rng)};
    }
    return ComplexMatrix(rows, cols, std::move(e));
}

ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b) {
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (std::size_t k = 0; k < e.size(); k++) {
        e[k] += b.entries()[k];
    }
    return ComplexMatrix(a.n_rows(), a.n_cols(), std::move(e));
}

}  // namespace

TEST(Tolerance, range) {
    EXPECT_NO_THROW(Tolerance(1e-9));
    EXPECT_THROW(Tolerance(0), std::invalid_argument);
    EXPECT_THROW(Tolerance(1), std::invalid_argument);
    EXPECT_THROW(Tolerance(-1e-3), std::invalid_argument);
    EXPECT_THROW(Tolerance(std::nan("")), std::invalid_argument);
    EXPECT_EQ(default_tolerance().eps(), 1e-9);
}

TEST(ComplexMatrix, construction_invariants) {
    EXPECT_THROW(ComplexMatrix(2, 2, {1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(ComplexMatrix(0, 2, {}), std::invalid_argument);
    EXPECT_THROW(ComplexMatrix(1, 1, {Complex{std::numeric_limits<double>::infinity(), 0}}), std::invalid_argument);
    EXPECT_THROW(ComplexMatrix(1, 1, {Complex{0, std::nan("")}}), std::invalid_argument);
    EXPECT_THROW(ComplexMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
    auto m = ComplexMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
    EXPECT_EQ(m.n_rows(), 2u);
    EXPECT_EQ(m.n_cols(), 3u);
    EXPECT_EQ(m(1, 2), Complex(6));
    EXPECT_EQ(m.shape_string(), "2x3");
}

TEST(conjugate_transpose, examples) {
    auto y = ComplexMatrix::from_rows({{0, -i1}, {i1, 0}});
    EXPECT_EQ(conjugate_transpose(y), y);

    auto row = ComplexMatrix::from_rows({{1, Complex(2, 1)}});
    auto col = conjugate_transpose(row);
    EXPECT_EQ(col.n_rows(), 2u);
    EXPECT_EQ(col.n_cols(), 1u);
    EXPECT_EQ(col(0, 0), Complex(1));
    EXPECT_EQ(col(1, 0), Complex(2, -1));

    EXPECT_EQ(conjugate_transpose(ComplexMatrix::identity(2)), ComplexMatrix::identity(2));
}

TEST(conjugate_transpose, involution_is_bit_exact) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; trial++) {
        auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
        EXPECT_EQ(conjugate_transpose(conjugate_transpose(m)), m);
    }
}

TEST(mat_mul, examples) {
    EXPECT_EQ(mat_mul(ComplexMatrix::identity(2), X()), X());
    EXPECT_EQ(mat_mul(X(), X()), ComplexMatrix::identity(2));
    auto inner = mat_mul(ComplexMatrix::from_rows({{1, 2}}), ComplexMatrix::from_rows({{3}, {Complex(0, 4)}}));
    EXPECT_EQ(inner.n_rows(), 1u);
    EXPECT_EQ(inner.n_cols(), 1u);
    EXPECT_EQ(inner(0, 0), Complex(3, 8));
}

TEST(mat_mul, dimension_mismatch_names_both_shapes) {
    try {
        mat_mul(ComplexMatrix::zeros(2, 3), ComplexMatrix::zeros(2, 3));
        FAIL() << "expected an exception";
    } catch (const std::invalid_argument &e) {
        std::string what = e.what();
        EXPECT_NE(what.find("2x3 times 2x3"), std::string::npos) << what;
    }
}

TEST(mat_mul, identity_is_exact) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t r = 1 + rng() % 5;
        std::size_t c = 1 + rng() % 5;
        auto m = random_matrix(rng, r, c);
        EXPECT_EQ(mat_mul(ComplexMatrix::identity(r), m), m);
        EXPECT_EQ(mat_mul(m, ComplexMatrix::identity(c)), m);
    }
}

TEST(kron, examples) {
    EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
    auto k = kron(X(), Z());
    EXPECT_EQ(k.n_rows(), 4u);
    EXPECT_EQ(k.n_cols(), 4u);
    // Block layout: X (x) Z = [[0, Z], [Z, 0]].
    EXPECT_EQ(k(0, 2), Complex(1));
    EXPECT_EQ(k(1, 3), Complex(-1));
    EXPECT_EQ(k(2, 0), Complex(1));
    EXPECT_EQ(k(0, 0), Complex(0));

    auto ket0 = ComplexMatrix::from_rows({{1}, {0}});
    auto ket1 = ComplexMatrix::from_rows({{0}, {1}});
    EXPECT_EQ(kron(ket0, ket1), ComplexMatrix::from_rows({{0}, {1}, {0}, {0}}));
}

TEST(kron, associative) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; trial++) {
        auto a = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
        auto b = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
        auto c = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
        EXPECT_TRUE(approx_equal(kron(kron(a, b), c), kron(a, kron(b, c)), Tolerance(1e-12)));
    }
}

TEST(approx_equal, examples) {
    EXPECT_TRUE(approx_equal(X(), X(), Tolerance(1e-9)));
    EXPECT_FALSE(approx_equal(X(), Z(), Tolerance(1e-9)));
    auto perturbed = ComplexMatrix::from_rows({{1 + 1e-12, 0}, {0, 1}});
    EXPECT_TRUE(approx_equal(ComplexMatrix::identity(2), perturbed, Tolerance(1e-9)));
    EXPECT_FALSE(approx_equal(ComplexMatrix::identity(2), ComplexMatrix::identity(3)));
    EXPECT_FALSE(approx_equal(ComplexMatrix::zeros(1, 2), ComplexMatrix::zeros(2, 1)));
}

TEST(is_hermitian, examples) {
    EXPECT_TRUE(is_hermitian(X()));
    EXPECT_FALSE(is_hermitian(ComplexMatrix::from_rows({{1, 0}, {0, i1}})));
    EXPECT_TRUE(is_hermitian(ComplexMatrix::from_rows({{2, Complex(3, -1)}, {Complex(3, 1), 5}})));
    EXPECT_FALSE(is_hermitian(ComplexMatrix::zeros(2, 3)));
}

TEST(is_hermitian, symmetrized_matrices) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t n = 1 + rng() % 6;
        auto m = random_matrix(rng, n, n);
        EXPECT_TRUE(is_hermitian(add(m, conjugate_transpose(m)), Tolerance(1e-9)));
    }
}

TEST(is_unitary, examples) {
    EXPECT_TRUE(is_unitary(H()));
    EXPECT_FALSE(is_unitary(ComplexMatrix::from_rows({{1, 1}, {0, 1}})));
    EXPECT_TRUE(is_unitary(ComplexMatrix::identity(4)));
    EXPECT_FALSE(is_unitary(ComplexMatrix::zeros(2, 4)));
    // Isometry in one direction only would still need both products.
    EXPECT_FALSE(is_unitary(ComplexMatrix::from_rows({{2, 0}, {0, 0.5}})));
}

TEST(eigenvalues_2x2, examples) {
    auto [a, b] = eigenvalues_2x2(Z());
    EXPECT_EQ(a, Complex(1));
    EXPECT_EQ(b, Complex(-1));

    auto [c, d] = eigenvalues_2x2(ComplexMatrix::identity(2));
    EXPECT_EQ(c, Complex(1));
    EXPECT_EQ(d, Complex(1));

    auto [e, f] = eigenvalues_2x2(H());
    EXPECT_NEAR(std::abs(e - Complex(1)), 0, 1e-12);
    EXPECT_NEAR(std::abs(f - Complex(-1)), 0, 1e-12);

    EXPECT_THROW(eigenvalues_2x2(ComplexMatrix::identity(3)), std::invalid_argument);
    EXPECT_THROW(eigenvalues_2x2(ComplexMatrix::zeros(2, 1)), std::invalid_argument);
}

TEST(eigenvalues_2x2, hermitian_spectrum_is_real) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; trial++) {
        auto m = random_matrix(rng, 2, 2);
        auto h = add(m, conjugate_transpose(m));
        ASSERT_TRUE(is_hermitian(h, Tolerance(1e-9)));
        auto [a, b] = eigenvalues_2x2(h);
        EXPECT_LE(std::abs(a.imag()), 1e-9);
        EXPECT_LE(std::abs(b.imag()), 1e-9);
        // Roots of the characteristic polynomial: sum is the trace, product the determinant.
        EXPECT_NEAR(std::abs(a + b - (h(0, 0) + h(1, 1))), 0, 1e-9);
        EXPECT_NEAR(std::abs(a * b - (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0))), 0, 1e-9);
    }
}
