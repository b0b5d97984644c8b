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

#ifndef FQSE_LINALG_H
#define FQSE_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fqse {

using Complex = std::complex<double>;

/// Comparison threshold for floating point equality. Always in (0, 1).
class Tolerance {
   public:
    explicit Tolerance(double eps);

    double eps() const noexcept {
        return eps_;
    }

   private:
    double eps_;
};

inline constexpr double kDefaultEps = 1e-9;

/// Returns Tolerance(kDefaultEps).
Tolerance default_tolerance();

/// Dense, row-major, immutable complex matrix. All entries are finite.
class ComplexMatrix {
   public:
    /// Throws std::invalid_argument if a dimension is zero, the entry count
    /// does not match, or any entry is NaN/infinite.
    ComplexMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<Complex> entries);

    /// Row-list literal, e.g. ComplexMatrix::from_rows({{0, 1}, {1, 0}}).
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t n_rows, std::size_t n_cols);
    /// n x 1 matrix holding the given amplitudes.
    static ComplexMatrix column(std::span<const Complex> values);

    std::size_t n_rows() const noexcept {
        return n_rows_;
    }
    std::size_t n_cols() const noexcept {
        return n_cols_;
    }
    bool is_square() const noexcept {
        return n_rows_ == n_cols_;
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * n_cols_ + col];
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    /// "RxC", used in error messages.
    std::string shape_string() const;

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t n_rows_;
    std::size_t n_cols_;
    std::vector<Complex> entries_;
};

ComplexMatrix conjugate_transpose(const ComplexMatrix &m);

/// Throws std::invalid_argument naming both shapes when a.n_cols != b.n_rows.
ComplexMatrix mat_mul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product: result[i*p + k][j*q + l] = a[i][j] * b[k][l] for p x q b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Same shape and max entrywise |a - b| <= tol.eps().
bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, Tolerance tol = default_tolerance());

bool is_hermitian(const ComplexMatrix &m, Tolerance tol = default_tolerance());

/// Checks both m*m^dagger and m^dagger*m against the identity.
bool is_unitary(const ComplexMatrix &m, Tolerance tol = default_tolerance());

/// Roots of l^2 - tr(m) l + det(m) via the quadratic formula. The root taken
/// with +sqrt(discriminant) comes first. Throws std::invalid_argument unless m is 2x2.
std::pair<Complex, Complex> eigenvalues_2x2(const ComplexMatrix &m);

}  // namespace fqse

#endif
