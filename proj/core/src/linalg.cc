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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fqse {

Tolerance::Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("Tolerance must lie in (0, 1), got " + std::to_string(eps));
    }
}

Tolerance default_tolerance() {
    return Tolerance(kDefaultEps);
}

ComplexMatrix::ComplexMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<Complex> entries)
    : n_rows_(n_rows), n_cols_(n_cols), entries_(std::move(entries)) {
    if (n_rows == 0 || n_cols == 0) {
        throw std::invalid_argument("ComplexMatrix dimensions must be positive");
    }
    if (entries_.size() != n_rows * n_cols) {
        throw std::invalid_argument(
            "ComplexMatrix " + shape_string() + " needs " + std::to_string(n_rows * n_cols) + " entries, got " +
            std::to_string(entries_.size()));
    }
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("ComplexMatrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    if (rows.size() == 0) {
        throw std::invalid_argument("from_rows needs at least one row");
    }
    std::size_t n_cols = rows.begin()->size();
    std::vector<Complex> entries;
    entries.reserve(rows.size() * n_cols);
    for (const auto &row : rows) {
        if (row.size() != n_cols) {
            throw std::invalid_argument("from_rows: ragged rows");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(rows.size(), n_cols, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    std::vector<Complex> entries(n * n);
    for (std::size_t k = 0; k < n; k++) {
        entries[k * n + k] = 1.0;
    }
    return ComplexMatrix(n, n, std::move(entries));
}

ComplexMatrix ComplexMatrix::zeros(std::size_t n_rows, std::size_t n_cols) {
    return ComplexMatrix(n_rows, n_cols, std::vector<Complex>(n_rows * n_cols));
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
    return ComplexMatrix(values.size(), 1, std::vector<Complex>(values.begin(), values.end()));
}

std::string ComplexMatrix::shape_string() const {
    return std::to_string(n_rows_) + "x" + std::to_string(n_cols_);
}

ComplexMatrix conjugate_transpose(const ComplexMatrix &m) {
    std::vector<Complex> out(m.n_rows() * m.n_cols());
    for (std::size_t i = 0; i < m.n_rows(); i++) {
        for (std::size_t j = 0; j < m.n_cols(); j++) {
            out[j * m.n_rows() + i] = std::conj(m(i, j));
        }
    }
    return ComplexMatrix(m.n_cols(), m.n_rows(), std::move(out));
}

ComplexMatrix mat_mul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.n_cols() != b.n_rows()) {
        throw std::invalid_argument(
            "mat_mul dimension mismatch: " + a.shape_string() + " times " + b.shape_string());
    }
    std::vector<Complex> out(a.n_rows() * b.n_cols());
    for (std::size_t i = 0; i < a.n_rows(); i++) {
        for (std::size_t k = 0; k < a.n_cols(); k++) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.n_cols(); j++) {
                out[i * b.n_cols() + j] += aik * b(k, j);
            }
        }
    }
    return ComplexMatrix(a.n_rows(), b.n_cols(), std::move(out));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t p = b.n_rows();
    const std::size_t q = b.n_cols();
    const std::size_t rows = a.n_rows() * p;
    const std::size_t cols = a.n_cols() * q;
    std::vector<Complex> out(rows * cols);
    for (std::size_t i = 0; i < a.n_rows(); i++) {
        for (std::size_t j = 0; j < a.n_cols(); j++) {
            for (std::size_t k = 0; k < p; k++) {
                for (std::size_t l = 0; l < q; l++) {
                    out[(i * p + k) * cols + (j * q + l)] = a(i, j) * b(k, l);
                }
            }
        }
    }
    return ComplexMatrix(rows, cols, std::move(out));
}

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, Tolerance tol) {
    if (a.n_rows() != b.n_rows() || a.n_cols() != b.n_cols()) {
        return false;
    }
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); k++) {
        if (std::abs(ea[k] - eb[k]) > tol.eps()) {
            return false;
        }
    }
    return true;
}

bool is_hermitian(const ComplexMatrix &m, Tolerance tol) {
    return m.is_square() && approx_equal(m, conjugate_transpose(m), tol);
}

bool is_unitary(const ComplexMatrix &m, Tolerance tol) {
    if (!m.is_square()) {
        return false;
    }
    auto id = ComplexMatrix::identity(m.n_rows());
    auto adj = conjugate_transpose(m);
    return approx_equal(mat_mul(m, adj), id, tol) && approx_equal(mat_mul(adj, m), id, tol);
}

std::pair<Complex, Complex> eigenvalues_2x2(const ComplexMatrix &m) {
    if (m.n_rows() != 2 || m.n_cols() != 2) {
        throw std::invalid_argument("eigenvalues_2x2 needs a 2x2 matrix, got " + m.shape_string());
    }
    const Complex trace = m(0, 0) + m(1, 1);
    const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const Complex root = std::sqrt(trace * trace - 4.0 * det);
    return {(trace + root) / 2.0, (trace - root) / 2.0};
}

}  // namespace fqse
