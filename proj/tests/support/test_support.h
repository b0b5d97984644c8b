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

// Test-only oracles and generators. Nothing here calls apply_gate, so the
// brute-force paths stay independent of the simulator they check.

#ifndef FQSE_TESTS_TEST_SUPPORT_H
#define FQSE_TESTS_TEST_SUPPORT_H

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fqse/circuit.h"
#include "fqse/gateset.h"
#include "fqse/linalg.h"
#include "fqse/speclang.h"
#include "fqse/state.h"

namespace fqse::testing {

inline ComplexMatrix as_column(const StateVector &s) {
    return ComplexMatrix::column(s.amplitudes());
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

/// Permutation matrix taking the register's basis ordering to one where the
/// target qubits come first (in target order) followed by the rest ascending.
inline ComplexMatrix target_first_permutation(std::size_t n_qubits, const std::vector<std::size_t> &targets) {
    std::vector<std::size_t> order = targets;
    for (std::size_t q = 0; q < n_qubits; q++) {
        if (std::find(targets.begin(), targets.end(), q) == targets.end()) {
            order.push_back(q);
        }
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<Complex> entries(dim * dim);
    for (std::size_t i = 0; i < dim; i++) {
        std::size_t j = 0;
        for (std::size_t pos = 0; pos < n_qubits; pos++) {
            std::size_t bit = (i >> (n_qubits - 1 - order[pos])) & 1;
            j |= bit << (n_qubits - 1 - pos);
        }
        entries[j * dim + i] = 1.0;
    }
    return ComplexMatrix(dim, dim, std::move(entries));
}

/// P^dagger (G kron I) P: the gate expanded to the full register with Kronecker products.
inline ComplexMatrix expand_gate(const Gate &g, std::size_t n_qubits, const std::vector<std::size_t> &targets) {
    ComplexMatrix lifted = g.matrix;
    if (n_qubits > targets.size()) {
        lifted = kron(g.matrix, ComplexMatrix::identity(std::size_t{1} << (n_qubits - targets.size())));
    }
    auto p = target_first_permutation(n_qubits, targets);
    return mat_mul(conjugate_transpose(p), mat_mul(lifted, p));
}

/// Every ordered selection of `k` distinct qubits out of n.
inline std::vector<std::vector<std::size_t>> target_assignments(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t a = 0; a < n; a++) {
        if (k == 1) {
            out.push_back({a});
            continue;
        }
        for (std::size_t b = 0; b < n; b++) {
            if (b != a) {
                out.push_back({a, b});
            }
        }
    }
    return out;
}

/// Reduced density matrix of one qubit.
inline ComplexMatrix reduced_density(const StateVector &s, std::size_t qubit) {
    const std::size_t n = s.n_qubits();
    const std::size_t mask = std::size_t{1} << (n - 1 - qubit);
    std::vector<Complex> rho(4);
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        for (std::size_t j = 0; j < amps.size(); j++) {
            if ((i & ~mask) != (j & ~mask)) {
                continue;
            }
            std::size_t a = (i & mask) ? 1 : 0;
            std::size_t b = (j & mask) ? 1 : 0;
            rho[a * 2 + b] += amps[i] * std::conj(amps[j]);
        }
    }
    return ComplexMatrix(2, 2, std::move(rho));
}

inline double purity(const ComplexMatrix &rho) {
    auto sq = mat_mul(rho, rho);
    return (sq(0, 0) + sq(1, 1)).real();
}

/// Random well-scoped Program over at most `max_qubits` qubits with at most
/// `max_statements` statements. Angles are arbitrary doubles.
inline Program random_program(std::mt19937_64 &rng, std::size_t max_qubits = 4, std::size_t max_statements = 20) {
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    Program p;
    std::size_t n_oracles = pick(3);
    for (std::size_t k = 0; k < n_oracles; k++) {
        p.oracle_decls.push_back({Name{"f" + std::to_string(k), {}}, kAllOracles[pick(4)], {}, 0});
    }
    std::vector<std::string> qubits;
    std::size_t length = pick(max_statements + 1);
    const InitialKet kets[] = {
        InitialKet::kZero,  InitialKet::kOne,          InitialKet::kPlus,
        InitialKet::kMinus, InitialKet::kHadamardZero, InitialKet::kHadamardOne};
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (std::size_t s = 0; s < length; s++) {
        std::size_t choice = pick(10);
        if (qubits.empty() || (choice == 0 && qubits.size() < max_qubits)) {
            std::string name = (pick(2) ? "q" : "reg_") + std::to_string(qubits.size());
            qubits.push_back(name);
            p.statements.push_back(AllocStmt{Name{name, {}}, kets[pick(6)], {}});
        } else if (choice <= 5) {
            const GateSymbol gates[] = {GateSymbol::kI, GateSymbol::kX, GateSymbol::kZ, GateSymbol::kH, GateSymbol::kR};
            GateSymbol g = gates[pick(5)];
            std::optional<double> a;
            if (g == GateSymbol::kR) {
                switch (pick(4)) {
                    case 0:
                        a = std::numbers::pi / 2;
                        break;
                    case 1:
                        a = -std::numbers::pi;
                        break;
                    default:
                        a = angle(rng);
                }
            }
            p.statements.push_back(GateStmt{g, a, Name{qubits[pick(qubits.size())], {}}, {}});
        } else if (choice <= 7 && qubits.size() >= 2 && n_oracles > 0) {
            std::size_t c = pick(qubits.size());
            std::size_t t = (c + 1 + pick(qubits.size() - 1)) % qubits.size();
            p.statements.push_back(OracleStmt{
                Name{"f" + std::to_string(pick(n_oracles)), {}}, Name{qubits[c], {}}, Name{qubits[t], {}}, {}});
        } else {
            p.statements.push_back(MeasureStmt{Name{qubits[pick(qubits.size())], {}}, {}});
        }
    }
    return p;
}

/// Renders a program in a deliberately non-canonical but valid spelling:
/// comments, blank lines, tabs, CRLF, decimal angles.
inline std::string render_noisy(const Program &p, std::mt19937_64 &rng) {
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    const bool crlf = pick(4) == 0;
    auto sp = [&]() { return std::string(pick(3) == 0 ? "\t " : pick(2) ? " " : "  "); };
    auto eol = [&]() {
        std::string e;
        if (pick(5) == 0) {
            e += sp() + "-- note " + std::to_string(pick(100));
        }
        e += crlf ? "\r\n" : "\n";
        if (pick(6) == 0) {
            e += crlf ? "\r\n" : "\n";
        }
        return e;
    };
    std::string out;
    if (pick(3) == 0) {
        out += "-- generated" + std::string(crlf ? "\r\n" : "\n");
    }
    for (const auto &d : p.oracle_decls) {
        out += "oracle" + sp() + d.name.text + sp() + "=" + sp() + std::string(oracle_keyword(d.fn)) + eol();
    }
    for (const auto &stmt : p.statements) {
        if (pick(4) == 0) {
            out += sp();
        }
        if (const auto *s = std::get_if<AllocStmt>(&stmt)) {
            out += "qubit" + sp() + s->qubit.text + sp() + "=" + sp() + std::string(ket_spelling(s->ket));
        } else if (const auto *s = std::get_if<GateStmt>(&stmt)) {
            if (s->gate == GateSymbol::kR) {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.9g", *s->angle);
                out += "R(" + std::string(buf) + ")" + sp() + s->qubit.text;
            } else {
                out += std::string(1, gate_name(s->gate)[0]) + sp() + s->qubit.text;
            }
        } else if (const auto *s = std::get_if<OracleStmt>(&stmt)) {
            out += "N[" + s->oracle.text + "]" + sp() + s->control.text + sp() + s->target.text;
        } else if (const auto *s = std::get_if<MeasureStmt>(&stmt)) {
            out += "measure" + sp() + s->qubit.text;
        }
        out += eol();
    }
    return out;
}

/// Applies 1-3 random character-level edits.
inline std::string mutate(std::string src, std::mt19937_64 &rng) {
    static const std::string alphabet = "qubitoraclemeasureHXZRNI|<>+-=()[]01234.epi/ \n\t\r#@$\x80\xff\xc3";
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    std::size_t edits = 1 + pick(3);
    for (std::size_t e = 0; e < edits; e++) {
        std::size_t op = pick(4);
        std::size_t at = src.empty() ? 0 : pick(src.size() + 1);
        char c = alphabet[pick(alphabet.size())];
        if (op == 0 || src.empty()) {
            src.insert(src.begin() + static_cast<std::ptrdiff_t>(at), c);
        } else if (op == 1 && at < src.size()) {
            src.erase(at, 1);
        } else if (op == 2 && at < src.size()) {
            src[at] = c;
        } else if (!src.empty()) {
            std::size_t from = pick(src.size());
            std::size_t len = 1 + pick(std::min<std::size_t>(6, src.size() - from));
            src.insert(at, src.substr(from, len));
        }
    }
    return src;
}

/// Whether (line, column) lies inside the source: lines split on LF, columns
/// may point one past the end of a line.
inline bool location_in_source(const std::string &src, std::size_t line, std::size_t column) {
    std::vector<std::size_t> lengths{0};
    for (char c : src) {
        if (c == '\n') {
            lengths.push_back(0);
        } else {
            lengths.back()++;
        }
    }
    return line >= 1 && line <= lengths.size() && column >= 1 && column <= lengths[line - 1] + 1;
}

inline const char *kDeutschSource =
    "oracle f = const0\n"
    "qubit x = H|0>\n"
    "qubit y = H|1>\n"
    "N[f] x y\n"
    "H x\n"
    "measure x\n";

inline std::string deutsch_source(OracleFn f) {
    std::string s = kDeutschSource;
    s.replace(s.find("const0"), 6, oracle_keyword(f));
    return s;
}

}  // namespace fqse::testing

#endif
