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

#include "fqse/checker.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "fqse/circuit.h"

namespace fqse {

namespace {

constexpr double kNormEps = 1e-9;

const char *const kObs1 = "complex square matrix of order n";
const char *const kObs2 = "equal to its own conjugate transpose";
const char *const kObs3 = "real eigenvalues (real diagonal entries; closed-form spectrum for 2x2)";
const char *const kGateU = "matrix is unitary (reversible)";
const char *const kGateM = "basis mapping reproduces the matrix";
const char *const kGateInj = "distinct mapping inputs have distinct outputs";
const char *const kProgScope = "names declared before use, allocated once";
const char *const kProgNorm = "state norm is 1 after every instruction";

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

CheckEntry entry(const char *id, const char *description, bool ok, std::string detail) {
    return CheckEntry{id, description, ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail)};
}

double max_deviation(const ComplexMatrix &a, const ComplexMatrix &b) {
    double worst = 0;
    for (std::size_t k = 0; k < a.entries().size(); k++) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

}  // namespace

std::string_view status_name(CheckStatus s) {
    return s == CheckStatus::kPass ? "PASS" : "FAIL";
}

CheckStatus CheckReport::overall() const {
    for (const auto &c : checks) {
        if (c.status == CheckStatus::kFail) {
            return CheckStatus::kFail;
        }
    }
    return CheckStatus::kPass;
}

const CheckEntry *CheckReport::find(std::string_view rule_id) const {
    for (const auto &c : checks) {
        if (c.rule_id == rule_id) {
            return &c;
        }
    }
    return nullptr;
}

CheckReport check_observable(const ComplexMatrix &m, Tolerance tol, std::string subject) {
    CheckReport report{std::move(subject), {}};
    if (!m.is_square()) {
        report.checks.push_back(entry("OBS-1", kObs1, false, "shape " + m.shape_string() + " is not square"));
        report.checks.push_back(entry("OBS-2", kObs2, false, "skipped: not square"));
        report.checks.push_back(entry("OBS-3", kObs3, false, "skipped: not square"));
        return report;
    }
    report.checks.push_back(entry("OBS-1", kObs1, true, "order " + std::to_string(m.n_rows())));

    double dev = max_deviation(m, conjugate_transpose(m));
    bool hermitian = dev <= tol.eps();
    report.checks.push_back(entry("OBS-2", kObs2, hermitian, "max |m - m^dagger| = " + fmt_double(dev)));

    double worst_diag = 0;
    for (std::size_t j = 0; j < m.n_rows(); j++) {
        worst_diag = std::max(worst_diag, std::abs(m(j, j).imag()));
    }
    bool diag_real = worst_diag <= tol.eps();
    std::string detail = "max |Im c_jj| = " + fmt_double(worst_diag);
    bool spectrum_real;
    if (m.n_rows() == 2) {
        auto [l1, l2] = eigenvalues_2x2(m);
        double worst_eig = std::max(std::abs(l1.imag()), std::abs(l2.imag()));
        spectrum_real = worst_eig <= tol.eps();
        detail += "; max |Im lambda| = " + fmt_double(worst_eig);
    } else if (m.n_rows() == 1) {
        spectrum_real = diag_real;
        detail += "; 1x1 eigenvalue is the entry itself";
    } else {
        spectrum_real = hermitian;
        detail += hermitian ? "; real spectrum implied by OBS-2" : "; real spectrum not established (not Hermitian)";
    }
    detail += "; lambda = c_jj is not required outside the eigenbasis";
    report.checks.push_back(entry("OBS-3", kObs3, diag_real && spectrum_real, detail));
    return report;
}

CheckReport check_gate(const Gate &g, Tolerance tol) {
    CheckReport report{g.name, {}};

    const std::size_t dim = std::size_t{1} << g.arity;
    if (g.matrix.n_rows() != dim || g.matrix.n_cols() != dim) {
        report.checks.push_back(entry(
            "GATE-U", kGateU, false,
            "matrix is " + g.matrix.shape_string() + ", arity " + std::to_string(g.arity) + " needs " +
                std::to_string(dim) + "x" + std::to_string(dim)));
    } else {
        auto adj = conjugate_transpose(g.matrix);
        double dev = std::max(
            max_deviation(mat_mul(g.matrix, adj), ComplexMatrix::identity(dim)),
            max_deviation(mat_mul(adj, g.matrix), ComplexMatrix::identity(dim)));
        report.checks.push_back(
            entry("GATE-U", kGateU, is_unitary(g.matrix, tol), "max |U U^dagger - I| = " + fmt_double(dev)));
    }

    if (!g.mapping) {
        report.checks.push_back(entry("GATE-M", kGateM, true, "no basis mapping attached"));
        report.checks.push_back(entry("GATE-INJ", kGateInj, true, "no basis mapping attached"));
        return report;
    }

    const auto &pairs = g.mapping->pairs();
    try {
        auto induced = mapping_to_matrix(*g.mapping);
        bool same_shape = induced.n_rows() == g.matrix.n_rows() && induced.n_cols() == g.matrix.n_cols();
        bool ok = same_shape && approx_equal(induced, g.matrix, tol);
        report.checks.push_back(entry(
            "GATE-M", kGateM, ok,
            same_shape ? "max |mapping - matrix| = " + fmt_double(max_deviation(induced, g.matrix))
                       : "mapping arity does not match the matrix"));
    } catch (const MappingError &e) {
        report.checks.push_back(entry("GATE-M", kGateM, false, e.what()));
    }

    std::string collision;
    for (std::size_t k = 0; k < pairs.size() && collision.empty(); k++) {
        auto out_k = ComplexMatrix::column(pairs[k].output.amplitudes());
        for (std::size_t j = 0; j < k; j++) {
            if (approx_equal(ComplexMatrix::column(pairs[j].output.amplitudes()), out_k, tol)) {
                collision = pairs[j].input.to_string() + " and " + pairs[k].input.to_string() + " both map to " +
                            pairs[k].output.to_string();
                break;
            }
        }
    }
    report.checks.push_back(entry(
        "GATE-INJ", kGateInj, collision.empty(),
        collision.empty() ? std::to_string(pairs.size()) + " pairs, all outputs distinct" : collision));
    return report;
}

CheckReport check_program(const Program &p, std::string subject, std::uint64_t seed) {
    CheckReport report{std::move(subject), {}};

    auto violations = scope_violations(p);
    std::string scope_detail;
    for (const auto &v : violations) {
        if (!scope_detail.empty()) {
            scope_detail += "; ";
        }
        scope_detail += std::to_string(v.loc.line) + ":" + std::to_string(v.loc.column) + ": " + v.message;
    }
    if (violations.empty()) {
        scope_detail = std::to_string(p.statements.size()) + " statements, all names resolved";
    }
    report.checks.push_back(entry("PROG-SCOPE", kProgScope, violations.empty(), scope_detail));

    if (!violations.empty()) {
        report.checks.push_back(entry("PROG-NORM", kProgNorm, false, "skipped: scope violations"));
        return report;
    }
    double worst = 0;
    std::size_t steps = 0;
    try {
        auto compiled = compile(p);
        run_circuit(compiled.circuit, compiled.oracles, seed, [&](std::size_t, const StateVector &s) {
            worst = std::max(worst, std::abs(s.norm_squared() - 1.0));
            steps++;
        });
    } catch (const std::exception &e) {
        report.checks.push_back(entry("PROG-NORM", kProgNorm, false, e.what()));
        return report;
    }
    report.checks.push_back(entry(
        "PROG-NORM", kProgNorm, worst <= kNormEps,
        std::to_string(steps) + " instructions, max |norm^2 - 1| = " + fmt_double(worst)));
    return report;
}

CheckReport check_program_gates(const Program &p, Tolerance tol, std::string subject) {
    CheckReport report{std::move(subject), {}};
    CompiledProgram compiled;
    try {
        compiled = compile(p);
    } catch (const CompileError &) {
        return report;
    }
    std::vector<Gate> gates;
    std::set<std::string> seen;
    for (const auto &inst : compiled.circuit.instructions) {
        std::optional<Gate> g;
        if (const auto *a = std::get_if<Apply>(&inst)) {
            g = gate_by_name(a->gate, a->parameter);
        } else if (const auto *o = std::get_if<ApplyOracle>(&inst)) {
            g = oracle_gate(compiled.oracles.at(o->oracle));
        }
        if (!g) {
            continue;
        }
        std::string key = g->name + (g->parameter ? "(" + format_angle(*g->parameter) + ")" : "");
        if (seen.insert(key).second) {
            for (auto c : check_gate(*g, tol).checks) {
                c.detail = key + ": " + c.detail;
                report.checks.push_back(std::move(c));
            }
        }
    }
    return report;
}

}  // namespace fqse
