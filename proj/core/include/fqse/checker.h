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

#ifndef FQSE_CHECKER_H
#define FQSE_CHECKER_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fqse/gateset.h"
#include "fqse/linalg.h"
#include "fqse/speclang.h"

namespace fqse {

enum class CheckStatus { kPass, kFail };
std::string_view status_name(CheckStatus s);

struct CheckEntry {
    /// One of OBS-1, OBS-2, OBS-3, GATE-U, GATE-M, GATE-INJ, PROG-SCOPE, PROG-NORM.
    std::string rule_id;
    std::string description;
    CheckStatus status;
    std::string detail;

    bool operator==(const CheckEntry &) const = default;
};

/// Checks never throw; every finding is an entry.
struct CheckReport {
    std::string subject;
    std::vector<CheckEntry> checks;

    /// kPass iff every entry passed (vacuously for no entries).
    CheckStatus overall() const;
    const CheckEntry *find(std::string_view rule_id) const;
    bool operator==(const CheckReport &) const = default;
};

/// Observable axioms:
///   OBS-1  complex square matrix
///   OBS-2  equal to its own conjugate transpose
///   OBS-3  real diagonal, and for 2x2 both closed-form eigenvalues real
/// For larger matrices OBS-3's eigenvalue clause follows from OBS-2.
CheckReport check_observable(const ComplexMatrix &m, Tolerance tol = default_tolerance(), std::string subject = "matrix");

/// GATE-U unitary matrix of size 2^arity; GATE-M mapping reproduces the
/// matrix; GATE-INJ distinct mapping inputs have distinct outputs.
CheckReport check_gate(const Gate &g, Tolerance tol = default_tolerance());

/// PROG-SCOPE names declared before use; PROG-NORM the compiled circuit keeps
/// unit norm (within 1e-9) after every instruction when simulated with `seed`.
CheckReport check_program(const Program &p, std::string subject = "program", std::uint64_t seed = 0);

/// check_gate for every distinct gate (including oracle gates) a well-scoped
/// program applies, in order of first use. Details are prefixed with the gate name.
CheckReport check_program_gates(const Program &p, Tolerance tol = default_tolerance(), std::string subject = "program");

}  // namespace fqse

#endif
