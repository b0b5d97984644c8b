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

#ifndef FQSE_TOOLS_CLI_H
#define FQSE_TOOLS_CLI_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "fqse/checker.h"
#include "fqse/circuit.h"

namespace fqse::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Format { kText, kJson };

struct CliConfig {
    enum class Subcommand { kCheck, kRun, kDeutsch };

    Subcommand subcommand = Subcommand::kCheck;
    std::optional<std::string> input_path;
    std::optional<std::string> oracle;
    std::uint64_t shots = 1;
    std::uint64_t seed = 42;
    Format format = Format::kText;
};

/// {"subject", "checks": [{"rule", "description", "status", "detail"}], "overall"}
std::string check_report_json(const CheckReport &report);

/// {"outcomes": {bits: count}, "amplitudes": [[re, im], ...], "seed", "shots"}.
/// Amplitudes are the shot-0 state before its first measurement, rounded to
/// 12 significant digits.
std::string run_report_json(const RunReport &report, std::uint64_t seed, std::uint64_t shots);

/// {"verdict", "bit"}
std::string deutsch_json(const DeutschVerdict &verdict);

/// Exit 0 if every rule passes, 1 on any failure, 2 on IO or syntax errors.
int cmd_check(const std::string &path, Format format, std::ostream &out, std::ostream &err);

/// Parses, checks, compiles and runs `shots` executions with seeds derived
/// from `seed`. Exit 1 when the program fails its checks, 2 on usage/IO/syntax errors.
int cmd_run(
    const std::string &path, std::uint64_t shots, std::uint64_t seed, Format format, std::ostream &out,
    std::ostream &err);

/// Prints e.g. "CONSTANT (bit 0)". Exit 2 for an unknown oracle keyword.
int cmd_deutsch(const std::string &oracle, std::uint64_t seed, Format format, std::ostream &out, std::ostream &err);

int dispatch(const CliConfig &config, std::ostream &out, std::ostream &err);

/// Full command line entry point; argv[0] is the program name.
int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace fqse::cli

#endif
