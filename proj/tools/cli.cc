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

#include "cli.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "fqse/speclang.h"
#include "json.hpp"

namespace fqse::cli {

namespace {

using Json = nlohmann::ordered_json;

double round_12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0 ? 0.0 : r;
}

std::optional<std::string> read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Reads and syntax-parses a source file, reporting failures to err.
std::optional<Program> load_program(const std::string &path, std::ostream &err) {
    auto source = read_file(path);
    if (!source) {
        err << "error: cannot read " << path << "\n";
        return std::nullopt;
    }
    try {
        return parse_syntax(tokenize(*source));
    } catch (const ParseError &e) {
        err << path << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
        return std::nullopt;
    }
}

void print_report_text(const CheckReport &report, std::ostream &out) {
    out << report.subject << "\n";
    for (const auto &c : report.checks) {
        out << "  [" << status_name(c.status) << "] " << c.rule_id << "  " << c.description << "\n";
        out << "         " << c.detail << "\n";
    }
    out << "overall: " << status_name(report.overall()) << "\n";
}

CheckReport full_report(const Program &program, const std::string &subject) {
    CheckReport report = check_program(program, subject);
    for (auto &c : check_program_gates(program).checks) {
        report.checks.push_back(std::move(c));
    }
    return report;
}

}  // namespace

std::string check_report_json(const CheckReport &report) {
    Json checks = Json::array();
    for (const auto &c : report.checks) {
        checks.push_back(Json{
            {"rule", c.rule_id},
            {"description", c.description},
            {"status", status_name(c.status)},
            {"detail", c.detail},
        });
    }
    Json j{
        {"subject", report.subject},
        {"checks", std::move(checks)},
        {"overall", status_name(report.overall())},
    };
    return j.dump(2);
}

std::string run_report_json(const RunReport &report, std::uint64_t seed, std::uint64_t shots) {
    Json outcomes = Json::object();
    if (report.shots) {
        for (const auto &[bits, count] : *report.shots) {
            outcomes[bits] = count;
        }
    }
    Json amplitudes = Json::array();
    if (auto state = report.unmeasured_state()) {
        for (const auto &c : state->amplitudes()) {
            amplitudes.push_back(Json::array({round_12(c.real()), round_12(c.imag())}));
        }
    }
    Json j{
        {"outcomes", std::move(outcomes)},
        {"amplitudes", std::move(amplitudes)},
        {"seed", seed},
        {"shots", shots},
    };
    return j.dump(2);
}

std::string deutsch_json(const DeutschVerdict &verdict) {
    Json j{
        {"verdict", verdict_name(verdict.verdict)},
        {"bit", verdict.measured_bit},
    };
    return j.dump(2);
}

int cmd_check(const std::string &path, Format format, std::ostream &out, std::ostream &err) {
    auto program = load_program(path, err);
    if (!program) {
        return kExitUsage;
    }
    CheckReport report = full_report(*program, path);
    if (format == Format::kJson) {
        out << check_report_json(report) << "\n";
    } else {
        print_report_text(report, out);
    }
    return report.overall() == CheckStatus::kPass ? kExitOk : kExitFailure;
}

int cmd_run(
    const std::string &path, std::uint64_t shots, std::uint64_t seed, Format format, std::ostream &out,
    std::ostream &err) {
    if (shots == 0) {
        err << "error: --shots must be at least 1\n";
        return kExitUsage;
    }
    auto program = load_program(path, err);
    if (!program) {
        return kExitUsage;
    }
    CheckReport report = full_report(*program, path);
    if (report.overall() != CheckStatus::kPass) {
        for (const auto &c : report.checks) {
            if (c.status == CheckStatus::kFail) {
                err << path << ": " << c.rule_id << " failed: " << c.detail << "\n";
            }
        }
        return kExitFailure;
    }
    auto compiled = compile(*program);
    RunReport run = run_shots(compiled.circuit, compiled.oracles, shots, seed);

    if (format == Format::kJson) {
        out << run_report_json(run, seed, shots) << "\n";
        return kExitOk;
    }
    out << "shots: " << shots << "  seed: " << seed << "\n";
    for (const auto &[bits, count] : *run.shots) {
        out << "  " << (bits.empty() ? "(no measurements)" : bits) << ": " << count << "\n";
    }
    if (auto state = run.unmeasured_state()) {
        out << "amplitudes (shot 0, before measurement):\n";
        auto amps = state->amplitudes();
        for (std::size_t i = 0; i < amps.size(); i++) {
            std::string label;
            for (std::size_t q = state->n_qubits(); q-- > 0;) {
                label += (i >> q) & 1 ? '1' : '0';
            }
            char buf[80];
            std::snprintf(buf, sizeof(buf), "  |%s>  %+.6f %+.6fi\n", label.c_str(), amps[i].real(), amps[i].imag());
            out << buf;
        }
    }
    return kExitOk;
}

int cmd_deutsch(const std::string &oracle, std::uint64_t seed, Format format, std::ostream &out, std::ostream &err) {
    auto f = oracle_from_keyword(oracle);
    if (!f) {
        err << "error: unknown oracle '" << oracle << "' (expected const0, const1, id or not)\n";
        return kExitUsage;
    }
    DeutschVerdict verdict = deutsch(*f, seed);
    if (format == Format::kJson) {
        out << deutsch_json(verdict) << "\n";
    } else {
        out << verdict_name(verdict.verdict) << " (bit " << verdict.measured_bit << ")\n";
    }
    return kExitOk;
}

int dispatch(const CliConfig &config, std::ostream &out, std::ostream &err) {
    switch (config.subcommand) {
        case CliConfig::Subcommand::kCheck:
            if (!config.input_path) {
                err << "error: check needs an input file\n";
                return kExitUsage;
            }
            return cmd_check(*config.input_path, config.format, out, err);
        case CliConfig::Subcommand::kRun:
            if (!config.input_path) {
                err << "error: run needs an input file\n";
                return kExitUsage;
            }
            return cmd_run(*config.input_path, config.shots, config.seed, config.format, out, err);
        case CliConfig::Subcommand::kDeutsch:
            if (!config.oracle) {
                err << "error: deutsch needs --oracle\n";
                return kExitUsage;
            }
            return cmd_deutsch(*config.oracle, config.seed, config.format, out, err);
    }
    return kExitUsage;
}

int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Check, compile and simulate .fqz quantum specifications."};
    app.require_subcommand(1);

    CliConfig config;
    std::string path;
    std::string oracle;
    std::string format = "text";
    const auto formats = CLI::IsMember({"text", "json"});

    auto *check = app.add_subcommand("check", "Verify a .fqz program against the scope, norm and gate rules");
    check->add_option("input", path, "Path to a .fqz file")->required();
    check->add_option("--format", format, "Output format: text or json")->check(formats);

    auto *run = app.add_subcommand("run", "Simulate a .fqz program and report outcome counts");
    run->add_option("input", path, "Path to a .fqz file")->required();
    run->add_option("--shots", config.shots, "Number of independent executions")->check(CLI::PositiveNumber);
    run->add_option("--seed", config.seed, "Root seed for measurement sampling");
    run->add_option("--format", format, "Output format: text or json")->check(formats);

    auto *deutsch_cmd = app.add_subcommand("deutsch", "Run the built-in Deutsch algorithm on one oracle");
    deutsch_cmd->add_option("--oracle", oracle, "const0, const1, id or not")
        ->required()
        ->check(CLI::IsMember({"const0", "const1", "id", "not"}));
    deutsch_cmd->add_option("--seed", config.seed, "Seed for the final measurement");
    deutsch_cmd->add_option("--format", format, "Output format: text or json")->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    config.format = format == "json" ? Format::kJson : Format::kText;
    if (check->parsed()) {
        config.subcommand = CliConfig::Subcommand::kCheck;
        config.input_path = path;
    } else if (run->parsed()) {
        config.subcommand = CliConfig::Subcommand::kRun;
        config.input_path = path;
    } else {
        config.subcommand = CliConfig::Subcommand::kDeutsch;
        config.oracle = oracle;
    }
    return dispatch(config, out, err);
}

}  // namespace fqse::cli
