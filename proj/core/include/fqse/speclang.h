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

// The .fqz specification language.
//
//     -- Deutsch, constant oracle
//     oracle f = const0
//     qubit x = H|0>
//     qubit y = H|1>
//     N[f] x y
//     H x
//     measure x
//
// Grammar:
//
//     program     := line* ;
//     line        := [oracle_decl | alloc | apply | measure] [COMMENT] (NEWLINE | EOF) ;
//     oracle_decl := "oracle" IDENT "=" ("const0" | "const1" | "id" | "not") ;
//     alloc       := "qubit" IDENT "=" KET ;
//     apply       := ("I" | "X" | "Z" | "H") IDENT
//                  | "R" "(" NUMBER ")" IDENT
//                  | "N" "[" IDENT "]" IDENT IDENT ;
//     measure     := "measure" IDENT ;
//
// KET is one of |0> |1> |+> |-> H|0> H|1>. NUMBER is a decimal literal
// (optional sign and exponent) or one of pi, pi/2, pi/4 with optional sign.

#ifndef FQSE_SPECLANG_H
#define FQSE_SPECLANG_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fqse/circuit.h"

namespace fqse {

struct SourceLocation {
    std::size_t line = 1;
    std::size_t column = 1;
};

enum class TokenKind {
    kKeyword,
    kIdent,
    kKet,
    kGate,
    kLParen,
    kRParen,
    kLBracket,
    kRBracket,
    kEquals,
    kNumber,
    kNewline,
    kComment,
    kEof,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string lexeme;
    SourceLocation loc;
};

class ParseError : public std::runtime_error {
   public:
    ParseError(std::string message, SourceLocation loc, std::vector<std::string> expected = {});

    const std::string &message() const noexcept {
        return message_;
    }
    std::size_t line() const noexcept {
        return loc_.line;
    }
    std::size_t column() const noexcept {
        return loc_.column;
    }
    /// Token kinds or literal spellings that would have been accepted.
    const std::vector<std::string> &expected() const noexcept {
        return expected_;
    }

   private:
    std::string message_;
    SourceLocation loc_;
    std::vector<std::string> expected_;
};

/// Full token stream, always terminated by an EOF token. LF and CRLF line
/// endings are both accepted. Throws ParseError on characters outside the grammar.
std::vector<Token> tokenize(std::string_view source);

struct Name {
    std::string text;
    SourceLocation loc;
};

struct OracleDecl {
    Name name;
    OracleFn fn;
    SourceLocation loc;
    /// Number of statements preceding the declaration in the source.
    std::size_t position = 0;
};

struct AllocStmt {
    Name qubit;
    InitialKet ket;
    SourceLocation loc;
};

enum class GateSymbol { kI, kX, kZ, kH, kR };

struct GateStmt {
    GateSymbol gate;
    /// Radians; present exactly when gate is kR.
    std::optional<double> angle;
    Name qubit;
    SourceLocation loc;
};

struct OracleStmt {
    Name oracle;
    Name control;
    Name target;
    SourceLocation loc;
};

struct MeasureStmt {
    Name qubit;
    SourceLocation loc;
};

using Statement = std::variant<AllocStmt, GateStmt, OracleStmt, MeasureStmt>;

struct Program {
    std::vector<OracleDecl> oracle_decls;
    std::vector<Statement> statements;
};

/// Equality ignoring source locations and declaration positions. Angles are
/// compared to 9 significant digits, the precision pretty_print emits.
bool structurally_equal(const Program &a, const Program &b);

/// Parses without checking names. Throws ParseError on the first syntax error.
Program parse_syntax(const std::vector<Token> &tokens);

struct ScopeViolation {
    std::string message;
    SourceLocation loc;
};

/// Every use of an undeclared qubit or oracle, double allocation, duplicate
/// oracle declaration, and N[f] applied with control == target, in source order.
std::vector<ScopeViolation> scope_violations(const Program &program);

/// parse_syntax followed by the scope rules; the first violation is raised
/// as a ParseError at its location.
Program parse(const std::vector<Token> &tokens);
Program parse(std::string_view source);

/// Canonical text: oracle declarations first, one statement per line, single
/// spaces, LF line endings. Angles within 1e-12 of +-pi, +-pi/2, +-pi/4 print
/// symbolically, otherwise with 9 significant digits.
std::string pretty_print(const Program &program);
std::string format_angle(double radians);

class CompileError : public std::invalid_argument {
   public:
    CompileError(const std::string &message, SourceLocation loc);

    SourceLocation loc() const noexcept {
        return loc_;
    }

   private:
    SourceLocation loc_;
};

struct CompiledProgram {
    Circuit circuit;
    OracleMap oracles;
};

/// One instruction per statement, in order. Throws CompileError on any scope violation.
CompiledProgram compile(const Program &program);

/// Canonical gate name for a statement's gate symbol ("R_phi" for kR).
std::string_view gate_name(GateSymbol gate);

}  // namespace fqse

#endif
