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

#include "fqse/speclang.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <set>
#include <tuple>

namespace fqse {

std::string_view token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::kKeyword:
            return "KEYWORD";
        case TokenKind::kIdent:
            return "IDENT";
        case TokenKind::kKet:
            return "KET";
        case TokenKind::kGate:
            return "GATE";
        case TokenKind::kLParen:
            return "LPAREN";
        case TokenKind::kRParen:
            return "RPAREN";
        case TokenKind::kLBracket:
            return "LBRACKET";
        case TokenKind::kRBracket:
            return "RBRACKET";
        case TokenKind::kEquals:
            return "EQUALS";
        case TokenKind::kNumber:
            return "NUMBER";
        case TokenKind::kNewline:
            return "NEWLINE";
        case TokenKind::kComment:
            return "COMMENT";
        case TokenKind::kEof:
            return "EOF";
    }
    return "?";
}

ParseError::ParseError(std::string message, SourceLocation loc, std::vector<std::string> expected)
    : std::runtime_error(
          std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + message),
      message_(std::move(message)),
      loc_(loc),
      expected_(std::move(expected)) {
}

namespace {

const std::vector<std::string> kKetSpellings = {"|0>", "|1>", "|+>", "|->", "H|0>", "H|1>"};
const std::set<std::string, std::less<>> kKeywords = {"qubit", "oracle", "measure", "const0", "const1", "id", "not"};
const std::set<std::string, std::less<>> kGates = {"I", "X", "Z", "H", "R", "N"};

bool is_word_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_word_char(char c) {
    return is_word_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            SourceLocation start = here();
            if (c == ' ' || c == '\t') {
                advance(1);
            } else if (c == '\n' || (c == '\r' && peek(1) == '\n')) {
                std::size_t n = c == '\r' ? 2 : 1;
                out.push_back({TokenKind::kNewline, "\n", start});
                pos_ += n;
                line_++;
                col_ = 1;
            } else if (c == '-' && peek(1) == '-') {
                std::size_t end = src_.find_first_of("\r\n", pos_);
                if (end == std::string_view::npos) {
                    end = src_.size();
                }
                out.push_back({TokenKind::kComment, std::string(src_.substr(pos_, end - pos_)), start});
                advance(end - pos_);
            } else if (c == '|' || (c == 'H' && peek(1) == '|')) {
                out.push_back(lex_ket(start));
            } else if (is_word_start(c)) {
                out.push_back(lex_word(start));
            } else if (is_digit(c) || c == '-' || (c == '.' && is_digit(peek(1)))) {
                out.push_back(lex_number(start));
            } else if (c == '(' || c == ')' || c == '[' || c == ']' || c == '=') {
                static const std::map<char, TokenKind> punct = {
                    {'(', TokenKind::kLParen},
                    {')', TokenKind::kRParen},
                    {'[', TokenKind::kLBracket},
                    {']', TokenKind::kRBracket},
                    {'=', TokenKind::kEquals},
                };
                out.push_back({punct.at(c), std::string(1, c), start});
                advance(1);
            } else {
                throw ParseError(describe_unexpected(c), start);
            }
        }
        out.push_back({TokenKind::kEof, "", here()});
        return out;
    }

   private:
    SourceLocation here() const {
        return {line_, col_};
    }

    char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance(std::size_t n) {
        pos_ += n;
        col_ += n;
    }

    std::string describe_unexpected(char c) const {
        if (c == '\r') {
            return "carriage return not followed by a line feed";
        }
        auto u = static_cast<unsigned char>(c);
        if (u < 0x20 || u >= 0x7f) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "0x%02X", u);
            return std::string("unexpected byte ") + buf;
        }
        return std::string("unexpected character '") + c + "'";
    }

    Token lex_ket(SourceLocation start) {
        for (const auto &spelling : kKetSpellings) {
            if (src_.substr(pos_, spelling.size()) == spelling) {
                advance(spelling.size());
                return {TokenKind::kKet, spelling, start};
            }
        }
        throw ParseError("invalid ket literal", start, kKetSpellings);
    }

    Token lex_word(SourceLocation start) {
        std::size_t end = pos_;
        while (end < src_.size() && is_word_char(src_[end])) {
            end++;
        }
        std::string word(src_.substr(pos_, end - pos_));
        if (word == "pi") {
            return lex_number(start);
        }
        advance(word.size());
        if (kKeywords.contains(word)) {
            return {TokenKind::kKeyword, word, start};
        }
        if (kGates.contains(word)) {
            return {TokenKind::kGate, word, start};
        }
        return {TokenKind::kIdent, word, start};
    }

    // [-] (pi [/2 | /4] | digits [. digits] [e [+-] digits] | . digits [...])
    Token lex_number(SourceLocation start) {
        std::size_t p = pos_;
        auto at = [&](std::size_t k) { return k < src_.size() ? src_[k] : '\0'; };
        auto bad = [&](const std::string &why) { return ParseError("malformed number: " + why, start, {"NUMBER"}); };
        if (at(p) == '-') {
            p++;
        }
        if (at(p) == 'p' && at(p + 1) == 'i' && !is_word_char(at(p + 2))) {
            p += 2;
            if (at(p) == '/') {
                if ((at(p + 1) == '2' || at(p + 1) == '4') && !is_word_char(at(p + 2))) {
                    p += 2;
                } else {
                    throw bad("pi may only be divided by 2 or 4");
                }
            }
        } else {
            std::size_t digits = 0;
            while (is_digit(at(p))) {
                p++;
                digits++;
            }
            if (at(p) == '.') {
                p++;
                while (is_digit(at(p))) {
                    p++;
                    digits++;
                }
            }
            if (digits == 0) {
                throw bad("expected digits");
            }
            if (at(p) == 'e' || at(p) == 'E') {
                p++;
                if (at(p) == '+' || at(p) == '-') {
                    p++;
                }
                if (!is_digit(at(p))) {
                    throw bad("exponent needs digits");
                }
                while (is_digit(at(p))) {
                    p++;
                }
            }
            if (is_word_char(at(p)) || at(p) == '.') {
                throw bad("unexpected '" + std::string(1, at(p)) + "'");
            }
        }
        std::string text(src_.substr(pos_, p - pos_));
        advance(p - pos_);
        return {TokenKind::kNumber, text, start};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

double angle_value(const Token &tok) {
    std::string_view text = tok.lexeme;
    double sign = 1.0;
    if (!text.empty() && text.front() == '-') {
        sign = -1.0;
        text.remove_prefix(1);
    }
    if (text == "pi") {
        return sign * std::numbers::pi;
    }
    if (text == "pi/2") {
        return sign * std::numbers::pi / 2;
    }
    if (text == "pi/4") {
        return sign * std::numbers::pi / 4;
    }
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw ParseError("angle '" + tok.lexeme + "' is not a finite number", tok.loc, {"NUMBER"});
    }
    return sign * value;
}

class Parser {
   public:
    explicit Parser(const std::vector<Token> &tokens) {
        for (const auto &t : tokens) {
            if (t.kind != TokenKind::kComment) {
                toks_.push_back(t);
            }
        }
        if (toks_.empty() || toks_.back().kind != TokenKind::kEof) {
            SourceLocation loc = toks_.empty() ? SourceLocation{} : toks_.back().loc;
            throw ParseError("token stream must end with EOF", loc, {"EOF"});
        }
    }

    Program run() {
        Program program;
        while (cur().kind != TokenKind::kEof) {
            parse_line(program);
        }
        return program;
    }

   private:
    const Token &cur() const {
        return toks_[pos_];
    }

    const Token &take() {
        const Token &t = toks_[pos_];
        if (t.kind != TokenKind::kEof) {
            pos_++;
        }
        return t;
    }

    [[noreturn]] void fail(const std::string &what, std::vector<std::string> expected) const {
        const Token &t = cur();
        std::string found = t.kind == TokenKind::kEof       ? "end of input"
                            : t.kind == TokenKind::kNewline ? "end of line"
                                                            : "'" + t.lexeme + "'";
        throw ParseError("expected " + what + ", found " + found, t.loc, std::move(expected));
    }

    const Token &expect(TokenKind kind) {
        if (cur().kind != kind) {
            std::string name(token_kind_name(kind));
            fail(name, {name});
        }
        return take();
    }

    Name expect_name() {
        const Token &t = expect(TokenKind::kIdent);
        return Name{t.lexeme, t.loc};
    }

    void parse_line(Program &program) {
        const Token &head = cur();
        if (head.kind == TokenKind::kNewline) {
            take();
            return;
        }
        if (head.kind == TokenKind::kKeyword && head.lexeme == "oracle") {
            take();
            Name name = expect_name();
            expect(TokenKind::kEquals);
            const Token &fn_tok = cur();
            auto fn = fn_tok.kind == TokenKind::kKeyword ? oracle_from_keyword(fn_tok.lexeme) : std::nullopt;
            if (!fn) {
                fail("oracle kind", {"const0", "const1", "id", "not"});
            }
            take();
            program.oracle_decls.push_back({std::move(name), *fn, head.loc, program.statements.size()});
        } else if (head.kind == TokenKind::kKeyword && head.lexeme == "qubit") {
            take();
            Name name = expect_name();
            expect(TokenKind::kEquals);
            if (cur().kind != TokenKind::kKet) {
                fail("ket literal", kKetSpellings);
            }
            auto ket = *ket_from_spelling(take().lexeme);
            program.statements.push_back(AllocStmt{std::move(name), ket, head.loc});
        } else if (head.kind == TokenKind::kKeyword && head.lexeme == "measure") {
            take();
            program.statements.push_back(MeasureStmt{expect_name(), head.loc});
        } else if (head.kind == TokenKind::kGate) {
            parse_gate(program);
        } else {
            fail("a statement", {"oracle", "qubit", "measure", "GATE", "NEWLINE", "EOF"});
        }
        if (cur().kind != TokenKind::kNewline && cur().kind != TokenKind::kEof) {
            fail("end of line", {"NEWLINE", "EOF"});
        }
        take();
    }

    void parse_gate(Program &program) {
        const Token &head = take();
        const std::string &g = head.lexeme;
        if (g == "N") {
            expect(TokenKind::kLBracket);
            Name oracle = expect_name();
            expect(TokenKind::kRBracket);
            Name control = expect_name();
            Name target = expect_name();
            program.statements.push_back(OracleStmt{std::move(oracle), std::move(control), std::move(target), head.loc});
            return;
        }
        if (g == "R") {
            expect(TokenKind::kLParen);
            double angle = angle_value(expect(TokenKind::kNumber));
            expect(TokenKind::kRParen);
            program.statements.push_back(GateStmt{GateSymbol::kR, angle, expect_name(), head.loc});
            return;
        }
        static const std::map<std::string, GateSymbol, std::less<>> simple = {
            {"I", GateSymbol::kI}, {"X", GateSymbol::kX}, {"Z", GateSymbol::kZ}, {"H", GateSymbol::kH}};
        program.statements.push_back(GateStmt{simple.at(g), std::nullopt, expect_name(), head.loc});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

bool same_name(const Name &a, const Name &b) {
    return a.text == b.text;
}

bool same_angle(const std::optional<double> &a, const std::optional<double> &b) {
    if (a.has_value() != b.has_value()) {
        return false;
    }
    if (!a) {
        return true;
    }
    return std::abs(*a - *b) <= 1e-8 * std::max(1.0, std::abs(*a));
}

bool same_statement(const Statement &a, const Statement &b) {
    if (a.index() != b.index()) {
        return false;
    }
    if (const auto *x = std::get_if<AllocStmt>(&a)) {
        const auto &y = std::get<AllocStmt>(b);
        return same_name(x->qubit, y.qubit) && x->ket == y.ket;
    }
    if (const auto *x = std::get_if<GateStmt>(&a)) {
        const auto &y = std::get<GateStmt>(b);
        return x->gate == y.gate && same_angle(x->angle, y.angle) && same_name(x->qubit, y.qubit);
    }
    if (const auto *x = std::get_if<OracleStmt>(&a)) {
        const auto &y = std::get<OracleStmt>(b);
        return same_name(x->oracle, y.oracle) && same_name(x->control, y.control) && same_name(x->target, y.target);
    }
    return same_name(std::get<MeasureStmt>(a).qubit, std::get<MeasureStmt>(b).qubit);
}

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
    return Lexer(source).run();
}

bool structurally_equal(const Program &a, const Program &b) {
    if (a.oracle_decls.size() != b.oracle_decls.size() || a.statements.size() != b.statements.size()) {
        return false;
    }
    for (std::size_t k = 0; k < a.oracle_decls.size(); k++) {
        if (!same_name(a.oracle_decls[k].name, b.oracle_decls[k].name) ||
            a.oracle_decls[k].fn != b.oracle_decls[k].fn) {
            return false;
        }
    }
    for (std::size_t k = 0; k < a.statements.size(); k++) {
        if (!same_statement(a.statements[k], b.statements[k])) {
            return false;
        }
    }
    return true;
}

Program parse_syntax(const std::vector<Token> &tokens) {
    return Parser(tokens).run();
}

std::vector<ScopeViolation> scope_violations(const Program &program) {
    std::vector<ScopeViolation> out;

    // Declaration position of each oracle; later duplicates are violations.
    std::map<std::string, std::size_t, std::less<>> oracle_position;
    for (const auto &decl : program.oracle_decls) {
        if (oracle_position.contains(decl.name.text)) {
            out.push_back({"duplicate declaration of oracle " + decl.name.text, decl.name.loc});
        } else {
            oracle_position.emplace(decl.name.text, decl.position);
        }
    }

    std::set<std::string, std::less<>> qubits;
    auto use_qubit = [&](const Name &n) {
        if (!qubits.contains(n.text)) {
            out.push_back({"undeclared qubit " + n.text, n.loc});
        }
    };
    for (std::size_t k = 0; k < program.statements.size(); k++) {
        const auto &stmt = program.statements[k];
        if (const auto *s = std::get_if<AllocStmt>(&stmt)) {
            if (!qubits.insert(s->qubit.text).second) {
                out.push_back({"qubit " + s->qubit.text + " declared twice", s->qubit.loc});
            }
        } else if (const auto *s = std::get_if<GateStmt>(&stmt)) {
            use_qubit(s->qubit);
        } else if (const auto *s = std::get_if<OracleStmt>(&stmt)) {
            auto it = oracle_position.find(s->oracle.text);
            if (it == oracle_position.end() || it->second > k) {
                out.push_back({"undeclared oracle " + s->oracle.text, s->oracle.loc});
            }
            use_qubit(s->control);
            use_qubit(s->target);
            if (s->control.text == s->target.text) {
                out.push_back({"oracle control and target must differ", s->target.loc});
            }
        } else if (const auto *s = std::get_if<MeasureStmt>(&stmt)) {
            use_qubit(s->qubit);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const ScopeViolation &a, const ScopeViolation &b) {
        return std::tie(a.loc.line, a.loc.column) < std::tie(b.loc.line, b.loc.column);
    });
    return out;
}

Program parse(const std::vector<Token> &tokens) {
    Program program = parse_syntax(tokens);
    auto violations = scope_violations(program);
    if (!violations.empty()) {
        throw ParseError(violations.front().message, violations.front().loc, {"declared name"});
    }
    return program;
}

Program parse(std::string_view source) {
    return parse(tokenize(source));
}

std::string format_angle(double radians) {
    struct Named {
        double value;
        const char *text;
    };
    static const Named named[] = {
        {std::numbers::pi, "pi"},
        {std::numbers::pi / 2, "pi/2"},
        {std::numbers::pi / 4, "pi/4"},
        {-std::numbers::pi, "-pi"},
        {-std::numbers::pi / 2, "-pi/2"},
        {-std::numbers::pi / 4, "-pi/4"},
    };
    for (const auto &n : named) {
        if (std::abs(radians - n.value) <= 1e-12) {
            return n.text;
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", radians == 0 ? 0.0 : radians);
    return buf;
}

std::string_view gate_name(GateSymbol gate) {
    switch (gate) {
        case GateSymbol::kI:
            return "I";
        case GateSymbol::kX:
            return "X";
        case GateSymbol::kZ:
            return "Z";
        case GateSymbol::kH:
            return "H";
        case GateSymbol::kR:
            return "R_phi";
    }
    return "?";
}

std::string pretty_print(const Program &program) {
    std::string out;
    for (const auto &decl : program.oracle_decls) {
        out += "oracle " + decl.name.text + " = " + std::string(oracle_keyword(decl.fn)) + "\n";
    }
    for (const auto &stmt : program.statements) {
        if (const auto *s = std::get_if<AllocStmt>(&stmt)) {
            out += "qubit " + s->qubit.text + " = " + std::string(ket_spelling(s->ket));
        } else if (const auto *s = std::get_if<GateStmt>(&stmt)) {
            if (s->gate == GateSymbol::kR) {
                out += "R(" + format_angle(s->angle.value_or(0.0)) + ")";
            } else {
                out += gate_name(s->gate);
            }
            out += " " + s->qubit.text;
        } else if (const auto *s = std::get_if<OracleStmt>(&stmt)) {
            out += "N[" + s->oracle.text + "] " + s->control.text + " " + s->target.text;
        } else if (const auto *s = std::get_if<MeasureStmt>(&stmt)) {
            out += "measure " + s->qubit.text;
        }
        out += "\n";
    }
    return out;
}

CompileError::CompileError(const std::string &message, SourceLocation loc)
    : std::invalid_argument(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + message), loc_(loc) {
}

CompiledProgram compile(const Program &program) {
    auto violations = scope_violations(program);
    if (!violations.empty()) {
        throw CompileError(violations.front().message, violations.front().loc);
    }
    CompiledProgram out;
    for (const auto &decl : program.oracle_decls) {
        out.oracles.emplace(decl.name.text, decl.fn);
    }
    for (const auto &stmt : program.statements) {
        if (const auto *s = std::get_if<AllocStmt>(&stmt)) {
            out.circuit.instructions.push_back(Alloc{s->qubit.text, s->ket});
        } else if (const auto *s = std::get_if<GateStmt>(&stmt)) {
            out.circuit.instructions.push_back(Apply{std::string(gate_name(s->gate)), s->angle, {s->qubit.text}});
        } else if (const auto *s = std::get_if<OracleStmt>(&stmt)) {
            out.circuit.instructions.push_back(ApplyOracle{s->oracle.text, s->control.text, s->target.text});
        } else if (const auto *s = std::get_if<MeasureStmt>(&stmt)) {
            out.circuit.instructions.push_back(Measure{s->qubit.text});
        }
    }
    return out;
}

}  // namespace fqse
