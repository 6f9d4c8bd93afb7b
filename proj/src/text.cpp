#include "ddsx/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace ddsx {

namespace {

enum class Tok { lparen, rparen, comma, plus, star, caret, equals, semicolon, letter_c, var, number, end };

struct Token {
    Tok kind;
    u64 number = 0;  // for var and number tokens
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw parse_error(message, current_.line, current_.column);
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            step();
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::end;
            return;
        }
        const char c = text_[pos_];
        switch (c) {
            case '(': current_.kind = Tok::lparen; step(); return;
            case ')': current_.kind = Tok::rparen; step(); return;
            case ',': current_.kind = Tok::comma; step(); return;
            case '+': current_.kind = Tok::plus; step(); return;
            case '*': current_.kind = Tok::star; step(); return;
            case '^': current_.kind = Tok::caret; step(); return;
            case '=': current_.kind = Tok::equals; step(); return;
            case ';': current_.kind = Tok::semicolon; step(); return;
            case 'C': current_.kind = Tok::letter_c; step(); return;
            case 'X': {
                step();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw parse_error("variable name needs an index, e.g. X1", line_, column_);
                current_.kind = Tok::var;
                current_.number = read_number();
                if (current_.number == 0)
                    throw parse_error("variable index must be >= 1", current_.line,
                                      current_.column);
                return;
            }
            default:
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    current_.kind = Tok::number;
                    current_.number = read_number();
                    return;
                }
                throw parse_error(std::string("unexpected character '") + c + "'", line_,
                                  column_);
        }
    }

    u64 read_number() {
        u64 value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const u64 digit = static_cast<u64>(text_[pos_] - '0');
            if (value > (UINT64_MAX - digit) / 10)
                throw parse_error("integer literal too large", line_, column_);
            value = value * 10 + digit;
            step();
        }
        return value;
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    Token current_;
};

u64 expect_number(Lexer& lex, const char* what) {
    if (lex.peek().kind != Tok::number) lex.fail(std::string("expected ") + what);
    return lex.take().number;
}

void expect(Lexer& lex, Tok kind, const char* what) {
    if (lex.peek().kind != kind) lex.fail(std::string("expected ") + what);
    lex.take();
}

CycleComponent parse_cycle(Lexer& lex) {
    lex.take();  // the leading 'C', already checked by the caller
    expect(lex, Tok::lparen, "'(' after C");
    const Token period_tok = lex.peek();
    const u64 period = expect_number(lex, "period");
    expect(lex, Tok::comma, "','");
    const Token count_tok = lex.peek();
    const u64 count = expect_number(lex, "multiplicity");
    expect(lex, Tok::rparen, "')'");
    if (period == 0)
        throw invalid_component_error("line " + std::to_string(period_tok.line) + ", column " +
                                      std::to_string(period_tok.column) +
                                      ": cycle period must be >= 1");
    if (count == 0)
        throw parse_error("multiplicity must be >= 1", count_tok.line, count_tok.column);
    return {period, count};
}

CycleSet parse_system_body(Lexer& lex) {
    if (lex.peek().kind == Tok::number && lex.peek().number == 0) {
        lex.take();
        return {};
    }
    std::vector<CycleComponent> raw;
    if (lex.peek().kind != Tok::letter_c) lex.fail("expected a system: 'C(p,n)' or '0'");
    raw.push_back(parse_cycle(lex));
    while (lex.peek().kind == Tok::plus) {
        lex.take();
        if (lex.peek().kind != Tok::letter_c) lex.fail("expected 'C(p,n)' after '+'");
        raw.push_back(parse_cycle(lex));
    }
    return canonicalize(std::move(raw));
}

void expect_end(Lexer& lex) {
    if (lex.peek().kind != Tok::end) lex.fail("unexpected trailing input");
}

// eval expressions evaluate over systems and scalar replication factors.
struct EvalValue {
    bool is_scalar = false;
    u64 scalar = 0;
    CycleSet system;
};

EvalValue parse_expr(Lexer& lex);

EvalValue parse_base(Lexer& lex) {
    switch (lex.peek().kind) {
        case Tok::letter_c: {
            EvalValue v;
            v.system = canonicalize({parse_cycle(lex)});
            return v;
        }
        case Tok::number: {
            const Token t = lex.take();
            if (t.number == 0) return {};  // the empty system
            return {true, t.number, {}};
        }
        case Tok::lparen: {
            lex.take();
            EvalValue v = parse_expr(lex);
            expect(lex, Tok::rparen, "')'");
            return v;
        }
        default:
            lex.fail("expected 'C(p,n)', an integer, or '('");
    }
}

EvalValue parse_factor(Lexer& lex) {
    EvalValue v = parse_base(lex);
    while (lex.peek().kind == Tok::caret) {
        lex.take();
        const u64 e = expect_number(lex, "exponent");
        if (v.is_scalar)
            v.scalar = checked_pow(v.scalar, e);
        else
            v.system = power(v.system, e);
    }
    return v;
}

EvalValue parse_mul(Lexer& lex) {
    EvalValue v = parse_factor(lex);
    while (lex.peek().kind == Tok::star) {
        lex.take();
        EvalValue rhs = parse_factor(lex);
        if (v.is_scalar && rhs.is_scalar) {
            v.scalar = checked_mul(v.scalar, rhs.scalar);
        } else if (v.is_scalar) {
            v = {false, 0, scalar_multiply(v.scalar, rhs.system)};
        } else if (rhs.is_scalar) {
            v.system = scalar_multiply(rhs.scalar, v.system);
        } else {
            v.system = multiply(v.system, rhs.system);
        }
    }
    return v;
}

EvalValue parse_expr(Lexer& lex) {
    EvalValue v = parse_mul(lex);
    while (lex.peek().kind == Tok::plus) {
        const Token op = lex.peek();
        lex.take();
        EvalValue rhs = parse_mul(lex);
        if (v.is_scalar || rhs.is_scalar)
            throw parse_error("'+' needs systems on both sides", op.line, op.column);
        v.system = add(v.system, rhs.system);
    }
    return v;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

nlohmann::json system_to_json(const CycleSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : s.components())
        arr.push_back({{"period", c.period}, {"count", c.count}});
    return arr;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw error("unknown output format '" + std::string(name) + "' (text|json|csv)");
}

CycleSet parse_system(std::string_view text) {
    Lexer lex(text);
    CycleSet s = parse_system_body(lex);
    expect_end(lex);
    return s;
}

Equation parse_equation(std::string_view text) {
    Lexer lex(text);
    std::vector<Term> terms;
    for (;;) {
        expect(lex, Tok::lparen, "'(' opening a coefficient");
        CycleSet coeff = parse_system_body(lex);
        expect(lex, Tok::rparen, "')'");
        expect(lex, Tok::star, "'*'");
        if (lex.peek().kind != Tok::var) lex.fail("expected a variable, e.g. X1");
        const Token var = lex.take();
        u64 exponent = 1;
        if (lex.peek().kind == Tok::caret) {
            lex.take();
            const Token etok = lex.peek();
            exponent = expect_number(lex, "exponent");
            if (exponent == 0)
                throw parse_error("exponent must be >= 1", etok.line, etok.column);
        }
        terms.push_back({std::move(coeff), static_cast<int>(var.number), exponent});
        if (lex.peek().kind == Tok::plus) {
            lex.take();
            continue;
        }
        break;
    }
    expect(lex, Tok::equals, "'='");
    CycleSet rhs = parse_system_body(lex);
    expect_end(lex);
    return Equation::make(std::move(terms), std::move(rhs));
}

CycleSet parse_expression(std::string_view text) {
    Lexer lex(text);
    const Token start = lex.peek();
    EvalValue v = parse_expr(lex);
    expect_end(lex);
    if (v.is_scalar)
        throw parse_error("expression evaluates to a scalar, not a system", start.line,
                          start.column);
    return v.system;
}

std::map<int, CycleSet> parse_assignment(std::string_view text) {
    Lexer lex(text);
    std::map<int, CycleSet> out;
    for (;;) {
        if (lex.peek().kind != Tok::var) lex.fail("expected a variable, e.g. X1");
        const Token var = lex.take();
        expect(lex, Tok::equals, "'='");
        CycleSet value = parse_system_body(lex);
        if (!out.emplace(static_cast<int>(var.number), std::move(value)).second)
            throw parse_error("duplicate assignment for X" + std::to_string(var.number),
                              var.line, var.column);
        if (lex.peek().kind == Tok::semicolon) {
            lex.take();
            if (lex.peek().kind == Tok::end) break;  // trailing ';' is fine
            continue;
        }
        break;
    }
    expect_end(lex);
    return out;
}

std::string print_system(const CycleSet& s) {
    if (s.empty()) return "0";
    std::string out;
    for (const auto& c : s.components()) {
        if (!out.empty()) out += " + ";
        out += "C(" + std::to_string(c.period) + "," + std::to_string(c.count) + ")";
    }
    return out;
}

std::string print_equation(const Equation& eq) {
    std::string out;
    for (const Term& t : eq.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + print_system(t.coefficient) + ") * X" + std::to_string(t.variable);
        if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    }
    return out + " = " + print_system(eq.rhs());
}

std::string print_solution_set(const SolutionSet& s, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: {
            std::string out;
            for (const CycleSet& sol : s) out += print_system(sol) + "\n";
            return out;
        }
        case OutputFormat::json: {
            nlohmann::json j;
            j["solutions"] = nlohmann::json::array();
            for (const CycleSet& sol : s) j["solutions"].push_back(system_to_json(sol));
            return j.dump() + "\n";
        }
        case OutputFormat::csv: {
            std::string out = "solution\n";
            for (const CycleSet& sol : s) out += csv_quote(print_system(sol)) + "\n";
            return out;
        }
    }
    return {};
}

std::string print_assignments(const std::vector<Assignment>& assignments,
                              OutputFormat format) {
    switch (format) {
        case OutputFormat::text: {
            std::string out;
            for (const Assignment& a : assignments) {
                std::string line;
                for (const auto& [var, value] : a.values) {
                    if (!line.empty()) line += "; ";
                    line += "X" + std::to_string(var) + " = " + print_system(value);
                }
                for (const auto& [var, roots] : a.base_roots) {
                    line += " | roots X" + std::to_string(var) + ": ";
                    for (std::size_t i = 0; i < roots.size(); ++i) {
                        if (i) line += ", ";
                        line += print_system(roots[i]);
                    }
                }
                out += line + "\n";
            }
            return out;
        }
        case OutputFormat::json: {
            nlohmann::json j;
            j["assignments"] = nlohmann::json::array();
            for (const Assignment& a : assignments) {
                nlohmann::json entry;
                entry["values"] = nlohmann::json::object();
                for (const auto& [var, value] : a.values)
                    entry["values"]["X" + std::to_string(var)] = system_to_json(value);
                entry["base_roots"] = nlohmann::json::object();
                for (const auto& [var, roots] : a.base_roots) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const CycleSet& r : roots) arr.push_back(system_to_json(r));
                    entry["base_roots"]["X" + std::to_string(var)] = std::move(arr);
                }
                j["assignments"].push_back(std::move(entry));
            }
            return j.dump() + "\n";
        }
        case OutputFormat::csv: {
            std::string out = "assignment\n";
            for (const Assignment& a : assignments) {
                std::string line;
                for (const auto& [var, value] : a.values) {
                    if (!line.empty()) line += "; ";
                    line += "X" + std::to_string(var) + " = " + print_system(value);
                }
                out += csv_quote(line) + "\n";
            }
            return out;
        }
    }
    return {};
}

std::string print_eval_result(const CycleSet& s, OutputFormat format) {
    switch (format) {
        case OutputFormat::text:
            return print_system(s) + "\n";
        case OutputFormat::json: {
            nlohmann::json j;
            j["system"] = system_to_json(s);
            return j.dump() + "\n";
        }
        case OutputFormat::csv:
            return "system\n" + csv_quote(print_system(s)) + "\n";
    }
    return {};
}

std::string print_bounds(const SolveBounds& b, OutputFormat format) {
    switch (format) {
        case OutputFormat::text:
            return "lower = " + std::to_string(b.lower) + "\nupper = " +
                   std::to_string(b.upper) + "\n";
        case OutputFormat::json: {
            nlohmann::json j;
            j["lower"] = b.lower;
            j["upper"] = b.upper;
            return j.dump() + "\n";
        }
        case OutputFormat::csv:
            return "lower,upper\n" + std::to_string(b.lower) + "," +
                   std::to_string(b.upper) + "\n";
    }
    return {};
}

std::string print_verify_result(bool ok, OutputFormat format) {
    switch (format) {
        case OutputFormat::text:
            return ok ? "true\n" : "false\n";
        case OutputFormat::json:
            return std::string("{\"result\":") + (ok ? "true" : "false") + "}\n";
        case OutputFormat::csv:
            return std::string("result\n") + (ok ? "true" : "false") + "\n";
    }
    return {};
}

std::string format_node_table(const ColoredTree& tree) {
    std::ostringstream out;
    out << "Node | Splits | Node solution | Subtree solutions set\n";
    const auto& rows = tree.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {  // root first
        out << it->value << " | ";
        if (it->splits.empty()) {
            out << "{}";
        } else {
            for (std::size_t i = 0; i < it->splits.size(); ++i) {
                if (i) out << " ";
                out << "[";
                const Partition& parts = it->splits[i].parts;
                for (std::size_t k = 0; k < parts.size(); ++k) {
                    if (k) out << ",";
                    out << parts[k];
                }
                out << "]";
            }
        }
        out << " | ";
        out << (it->node_solution ? print_system(*it->node_solution) : "{}");
        out << " | {";
        const auto& sols = it->subtree_solutions;
        for (std::size_t i = 0; i < sols.size(); ++i) {
            if (i) out << ", ";
            out << print_system(sols.items()[i]);
        }
        out << "}\n";
    }
    return out.str();
}

}  // namespace ddsx
