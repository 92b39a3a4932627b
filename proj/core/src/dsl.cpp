#include "mi/dsl.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <functional>

#include "mi/closure.hpp"
#include "mi/generate.hpp"
#include "mi/json_io.hpp"
#include "mi/symbolic.hpp"

namespace mi::dsl {

namespace {

struct Token {
    enum class Kind { Ident, Int, Symbol, End };
    Kind kind;
    std::string text;
    long long number = 0;
    int line = 1, column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) {
            t.kind = Token::Kind::End;
            return t;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                t.text += take();
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::Int;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                t.text += take();
            t.number = std::stoll(t.text);
            return t;
        }
        static const std::string symbols = ";=+*&:^,<>()";
        if (symbols.find(c) != std::string::npos) {
            t.kind = Token::Kind::Symbol;
            t.text = take();
            return t;
        }
        throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
    }

private:
    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {  // comment to end of line
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, column_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { advance(); }

    Program parse_program() {
        Program program;
        while (current_.kind != Token::Kind::End) {
            program.push_back(parse_stmt());
            expect_symbol(";");
        }
        return program;
    }

private:
    void advance() {
        current_ = std::move(peeked_ ? *peeked_ : lexer_.next());
        peeked_.reset();
    }

    const Token& peek() {
        if (!peeked_) peeked_ = lexer_.next();
        return *peeked_;
    }

    bool at_symbol(const std::string& s) const {
        return current_.kind == Token::Kind::Symbol && current_.text == s;
    }

    void expect_symbol(const std::string& s) {
        if (!at_symbol(s))
            throw ParseError(current_.line, current_.column,
                             "expected '" + s + "', got '" + current_.text + "'");
        advance();
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(current_.line, current_.column, what);
    }

    Stmt parse_stmt() {
        if (current_.kind == Token::Kind::Ident && current_.text == "ring") {
            advance();
            if (current_.kind != Token::Kind::Int) fail("expected ring size");
            Stmt s{Stmt::Kind::Ring, static_cast<int>(current_.number), "", nullptr};
            advance();
            return s;
        }
        if (current_.kind == Token::Kind::Ident && peek().kind == Token::Kind::Symbol &&
            peek().text == "=") {
            Stmt s{Stmt::Kind::Assign, 0, current_.text, nullptr};
            advance();
            advance();
            s.expr = parse_expr();
            return s;
        }
        Stmt s{Stmt::Kind::Eval, 0, "", parse_expr()};
        return s;
    }

    std::unique_ptr<Expr> make_binary(char op, std::unique_ptr<Expr> lhs,
                                      std::unique_ptr<Expr> rhs) {
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Binary;
        e->line = lhs->line;
        e->column = lhs->column;
        e->op = op;
        e->args.push_back(std::move(lhs));
        e->args.push_back(std::move(rhs));
        return e;
    }

    std::unique_ptr<Expr> parse_expr() {
        auto lhs = parse_term();
        while (at_symbol("+")) {
            advance();
            lhs = make_binary('+', std::move(lhs), parse_term());
        }
        return lhs;
    }

    std::unique_ptr<Expr> parse_term() {
        auto lhs = parse_factor();
        while (at_symbol("*") || at_symbol("&") || at_symbol(":")) {
            char op = current_.text[0];
            advance();
            lhs = make_binary(op, std::move(lhs), parse_factor());
        }
        return lhs;
    }

    std::unique_ptr<Expr> parse_factor() {
        auto base = parse_atom();
        if (at_symbol("^")) {
            advance();
            if (current_.kind != Token::Kind::Int) fail("expected integer power");
            auto exponent = std::make_unique<Expr>();
            exponent->kind = Expr::Kind::Int;
            exponent->line = current_.line;
            exponent->column = current_.column;
            exponent->number = current_.number;
            advance();
            return make_binary('^', std::move(base), std::move(exponent));
        }
        return base;
    }

    std::unique_ptr<Expr> parse_atom() {
        auto e = std::make_unique<Expr>();
        e->line = current_.line;
        e->column = current_.column;
        if (current_.kind == Token::Kind::Int) {
            e->kind = Expr::Kind::Int;
            e->number = current_.number;
            advance();
            return e;
        }
        if (at_symbol("(")) {
            advance();
            auto inner = parse_expr();
            expect_symbol(")");
            return inner;
        }
        if (at_symbol("<")) return parse_ideal_literal();
        if (current_.kind == Token::Kind::Ident) {
            e->name = current_.text;
            advance();
            if (at_symbol("(")) {
                e->kind = Expr::Kind::Call;
                advance();
                if (!at_symbol(")")) {
                    e->args.push_back(parse_expr());
                    while (at_symbol(",")) {
                        advance();
                        e->args.push_back(parse_expr());
                    }
                }
                expect_symbol(")");
                return e;
            }
            e->kind = Expr::Kind::Ident;
            return e;
        }
        fail("expected an expression");
    }

    // mono := "1" | var { "*" var } ;  var := "x" INT [ "^" INT ]
    std::vector<std::pair<int, int>> parse_mono() {
        std::vector<std::pair<int, int>> factors;
        if (current_.kind == Token::Kind::Int && current_.number == 1) {
            advance();
            return factors;
        }
        for (;;) {
            if (current_.kind != Token::Kind::Ident || current_.text.size() < 2 ||
                current_.text[0] != 'x' ||
                !std::all_of(current_.text.begin() + 1, current_.text.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                fail("expected a variable like x1");
            int var = std::stoi(current_.text.substr(1));
            if (var < 1) fail("variable indices are 1-based");
            advance();
            int exponent = 1;
            if (at_symbol("^")) {
                advance();
                if (current_.kind != Token::Kind::Int) fail("expected exponent");
                exponent = static_cast<int>(current_.number);
                advance();
            }
            factors.push_back({var, exponent});
            if (!at_symbol("*")) break;
            advance();
        }
        return factors;
    }

    std::unique_ptr<Expr> parse_ideal_literal() {
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::IdealLit;
        e->line = current_.line;
        e->column = current_.column;
        expect_symbol("<");
        if (current_.kind == Token::Kind::Int && current_.number == 0) {
            advance();  // "<0>": the zero ideal
        } else {
            e->literal.push_back(parse_mono());
            while (at_symbol(",")) {
                advance();
                e->literal.push_back(parse_mono());
            }
        }
        expect_symbol(">");
        return e;
    }

    Lexer lexer_;
    Token current_;
    std::optional<Token> peeked_;
};

const MonomialIdeal& as_ideal(const Value& v, const Expr& at) {
    if (const auto* p = std::get_if<MonomialIdeal>(&v)) return *p;
    throw PreconditionError("expected an ideal at line " + std::to_string(at.line));
}

long long as_int(const Value& v, const Expr& at) {
    if (const auto* p = std::get_if<long long>(&v)) return *p;
    throw PreconditionError("expected an integer at line " + std::to_string(at.line));
}

const PolarizedIdeal& as_polarized(const Value& v, const Expr& at) {
    if (const auto* p = std::get_if<PolarizedIdeal>(&v)) return *p;
    throw PreconditionError("expected a polarized ideal at line " + std::to_string(at.line));
}

MonomialPrime as_prime(const Value& v, const Expr& at) {
    const MonomialIdeal& ideal = as_ideal(v, at);
    VarSet vars;
    for (const auto& g : ideal.gens()) {
        if (g.degree() != 1)
            throw PreconditionError("expected a monomial prime at line " +
                                    std::to_string(at.line));
        vars.add(g.support().min_element());
    }
    return {vars};
}

}  // namespace

Program parse(const std::string& text) { return Parser(text).parse_program(); }

MonomialIdeal Session::literal_to_ideal(const Expr& expr) {
    int max_var = 0;
    for (const auto& mono : expr.literal)
        for (const auto& [var, exp] : mono) max_var = std::max(max_var, var);
    if (nvars_ == 0) nvars_ = max_var;  // infer the ambient ring
    if (max_var > nvars_)
        throw PreconditionError("variable x" + std::to_string(max_var) +
                                " exceeds ring size " + std::to_string(nvars_));
    std::vector<Monomial> gens;
    for (const auto& mono : expr.literal) {
        std::vector<int> e(nvars_, 0);
        for (const auto& [var, exp] : mono) e[var - 1] += exp;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(nvars_, std::move(gens));
}

Value Session::evaluate(const Expr& expr) {
    switch (expr.kind) {
        case Expr::Kind::Int:
            return expr.number;
        case Expr::Kind::IdealLit:
            return literal_to_ideal(expr);
        case Expr::Kind::Ident: {
            auto it = bindings_.find(expr.name);
            if (it == bindings_.end())
                throw PreconditionError("unknown name '" + expr.name + "' at line " +
                                        std::to_string(expr.line));
            return it->second;
        }
        case Expr::Kind::Binary: {
            if (expr.op == '^') {
                Value bv = evaluate(*expr.args[0]);
                Value kv = evaluate(*expr.args[1]);
                return power(as_ideal(bv, expr), static_cast<int>(as_int(kv, expr)),
                             config_.limits);
            }
            Value lv = evaluate(*expr.args[0]);
            Value rv = evaluate(*expr.args[1]);
            const MonomialIdeal& lhs = as_ideal(lv, expr);
            const MonomialIdeal& rhs = as_ideal(rv, expr);
            switch (expr.op) {
                case '+': return sum(lhs, rhs);
                case '*': return product(lhs, rhs, config_.limits);
                case '&': return intersect(lhs, rhs, config_.limits);
                case ':': return colon(lhs, rhs, config_.limits);
            }
            throw PreconditionError("bad operator");
        }
        case Expr::Kind::Call:
            break;
    }

    const std::string& name = expr.name;
    auto arity = [&](std::size_t want) {
        if (expr.args.size() != want)
            throw PreconditionError(name + " expects " + std::to_string(want) +
                                    " argument(s) at line " + std::to_string(expr.line));
    };
    auto arg = [&](std::size_t i) { return evaluate(*expr.args[i]); };
    auto ideal_arg = [&](std::size_t i) { return as_ideal(arg(i), expr); };

    if (name == "gen") {
        if (expr.args.size() < 4 || expr.args.size() > 5)
            throw PreconditionError("gen(class, n, max_deg, max_gens [, seed])");
        if (expr.args[0]->kind != Expr::Kind::Ident)
            throw PreconditionError("gen: first argument must be a class name");
        auto cls = ideal_class_from_string(expr.args[0]->name);
        if (!cls) throw PreconditionError("gen: unknown class '" + expr.args[0]->name + "'");
        long long n = as_int(arg(1), expr), max_deg = as_int(arg(2), expr),
                  max_gens = as_int(arg(3), expr);
        std::uint64_t seed =
            expr.args.size() == 5 ? static_cast<std::uint64_t>(as_int(arg(4), expr))
                                  : config_.seed;
        MonomialIdeal result =
            gen_ideal(*cls, static_cast<int>(n), static_cast<int>(max_deg),
                      static_cast<int>(max_gens), seed, config_.characteristic);
        if (nvars_ == 0) nvars_ = result.nvars();
        if (result.nvars() != nvars_)
            throw AmbientMismatchError("generated ideal does not match the ring size");
        return result;
    }
    if (name == "closure") {
        arity(1);
        return integral_closure(ideal_arg(0), config_.limits);
    }
    if (name == "radical") {
        arity(1);
        return radical_direct(ideal_arg(0));
    }
    if (name == "saturate") {
        arity(2);
        return saturate(ideal_arg(0), ideal_arg(1), config_.limits);
    }
    if (name == "symbolic") {
        arity(2);
        return symbolic_power(ideal_arg(0), static_cast<int>(as_int(arg(1), expr)),
                              config_.limits);
    }
    if (name == "minprimes" || name == "assprimes") {
        arity(1);
        MonomialIdeal ideal = ideal_arg(0);
        auto primes = name == "minprimes" ? min_primes(ideal, config_.limits)
                                          : ass_primes(ideal, config_.limits);
        std::vector<MonomialIdeal> out;
        for (const auto& p : primes) out.push_back(prime_ideal(ideal.nvars(), p.vars));
        return out;
    }
    if (name == "jlocal") {
        arity(2);
        return localization_kernel(ideal_arg(0), as_prime(arg(1), expr));
    }
    if (name == "polarize") {
        arity(1);
        return polarize(ideal_arg(0));
    }
    if (name == "depolarize") {
        arity(1);
        return depolarize_enumerate(as_polarized(arg(0), expr), config_.limits);
    }
    if (name == "analyze") {
        arity(1);
        return analyze_structure(ideal_arg(0));
    }
    if (name == "is_borel_type") {
        arity(1);
        return is_borel_type(ideal_arg(0), config_.limits);
    }
    if (name == "is_borel_fixed") {
        arity(1);
        return is_borel_fixed(ideal_arg(0), config_.characteristic);
    }
    if (name == "is_strongly_stable") {
        arity(1);
        return is_strongly_stable(ideal_arg(0));
    }
    if (name == "is_lexsegment") {
        arity(1);
        return is_lexsegment(ideal_arg(0), config_.limits);
    }
    if (name == "is_universal_lexsegment") {
        arity(1);
        return is_universal_lexsegment(ideal_arg(0));
    }
    if (name == "is_sqfree_strongly_stable") {
        arity(1);
        return is_squarefree_strongly_stable(ideal_arg(0));
    }
    if (name == "is_stably_lexsegment") {
        arity(1);
        auto verdict = is_stably_lexsegment(ideal_arg(0), config_.k_max, config_.limits);
        return std::string(verdict.up_to_bound
                               ? "true-up-to-bound"
                               : "false(" + std::to_string(verdict.failing_k) + ")");
    }
    if (name == "almost_regular") {
        arity(1);
        return verify_almost_regular_sequence(ideal_arg(0), config_.limits).ok;
    }
    if (name == "depth_ul") {
        arity(1);
        return static_cast<long long>(depth_universal_lex(ideal_arg(0)));
    }
    throw PreconditionError("unknown operation '" + name + "' at line " +
                            std::to_string(expr.line));
}

std::optional<Value> Session::execute(const Stmt& stmt) {
    switch (stmt.kind) {
        case Stmt::Kind::Ring:
            if (stmt.ring_size < 0 || stmt.ring_size > VarSet::kMaxVars)
                throw PreconditionError("ring size out of range");
            nvars_ = stmt.ring_size;
            bindings_.clear();
            return std::nullopt;
        case Stmt::Kind::Assign:
            bindings_.insert_or_assign(stmt.target, evaluate(*stmt.expr));
            return std::nullopt;
        case Stmt::Kind::Eval:
            return evaluate(*stmt.expr);
    }
    return std::nullopt;
}

std::vector<Value> Session::run(const Program& program) {
    std::vector<Value> out;
    for (const auto& stmt : program)
        if (auto v = execute(stmt)) out.push_back(std::move(*v));
    return out;
}

std::vector<std::string> Session::operation_names() {
    return {"closure",   "radical",   "saturate", "symbolic", "minprimes",
            "assprimes", "jlocal",    "polarize", "depolarize", "analyze",
            "gen",       "is_borel_type", "is_borel_fixed", "is_strongly_stable",
            "is_lexsegment", "is_universal_lexsegment", "is_sqfree_strongly_stable",
            "is_stably_lexsegment", "almost_regular", "depth_ul"};
}

namespace {

std::string render_polarized_text(const PolarizedIdeal& p) {
    if (p.gens().empty()) return "<0>";
    std::string out = "<";
    bool first_gen = true;
    for (const auto& g : p.gens()) {
        if (!first_gen) out += ", ";
        first_gen = false;
        if (g.empty()) {
            out += "1";
            continue;
        }
        bool first = true;
        for (const auto& [var, slot] : g) {
            if (!first) out += "*";
            first = false;
            out += "x" + std::to_string(var + 1) + "_" + std::to_string(slot);
        }
    }
    return out + ">";
}

std::string render_varset(const VarSet& s) {
    std::string out = "{";
    bool first = true;
    for (int i : s.elements()) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(i + 1);
    }
    return out + "}";
}

}  // namespace

std::string render_text(const Value& value) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, std::string>) return v;
            else if constexpr (std::is_same_v<T, MonomialIdeal>) return render(v);
            else if constexpr (std::is_same_v<T, PolarizedIdeal>)
                return render_polarized_text(v);
            else if constexpr (std::is_same_v<T, SimplicialComplex>)
                return to_json(v);
            else if constexpr (std::is_same_v<T, std::vector<MonomialIdeal>>) {
                std::string out = "[";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) out += ", ";
                    out += render(v[i]);
                }
                return out + "]";
            } else {  // StructureReport
                std::string out = "W=" + render_varset(v.w) + " A=" + render_varset(v.a) +
                                  " B=" + render_varset(v.b) +
                                  " reconstructed=" + (v.reconstructed ? "true" : "false") +
                                  " candidate=" + render(v.candidate);
                return out;
            }
        },
        value);
}

std::string render_json(const Value& value) {
    using nlohmann::json;
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, bool>) return json(v).dump();
            else if constexpr (std::is_same_v<T, long long>) return json(v).dump();
            else if constexpr (std::is_same_v<T, std::string>) return json(v).dump();
            else if constexpr (std::is_same_v<T, MonomialIdeal>) return to_json(v);
            else if constexpr (std::is_same_v<T, PolarizedIdeal>) return to_json(v);
            else if constexpr (std::is_same_v<T, SimplicialComplex>) return to_json(v);
            else if constexpr (std::is_same_v<T, std::vector<MonomialIdeal>>) {
                json arr = json::array();
                for (const auto& ideal : v) arr.push_back(json::parse(to_json(ideal)));
                return arr.dump();
            } else {  // StructureReport
                json j;
                auto set_to_list = [](const VarSet& s) {
                    std::vector<int> out;
                    for (int i : s.elements()) out.push_back(i + 1);
                    return out;
                };
                j["W"] = set_to_list(v.w);
                j["A"] = set_to_list(v.a);
                j["B"] = set_to_list(v.b);
                j["reconstructed"] = v.reconstructed;
                j["candidate"] = json::parse(to_json(v.candidate));
                return j.dump();
            }
        },
        value);
}

}  // namespace mi::dsl
