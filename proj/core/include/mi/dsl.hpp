#ifndef MI_DSL_HPP
#define MI_DSL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mi/complex.hpp"
#include "mi/ideal.hpp"
#include "mi/polarize.hpp"
#include "mi/predicates.hpp"

namespace mi::dsl {

struct Config {
    Characteristic characteristic = 0;
    int k_max = 5;
    Limits limits;
    std::uint64_t seed = 0;
};

// result of evaluating one statement
using Value = std::variant<bool, long long, std::string, MonomialIdeal, PolarizedIdeal,
                           SimplicialComplex, std::vector<MonomialIdeal>, StructureReport>;

std::string render_text(const Value& value);
std::string render_json(const Value& value);

struct Expr {
    enum class Kind { Ident, Int, IdealLit, Call, Binary };
    Kind kind;
    int line = 0, column = 0;

    std::string name;                       // Ident / Call
    long long number = 0;                   // Int
    char op = 0;                            // Binary: + * & : ^
    std::vector<std::unique_ptr<Expr>> args;  // Call args / Binary operands
    // IdealLit: one generator per entry, as 1-based (var, exponent) pairs
    std::vector<std::vector<std::pair<int, int>>> literal;
};

struct Stmt {
    enum class Kind { Ring, Assign, Eval };
    Kind kind;
    int ring_size = 0;       // Ring
    std::string target;      // Assign
    std::unique_ptr<Expr> expr;  // Assign / Eval
};

using Program = std::vector<Stmt>;

// throws ParseError with line/column on malformed input
Program parse(const std::string& text);

class Session {
public:
    explicit Session(Config config = {}) : config_(std::move(config)) {}

    const Config& config() const { return config_; }
    int nvars() const { return nvars_; }

    // returns a value for expression statements, nullopt for ring/assign
    std::optional<Value> execute(const Stmt& stmt);
    std::vector<Value> run(const Program& program);
    Value evaluate(const Expr& expr);

    // operation names reachable from the DSL, for coverage checks
    static std::vector<std::string> operation_names();

private:
    MonomialIdeal literal_to_ideal(const Expr& expr);

    Config config_;
    int nvars_ = 0;  // 0: no ring declared yet
    std::map<std::string, Value> bindings_;
};

}  // namespace mi::dsl

#endif
