// mideal: command-line front end for the monomial ideal library.
//
//   mideal eval -e "ring 3; I = <x1^3, x1*x2^2>; I : <x2>;"
//   mideal run script.txt
//   mideal repl
//   mideal gen --class strongly_stable -n 4 --max-deg 4 --max-gens 3 --seed 7
//   mideal selftest

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mi/closure.hpp"
#include "mi/dsl.hpp"
#include "mi/generate.hpp"
#include "mi/json_io.hpp"
#include "mi/symbolic.hpp"

namespace {

struct Options {
    int characteristic = 0;
    int kmax = 5;
    std::size_t max_terms = 1'000'000;
    std::uint64_t seed = 0;
    std::string format = "text";
};

mi::dsl::Config make_config(const Options& opt) {
    mi::dsl::Config cfg;
    cfg.characteristic = mi::Characteristic(opt.characteristic);
    cfg.k_max = opt.kmax;
    cfg.limits.max_terms = opt.max_terms;
    cfg.seed = opt.seed;
    return cfg;
}

void print_value(const mi::dsl::Value& v, const std::string& format) {
    std::cout << (format == "json" ? mi::dsl::render_json(v) : mi::dsl::render_text(v))
              << "\n";
}

int exit_code_for(const mi::Error& e) {
    switch (e.code()) {
        case mi::ErrorCode::Parse: return 1;
        case mi::ErrorCode::ResourceLimit: return 3;
        default: return 2;
    }
}

int run_script(const std::string& text, const Options& opt) {
    try {
        mi::dsl::Session session(make_config(opt));
        for (const auto& value : session.run(mi::dsl::parse(text)))
            print_value(value, opt.format);
        return 0;
    } catch (const mi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int run_repl(const Options& opt) {
    mi::dsl::Session session(make_config(opt));
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        if (line == "quit" || line == "exit") break;
        if (line.back() != ';') line += ';';
        try {
            for (const auto& stmt : mi::dsl::parse(line))
                if (auto value = session.execute(stmt)) print_value(*value, opt.format);
        } catch (const mi::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
        }
    }
    return 0;
}

int run_gen(const std::string& class_name, int n, int max_deg, int max_gens,
            const Options& opt) {
    try {
        auto cls = mi::ideal_class_from_string(class_name);
        if (!cls) {
            std::cerr << "error: unknown class '" << class_name << "'\n";
            return 2;
        }
        mi::MonomialIdeal ideal = mi::gen_ideal(*cls, n, max_deg, max_gens, opt.seed,
                                                mi::Characteristic(opt.characteristic));
        print_value(ideal, opt.format);
        return 0;
    } catch (const mi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int run_selftest(const Options& opt) {
    using mi::MonomialIdeal;
    using mi::Monomial;
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
        if (!ok) ++failures;
    };
    (void)opt;

    {  // colon of a char-2 Borel-fixed ideal need not stay Borel-fixed
        auto I = MonomialIdeal::make(2, {Monomial({3, 0}), Monomial({1, 2})});
        auto x2 = MonomialIdeal::make(2, {Monomial({0, 1})});
        auto Q = colon(I, x2);
        check("borel-fixed char 2", mi::is_borel_fixed(I, 2));
        check("colon value", Q == MonomialIdeal::make(2, {Monomial({3, 0}), Monomial({1, 1})}));
        check("colon not borel-fixed", !mi::is_borel_fixed(Q, 2));
    }
    {  // square of a lexsegment ideal need not be lexsegment
        auto I = MonomialIdeal::make(3, {Monomial({3, 0, 0}), Monomial({2, 1, 0}),
                                         Monomial({2, 0, 1}), Monomial({1, 2, 0}),
                                         Monomial({1, 1, 1})});
        auto I2 = power(I, 2);
        check("lexsegment", mi::is_lexsegment(I));
        check("member of square", contains(I2, Monomial({2, 2, 2})));
        check("non-member of square", !contains(I2, Monomial({3, 0, 3})));
        check("square not lexsegment", !mi::is_lexsegment(I2));
    }
    {  // closure of the square picks up x1..x6 at k = 2
        auto I = MonomialIdeal::make(6, {Monomial({1, 1, 1, 0, 0, 0}), Monomial({1, 0, 0, 1, 1, 0}),
                                         Monomial({0, 1, 0, 1, 0, 1}), Monomial({0, 0, 1, 0, 1, 1})});
        Monomial u({1, 1, 1, 1, 1, 1});
        check("squarefree is closed", mi::integral_closure(I) == I);
        auto k = mi::closure_oracle(u, power(I, 2), 4);
        check("closure oracle k = 2", k && *k == 2);
        check("not in square of closure", !contains(power(mi::integral_closure(I), 2), u));
    }
    {  // symbolic vs ordinary powers
        auto I = MonomialIdeal::make(3, {Monomial({2, 0, 2}), Monomial({1, 1, 2})});
        for (int k = 1; k <= 3; ++k) {
            auto sym = mi::symbolic_power(I, k);
            bool ok = sym == MonomialIdeal::make(3, {Monomial({k, 0, 2 * k})}) &&
                      !mi::symbolic_equals_ordinary(I, k).equal;
            check(("symbolic power k = " + std::to_string(k)).c_str(), ok);
        }
    }
    {  // polarization
        auto I = MonomialIdeal::make(2, {Monomial({3, 0}), Monomial({2, 1}), Monomial({1, 2})});
        auto P = mi::polarize(I);
        check("polarize round trip", mi::depolarize(P) == I);
        check("polarize prefix closed", P.prefix_closed());
        // strongly stable but not universal lexsegment: the polarization
        // must NOT be squarefree strongly stable
        check("polarize not sqfree strongly stable", !mi::is_squarefree_strongly_stable(P));
        auto U = MonomialIdeal::make(2, {Monomial({3, 0}), Monomial({2, 2})});
        check("universal lexsegment polarizes sqfree strongly stable",
              mi::is_universal_lexsegment(U) &&
                  mi::is_squarefree_strongly_stable(mi::polarize(U)));
    }
    std::cout << (failures == 0 ? "selftest: all passed" : "selftest: FAILURES") << "\n";
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monomial ideal calculator"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--char", opt.characteristic, "coefficient characteristic (0 or prime)");
    app.add_option("--kmax", opt.kmax, "bound for stably-lexsegment checks");
    app.add_option("--max-terms", opt.max_terms, "cap on intermediate generator counts");
    app.add_option("--seed", opt.seed, "seed for generation");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string script, file;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a script given inline");
    eval_cmd->add_option("-e", script, "script text")->required();

    auto* run_cmd = app.add_subcommand("run", "evaluate a script file");
    run_cmd->add_option("file", file, "script file")->required();

    auto* repl_cmd = app.add_subcommand("repl", "interactive session");

    std::string class_name = "strongly_stable";
    int n = 3, max_deg = 4, max_gens = 4;
    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded instance");
    gen_cmd->add_option("--class", class_name, "ideal class");
    gen_cmd->add_option("-n", n, "number of variables");
    gen_cmd->add_option("--max-deg", max_deg, "maximum generator degree");
    gen_cmd->add_option("--max-gens", max_gens, "target generator count");

    auto* selftest_cmd = app.add_subcommand("selftest", "run the golden example suite");

    // global config flags may appear after the subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (*eval_cmd) return run_script(script, opt);
    if (*run_cmd) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot open " << file << "\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        return run_script(buf.str(), opt);
    }
    if (*repl_cmd) return run_repl(opt);
    if (*gen_cmd) return run_gen(class_name, n, max_deg, max_gens, opt);
    if (*selftest_cmd) return run_selftest(opt);
    return 0;
}
