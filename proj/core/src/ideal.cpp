#include "mi/ideal.hpp"

#include <algorithm>

namespace mi {

namespace {

void check_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw AmbientMismatchError();
}

void check_ambient(const MonomialIdeal& a, const Monomial& u) {
    if (a.nvars() != u.nvars()) throw AmbientMismatchError();
}

bool lex_desc(const Monomial& a, const Monomial& b) {
    return compare(a, b, Order::PureLex) > 0;
}

}  // namespace

MonomialIdeal MonomialIdeal::unit_ideal(int n) {
    return make(n, {Monomial::unit(n)});
}

MonomialIdeal MonomialIdeal::make(int n, std::vector<Monomial> raw) {
    for (const auto& m : raw)
        if (m.nvars() != n) throw AmbientMismatchError();

    std::sort(raw.begin(), raw.end(), [](const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return compare(a, b, Order::PureLex) > 0;
    });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    // ascending degree: a strict divisor always precedes its multiples
    std::vector<Monomial> minimal;
    for (const auto& m : raw) {
        bool redundant = false;
        for (const auto& g : minimal)
            if (divides(g, m)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(m);
    }

    std::sort(minimal.begin(), minimal.end(), lex_desc);
    MonomialIdeal out(n);
    out.gens_ = std::move(minimal);
    return out;
}

bool MonomialIdeal::is_squarefree() const {
    for (const auto& g : gens_)
        if (!g.is_squarefree()) return false;
    return true;
}

int MonomialIdeal::max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

bool contains(const MonomialIdeal& ideal, const Monomial& u) {
    check_ambient(ideal, u);
    for (const auto& g : ideal.gens())
        if (divides(g, u)) return true;
    return false;
}

bool contains(const MonomialIdeal& ideal, const MonomialIdeal& sub) {
    check_ambient(ideal, sub);
    for (const auto& g : sub.gens())
        if (!contains(ideal, g)) return false;
    return true;
}

MonomialIdeal sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    check_ambient(lhs, rhs);
    std::vector<Monomial> raw = lhs.gens();
    raw.insert(raw.end(), rhs.gens().begin(), rhs.gens().end());
    return MonomialIdeal::make(lhs.nvars(), std::move(raw));
}

MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs,
                      const Limits& limits) {
    check_ambient(lhs, rhs);
    std::size_t pairs = lhs.gens().size() * rhs.gens().size();
    if (pairs > limits.max_terms) throw ResourceLimitError();
    std::vector<Monomial> raw;
    raw.reserve(pairs);
    for (const auto& a : lhs.gens())
        for (const auto& b : rhs.gens()) raw.push_back(mul(a, b));
    return MonomialIdeal::make(lhs.nvars(), std::move(raw));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k, const Limits& limits) {
    if (k < 1) throw PreconditionError("power exponent must be >= 1");
    MonomialIdeal result = MonomialIdeal::unit_ideal(ideal.nvars());
    MonomialIdeal base = ideal;
    bool started = false;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) {
            result = started ? product(result, base, limits) : base;
            started = true;
        }
        if (e > 1) base = product(base, base, limits);
    }
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs,
                        const Limits& limits) {
    check_ambient(lhs, rhs);
    std::size_t pairs = lhs.gens().size() * rhs.gens().size();
    if (pairs > limits.max_terms) throw ResourceLimitError();
    std::vector<Monomial> raw;
    raw.reserve(pairs);
    for (const auto& a : lhs.gens())
        for (const auto& b : rhs.gens()) raw.push_back(lcm(a, b));
    return MonomialIdeal::make(lhs.nvars(), std::move(raw));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v) {
    check_ambient(ideal, v);
    std::vector<Monomial> raw;
    raw.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) raw.push_back(div_clipped(g, v));
    return MonomialIdeal::make(ideal.nvars(), std::move(raw));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by,
                    const Limits& limits) {
    check_ambient(ideal, by);
    if (by.is_zero()) throw ZeroDivisorError();
    MonomialIdeal result = colon(ideal, by.gens()[0]);
    for (std::size_t i = 1; i < by.gens().size(); ++i)
        result = intersect(result, colon(ideal, by.gens()[i]), limits);
    return result;
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by,
                       const Limits& limits) {
    check_ambient(ideal, by);
    if (by.is_zero()) throw ZeroDivisorError();
    MonomialIdeal current = ideal;
    for (;;) {
        MonomialIdeal next = colon(current, by, limits);
        if (next == current) return current;
        current = std::move(next);
    }
}

MonomialIdeal radical_direct(const MonomialIdeal& ideal) {
    std::vector<Monomial> raw;
    raw.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) raw.push_back(g.squarefree_part());
    return MonomialIdeal::make(ideal.nvars(), std::move(raw));
}

MonomialIdeal set_var_zero(const MonomialIdeal& ideal, int j) {
    if (j < 0 || j >= ideal.nvars()) throw IndexError();
    std::vector<Monomial> raw;
    raw.push_back(Monomial::variable(ideal.nvars(), j));
    for (const auto& g : ideal.gens())
        if (g.exp(j) == 0) raw.push_back(g);
    return MonomialIdeal::make(ideal.nvars(), std::move(raw));
}

std::vector<int> exponent_vector(const MonomialIdeal& ideal) {
    std::vector<int> a(ideal.nvars(), 0);
    for (const auto& g : ideal.gens())
        for (int i = 0; i < ideal.nvars(); ++i) a[i] = std::max(a[i], g.exps()[i]);
    return a;
}

MonomialIdeal prime_ideal(int n, const VarSet& vars) {
    std::vector<Monomial> raw;
    for (int i : vars.elements()) raw.push_back(Monomial::variable(n, i));
    return MonomialIdeal::make(n, std::move(raw));
}

MonomialIdeal maximal_ideal(int n) { return prime_ideal(n, VarSet::full(n)); }

namespace {

// drop coordinate j; valid when no generator involves x_j
MonomialIdeal project_out(const MonomialIdeal& ideal, int j) {
    std::vector<Monomial> raw;
    for (const auto& g : ideal.gens()) {
        if (g.exp(j) > 0) continue;  // the adjoined x_j generator
        std::vector<int> e = g.exps();
        e.erase(e.begin() + j);
        raw.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(ideal.nvars() - 1, std::move(raw));
}

}  // namespace

AlmostRegularReport verify_almost_regular_sequence(const MonomialIdeal& ideal,
                                                   const Limits& limits) {
    AlmostRegularReport report;
    MonomialIdeal current = ideal;
    for (int i = ideal.nvars() - 1; i >= 0; --i) {
        int last = current.nvars() - 1;
        Monomial x = Monomial::variable(current.nvars(), last);
        // finite-length kernel: (I : x) subseteq I : m^infty
        MonomialIdeal quotient = colon(current, x);
        MonomialIdeal sat = saturate(current, maximal_ideal(current.nvars()), limits);
        bool ok = contains(sat, quotient);
        report.steps.push_back({i, ok});
        report.ok = report.ok && ok;
        current = project_out(set_var_zero(current, last), last);
    }
    return report;
}

std::string render(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return "<0>";
    std::string out = "<";
    for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
        if (i) out += ", ";
        out += render(ideal.gens()[i]);
    }
    out += ">";
    return out;
}

}  // namespace mi
