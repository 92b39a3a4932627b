#include "mi/predicates.hpp"

#include <algorithm>
#include <string>

namespace mi {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Characteristic::Characteristic(int value) : value_(value) {
    if (value != 0 && !is_prime(value))
        throw PreconditionError("characteristic must be 0 or a prime");
}

const char* to_string(IdealClass c) {
    switch (c) {
        case IdealClass::BorelType: return "borel-type";
        case IdealClass::BorelFixed: return "borel-fixed";
        case IdealClass::StronglyStable: return "strongly-stable";
        case IdealClass::Lexsegment: return "lexsegment";
        case IdealClass::UniversalLexsegment: return "universal-lexsegment";
        case IdealClass::SquarefreeStronglyStable: return "squarefree-strongly-stable";
        case IdealClass::StablyLexsegment: return "stably-lexsegment";
    }
    return "?";
}

std::optional<IdealClass> ideal_class_from_string(const std::string& name) {
    std::string s = name;
    std::replace(s.begin(), s.end(), '_', '-');
    for (IdealClass c : {IdealClass::BorelType, IdealClass::BorelFixed,
                         IdealClass::StronglyStable, IdealClass::Lexsegment,
                         IdealClass::UniversalLexsegment,
                         IdealClass::SquarefreeStronglyStable,
                         IdealClass::StablyLexsegment})
        if (s == to_string(c)) return c;
    return std::nullopt;
}

bool is_borel_type(const MonomialIdeal& ideal, const Limits& limits) {
    int n = ideal.nvars();
    VarSet initial;
    for (int i = 0; i < n; ++i) {
        initial.add(i);
        MonomialIdeal by_var = saturate(ideal, prime_ideal(n, VarSet::of({i})), limits);
        MonomialIdeal by_segment = saturate(ideal, prime_ideal(n, initial), limits);
        if (!(by_var == by_segment)) return false;
    }
    return true;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
    for (const auto& g : ideal.gens())
        for (int j = 1; j < ideal.nvars(); ++j) {
            if (g.exp(j) == 0) continue;
            Monomial base = div_exact(g, Monomial::variable(ideal.nvars(), j));
            for (int i = 0; i < j; ++i)
                if (!contains(ideal, mul(base, Monomial::variable(ideal.nvars(), i))))
                    return false;
        }
    return true;
}

bool binomial_nonzero_mod_p(int t, int s, int p) {
    // Lucas: C(t, s) != 0 mod p iff every base-p digit of s is <= that of t
    while (s > 0 || t > 0) {
        if (s % p > t % p) return false;
        s /= p;
        t /= p;
    }
    return true;
}

bool is_borel_fixed(const MonomialIdeal& ideal, Characteristic ch) {
    if (ch.is_zero()) return is_strongly_stable(ideal);
    int p = ch.value();
    int n = ideal.nvars();
    for (const auto& g : ideal.gens())
        for (int j = 1; j < n; ++j) {
            int t = g.exp(j);
            for (int s = 1; s <= t; ++s) {
                if (!binomial_nonzero_mod_p(t, s, p)) continue;
                Monomial base = div_exact(g, Monomial::variable(n, j, s));
                for (int i = 0; i < j; ++i)
                    if (!contains(ideal, mul(base, Monomial::variable(n, i, s))))
                        return false;
            }
        }
    return true;
}

namespace {

// degree-d monomials of S in descending pure lex
void enumerate_degree(int n, int d, std::vector<int>& partial,
                      std::vector<Monomial>& out, std::size_t cap) {
    if (static_cast<int>(partial.size()) == n - 1) {
        partial.push_back(d);
        if (out.size() >= cap) throw ResourceLimitError("degree enumeration cap");
        out.emplace_back(partial);
        partial.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        partial.push_back(e);
        enumerate_degree(n, d - e, partial, out, cap);
        partial.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d, std::size_t cap) {
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0) out.push_back(Monomial::unit(0));
        return out;
    }
    std::vector<int> partial;
    enumerate_degree(n, d, partial, out, cap);
    return out;
}

bool is_lexsegment(const MonomialIdeal& ideal, const Limits& limits) {
    // checking up to the max generator degree suffices: the shadow of a
    // lex segment is a lex segment
    for (int d = 1; d <= ideal.max_gen_degree(); ++d) {
        bool boundary_seen = false;
        std::vector<int> partial;
        for (const auto& m : monomials_of_degree(ideal.nvars(), d, limits.max_terms)) {
            bool in = contains(ideal, m);
            if (in && boundary_seen) return false;
            if (!in) boundary_seen = true;
        }
    }
    return true;
}

std::optional<std::vector<int>> universal_lexsegment_witness(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit()) return std::vector<int>{};
    int n = ideal.nvars();
    int m = static_cast<int>(ideal.gens().size());
    if (m > n) return std::nullopt;
    std::vector<int> a(m, 0);
    // gens() is already sorted descending pure lex
    for (int i = 0; i < m; ++i) {
        const Monomial& u = ideal.gens()[i];
        a[i] = u.exp(i);
        if (a[i] < 1) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            int expected = j < i ? a[j] - 1 : (j == i ? a[i] : 0);
            if (u.exp(j) != expected) return std::nullopt;
        }
    }
    return a;
}

bool is_universal_lexsegment(const MonomialIdeal& ideal) {
    return universal_lexsegment_witness(ideal).has_value();
}

bool is_universal_lexsegment_by_exchange(const MonomialIdeal& ideal) {
    int n = ideal.nvars();
    for (const auto& u : ideal.gens())
        for (int j = 1; j < n; ++j) {
            int bj = u.exp(j);
            if (bj == 0) continue;
            Monomial base = div_exact(u, Monomial::variable(n, j, bj));
            for (int i = 0; i < j; ++i)
                if (!contains(ideal, mul(base, Monomial::variable(n, i))))
                    return false;
        }
    return true;
}

bool is_squarefree_strongly_stable(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        throw PreconditionError("squarefree input required");
    int n = ideal.nvars();
    for (const auto& u : ideal.gens())
        for (int i = 1; i < n; ++i) {
            if (u.exp(i) == 0) continue;
            Monomial base = div_exact(u, Monomial::variable(n, i));
            for (int j = 0; j < i; ++j) {
                if (u.exp(j) > 0) continue;
                if (!contains(ideal, mul(base, Monomial::variable(n, j)))) return false;
            }
        }
    return true;
}

StablyLexsegmentVerdict is_stably_lexsegment(const MonomialIdeal& ideal, int k_max,
                                             const Limits& limits) {
    if (k_max < 1) throw PreconditionError("k_max must be >= 1");
    for (int k = 1; k <= k_max; ++k)
        if (!is_lexsegment(power(ideal, k, limits), limits)) return {false, k};
    return {true, 0};
}

int depth_universal_lex(const MonomialIdeal& ideal) {
    if (!is_universal_lexsegment(ideal))
        throw PreconditionError("universal lexsegment input required");
    return ideal.nvars() - static_cast<int>(ideal.gens().size());
}

}  // namespace mi
