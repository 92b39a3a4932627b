#include "mi/generate.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mi {

namespace {

using Rng = std::mt19937_64;

int rand_in(Rng& rng, int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Monomial random_monomial(Rng& rng, int n, int max_deg) {
    int d = rand_in(rng, 1, max_deg);
    std::vector<int> e(n, 0);
    for (int t = 0; t < d; ++t) ++e[rng() % n];
    return Monomial(std::move(e));
}

Monomial random_squarefree(Rng& rng, int n, int max_deg) {
    int d = rand_in(rng, 1, std::min(n, max_deg));
    std::vector<int> e(n, 0);
    for (int t = 0; t < d;) {
        int i = static_cast<int>(rng() % n);
        if (e[i] == 0) {
            e[i] = 1;
            ++t;
        }
    }
    return Monomial(std::move(e));
}

MonomialIdeal staircase(Rng& rng, int n, int max_deg, int max_gens) {
    int m = rand_in(rng, 1, std::min(n, max_gens));
    std::vector<Monomial> gens;
    int base = 0;  // sum of (a_j - 1) so far
    for (int i = 0; i < m; ++i) {
        int budget = max_deg - base;
        if (budget < 1) break;
        int ai = rand_in(rng, 1, std::min(3, budget));
        std::vector<int> e(n, 0);
        for (int j = 0; j < i; ++j) e[j] = gens[j].exps()[j] - 1;
        e[i] = ai;
        gens.emplace_back(std::move(e));
        base += ai - 1;
    }
    return MonomialIdeal::make(n, std::move(gens));
}

MonomialIdeal lex_segments(Rng& rng, int n, int max_deg, int max_gens) {
    std::vector<Monomial> raw;
    int pieces = rand_in(rng, 1, 2);
    for (int t = 0; t < pieces; ++t) {
        int d = rand_in(rng, 1, max_deg);
        auto all = monomials_of_degree(n, d, 100000);
        int len = rand_in(rng, 1, std::min<int>(static_cast<int>(all.size()), 2 * max_gens));
        raw.insert(raw.end(), all.begin(), all.begin() + len);
    }
    return MonomialIdeal::make(n, std::move(raw));
}

// fixed point of the supplied exchange moves, starting from seeds
template <typename Moves>
MonomialIdeal closure_under(int n, std::vector<Monomial> seeds, Moves moves) {
    std::set<std::vector<int>> members;
    for (const auto& s : seeds) members.insert(s.exps());
    for (;;) {
        MonomialIdeal ideal = MonomialIdeal::make(n, seeds);
        bool grew = false;
        for (const auto& g : ideal.gens())
            for (const auto& v : moves(ideal, g))
                if (!contains(ideal, v) && members.insert(v.exps()).second) {
                    seeds.push_back(v);
                    grew = true;
                }
        if (!grew) return ideal;
    }
}

MonomialIdeal strongly_stable_closure(Rng& rng, int n, int max_deg, int max_gens) {
    std::vector<Monomial> seeds;
    for (int t = rand_in(rng, 1, max_gens); t > 0; --t)
        seeds.push_back(random_monomial(rng, n, max_deg));
    return closure_under(n, std::move(seeds),
                         [n](const MonomialIdeal&, const Monomial& g) {
                             std::vector<Monomial> out;
                             for (int j = 1; j < n; ++j) {
                                 if (g.exp(j) == 0) continue;
                                 Monomial base = div_exact(g, Monomial::variable(n, j));
                                 for (int i = 0; i < j; ++i)
                                     out.push_back(mul(base, Monomial::variable(n, i)));
                             }
                             return out;
                         });
}

MonomialIdeal borel_fixed_closure(Rng& rng, int n, int max_deg, int max_gens, int p) {
    std::vector<Monomial> seeds;
    for (int t = rand_in(rng, 1, max_gens); t > 0; --t)
        seeds.push_back(random_monomial(rng, n, max_deg));
    return closure_under(n, std::move(seeds),
                         [n, p](const MonomialIdeal&, const Monomial& g) {
                             std::vector<Monomial> out;
                             for (int j = 1; j < n; ++j) {
                                 int t = g.exp(j);
                                 for (int s = 1; s <= t; ++s) {
                                     if (!binomial_nonzero_mod_p(t, s, p)) continue;
                                     Monomial base =
                                         div_exact(g, Monomial::variable(n, j, s));
                                     for (int i = 0; i < j; ++i)
                                         out.push_back(
                                             mul(base, Monomial::variable(n, i, s)));
                                 }
                             }
                             return out;
                         });
}

MonomialIdeal squarefree_stable_closure(Rng& rng, int n, int max_deg, int max_gens) {
    std::vector<Monomial> seeds;
    for (int t = rand_in(rng, 1, max_gens); t > 0; --t)
        seeds.push_back(random_squarefree(rng, n, max_deg));
    return closure_under(n, std::move(seeds),
                         [n](const MonomialIdeal&, const Monomial& g) {
                             std::vector<Monomial> out;
                             for (int i = 1; i < n; ++i) {
                                 if (g.exp(i) == 0) continue;
                                 Monomial base = div_exact(g, Monomial::variable(n, i));
                                 for (int j = 0; j < i; ++j)
                                     if (g.exp(j) == 0)
                                         out.push_back(mul(base, Monomial::variable(n, j)));
                             }
                             return out;
                         });
}

MonomialIdeal borel_type_instance(Rng& rng, int n, int max_deg, int max_gens) {
    MonomialIdeal ss = strongly_stable_closure(rng, n, max_deg, max_gens);
    if (rng() % 2)  // a principal <x1^e> factor is itself of Borel type
        ss = product(ss, MonomialIdeal::make(n, {Monomial::variable(n, 0, rand_in(rng, 1, 2))}));
    std::vector<Monomial> l_gens;
    for (int t = rand_in(rng, 1, 2); t > 0; --t)
        l_gens.push_back(random_monomial(rng, n, max_deg));
    MonomialIdeal result = colon(ss, MonomialIdeal::make(n, std::move(l_gens)));
    if (result.is_zero() || result.is_unit()) return ss;
    return result;
}

MonomialIdeal stably_lexsegment_instance(Rng& rng, int n, int max_deg, int max_gens) {
    if (n == 2) return lex_segments(rng, n, max_deg, max_gens);
    // x1^a * m^b: lexsegment in every power
    int a = rand_in(rng, 0, std::min(2, max_deg));
    int b = rand_in(rng, a == 0 ? 1 : 0, std::max(1, std::min(2, max_deg - a)));
    MonomialIdeal result = MonomialIdeal::make(n, {Monomial::variable(n, 0, std::max(a, 0))});
    for (int t = 0; t < b; ++t) result = product(result, maximal_ideal(n));
    return result;
}

}  // namespace

MonomialIdeal gen_ideal(IdealClass cls, int n, int max_deg, int max_gens,
                        std::uint64_t seed, Characteristic ch) {
    if (n < 1 || max_deg < 1 || max_gens < 1)
        throw PreconditionError("generator parameters must be >= 1");
    Rng rng(seed);
    switch (cls) {
        case IdealClass::UniversalLexsegment:
            return staircase(rng, n, max_deg, max_gens);
        case IdealClass::Lexsegment:
            return lex_segments(rng, n, max_deg, max_gens);
        case IdealClass::StronglyStable:
            return strongly_stable_closure(rng, n, max_deg, max_gens);
        case IdealClass::BorelFixed:
            return ch.is_zero()
                       ? strongly_stable_closure(rng, n, max_deg, max_gens)
                       : borel_fixed_closure(rng, n, max_deg, max_gens, ch.value());
        case IdealClass::BorelType:
            return borel_type_instance(rng, n, max_deg, max_gens);
        case IdealClass::SquarefreeStronglyStable:
            return squarefree_stable_closure(rng, n, max_deg, max_gens);
        case IdealClass::StablyLexsegment:
            return stably_lexsegment_instance(rng, n, max_deg, max_gens);
    }
    throw PreconditionError("unknown ideal class");
}

}  // namespace mi
