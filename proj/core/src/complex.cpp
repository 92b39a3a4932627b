#include "mi/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace mi {

bool SimplicialComplex::is_face(const VarSet& a) const {
    for (const auto& nf : minimal_nonfaces)
        if (nf.subset_of(a)) return false;
    return true;
}

namespace {

void sort_antichain(std::vector<VarSet>& sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<VarSet> minimal_elements(std::vector<VarSet> sets) {
    sort_antichain(sets);
    std::vector<VarSet> out;
    for (const auto& s : sets) {
        bool dominated = false;
        for (const auto& t : sets)
            if (t != s && t.subset_of(s)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    return out;
}

void check_proper_nonzero(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw PreconditionError("zero ideal rejected");
    if (ideal.is_unit()) throw PreconditionError("unit ideal rejected");
}

}  // namespace

std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& family,
                                         const Limits& limits) {
    // Berge's incremental construction with antichain filtering
    std::vector<VarSet> current{VarSet{}};
    for (const auto& s : family) {
        std::vector<VarSet> next;
        for (const auto& t : current) {
            if (t.intersects(s)) {
                next.push_back(t);
            } else {
                for (int v : s.elements()) {
                    VarSet extended = t;
                    extended.add(v);
                    next.push_back(extended);
                }
            }
            if (next.size() > limits.max_terms)
                throw ResourceLimitError("transversal enumeration cap");
        }
        current = minimal_elements(std::move(next));
    }
    return current;
}

SimplicialComplex eliminating_complex(const MonomialIdeal& ideal, const Limits& limits) {
    check_proper_nonzero(ideal);
    std::vector<VarSet> supports;
    supports.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) supports.push_back(g.support());
    SimplicialComplex c;
    c.n = ideal.nvars();
    c.minimal_nonfaces = minimal_transversals(supports, limits);
    sort_antichain(c.minimal_nonfaces);
    return c;
}

std::vector<MonomialPrime> min_primes(const MonomialIdeal& ideal, const Limits& limits) {
    std::vector<MonomialPrime> out;
    for (const auto& b : eliminating_complex(ideal, limits).minimal_nonfaces)
        out.push_back({b});
    return out;
}

MonomialIdeal localization_kernel(const MonomialIdeal& ideal, const MonomialPrime& p) {
    std::vector<Monomial> raw;
    raw.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) raw.push_back(restrict_to(g, p.vars));
    return MonomialIdeal::make(ideal.nvars(), std::move(raw));
}

MonomialIdeal stanley_reisner(const SimplicialComplex& complex) {
    std::vector<Monomial> raw;
    for (const auto& b : complex.minimal_nonfaces) {
        std::vector<int> e(complex.n, 0);
        for (int i : b.elements()) e[i] = 1;
        raw.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(complex.n, std::move(raw));
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex, const Limits& limits) {
    // facets of the dual are complements of minimal nonfaces, so the
    // dual's minimal nonfaces are the minimal transversals of ours
    SimplicialComplex dual;
    dual.n = complex.n;
    dual.minimal_nonfaces = minimal_transversals(complex.minimal_nonfaces, limits);
    sort_antichain(dual.minimal_nonfaces);
    return dual;
}

MonomialIdeal radical_via_dual(const MonomialIdeal& ideal, const Limits& limits) {
    return stanley_reisner(alexander_dual(eliminating_complex(ideal, limits), limits));
}

namespace {

struct Splitter {
    const Limits& limits;
    std::unordered_map<std::string, std::vector<MonomialIdeal>> memo;
    std::size_t visited = 0;

    std::vector<MonomialIdeal> split(const MonomialIdeal& ideal) {
        std::string key = render(ideal);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (++visited > limits.max_terms)
            throw ResourceLimitError("decomposition cap");

        const Monomial* mixed = nullptr;
        for (const auto& g : ideal.gens())
            if (!g.is_pure_power()) {
                mixed = &g;
                break;
            }
        std::vector<MonomialIdeal> components;
        if (!mixed) {
            components.push_back(ideal);
        } else {
            // g = a * b with coprime non-unit factors splits
            // I = (I + <a>) cap (I + <b>)
            int n = ideal.nvars();
            int j = mixed->support().min_element();
            Monomial a = Monomial::variable(n, j, mixed->exp(j));
            Monomial b = div_exact(*mixed, a);
            for (const Monomial& piece : {a, b}) {
                std::vector<Monomial> raw = ideal.gens();
                raw.push_back(piece);
                for (const auto& c : split(MonomialIdeal::make(n, std::move(raw))))
                    components.push_back(c);
            }
        }
        memo.emplace(std::move(key), components);
        return components;
    }
};

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal,
                                                     const Limits& limits) {
    check_proper_nonzero(ideal);
    Splitter splitter{limits, {}, 0};
    std::vector<MonomialIdeal> components = splitter.split(ideal);

    std::sort(components.begin(), components.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) {
                  return render(a) < render(b);
              });
    components.erase(std::unique(components.begin(), components.end()), components.end());

    // a component is redundant iff another component is contained in it
    // (irreducible monomial ideals are intersection-prime)
    std::vector<MonomialIdeal> kept;
    for (std::size_t i = 0; i < components.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < components.size(); ++j)
            if (i != j && contains(components[i], components[j])) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(components[i]);
    }
    return kept;
}

std::vector<MonomialPrime> ass_primes(const MonomialIdeal& ideal, const Limits& limits) {
    std::vector<VarSet> supports;
    for (const auto& c : irreducible_decomposition(ideal, limits)) {
        VarSet s;
        for (const auto& g : c.gens()) s = s.unite(g.support());
        supports.push_back(s);
    }
    sort_antichain(supports);
    std::vector<MonomialPrime> out;
    for (const auto& s : supports) out.push_back({s});
    return out;
}

bool is_borel_type_via_ass(const MonomialIdeal& ideal, const Limits& limits) {
    if (ideal.is_zero() || ideal.is_unit()) return true;
    for (const auto& p : ass_primes(ideal, limits)) {
        int r = p.vars.count();
        if (p.vars != VarSet::full(r)) return false;
    }
    return true;
}

}  // namespace mi
