#ifndef MI_COMPLEX_HPP
#define MI_COMPLEX_HPP

#include <vector>

#include "mi/ideal.hpp"

namespace mi {

// Vertex set {0..n-1}; stored normal form is the antichain of minimal
// nonfaces.  Singletons are not required to be faces.
struct SimplicialComplex {
    int n = 0;
    std::vector<VarSet> minimal_nonfaces;  // sorted, antichain

    bool is_face(const VarSet& a) const;
    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

struct MonomialPrime {
    VarSet vars;
    friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
    friend auto operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
        return a.vars <=> b.vars;
    }
};

// minimal transversals (hitting sets) of a family of variable sets
std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& family,
                                         const Limits& limits = {});

// faces are the A with some generator support disjoint from A; minimal
// nonfaces are the minimal transversals of the generator supports
SimplicialComplex eliminating_complex(const MonomialIdeal& ideal, const Limits& limits = {});

// one prime per minimal nonface of the eliminating complex
std::vector<MonomialPrime> min_primes(const MonomialIdeal& ideal, const Limits& limits = {});

// J(I, P): generators of I restricted to the variables of P, minimalized
MonomialIdeal localization_kernel(const MonomialIdeal& ideal, const MonomialPrime& p);

MonomialIdeal stanley_reisner(const SimplicialComplex& complex);
SimplicialComplex alexander_dual(const SimplicialComplex& complex, const Limits& limits = {});

// Stanley-Reisner ideal of the dual of the eliminating complex; always
// equals radical_direct
MonomialIdeal radical_via_dual(const MonomialIdeal& ideal, const Limits& limits = {});

// irredundant decomposition into ideals generated by pure variable powers
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal,
                                                     const Limits& limits = {});

// radical supports of the irredundant irreducible components
std::vector<MonomialPrime> ass_primes(const MonomialIdeal& ideal, const Limits& limits = {});

// Borel type via the shape of the associated primes; cross-check for
// the saturation-based definition
bool is_borel_type_via_ass(const MonomialIdeal& ideal, const Limits& limits = {});

}  // namespace mi

#endif
