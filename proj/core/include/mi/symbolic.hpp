#ifndef MI_SYMBOLIC_HPP
#define MI_SYMBOLIC_HPP

#include "mi/complex.hpp"
#include "mi/ideal.hpp"

namespace mi {

// Intersection over the minimal primes of the k-th powers of the
// localization kernels J(I, P).
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int k, const Limits& limits = {});

// Oracle route: intersection of J(I^k, P) over the minimal primes of I.
MonomialIdeal symbolic_power_via_power_kernels(const MonomialIdeal& ideal, int k,
                                               const Limits& limits = {});

// Squarefree route: intersection of P^k over the minimal primes.
MonomialIdeal symbolic_power_squarefree(const MonomialIdeal& ideal, int k,
                                        const Limits& limits = {});

// Equality of the symbolic and ordinary powers, with the associated
// prime certificate Ass(I^k) subseteq Ass(I) cross-checked.
struct SymbolicOrdinaryVerdict {
    bool equal;
    bool ass_certificate;  // must match `equal`
};
SymbolicOrdinaryVerdict symbolic_equals_ordinary(const MonomialIdeal& ideal, int k,
                                                 const Limits& limits = {});

}  // namespace mi

#endif
