#ifndef MI_CLOSURE_HPP
#define MI_CLOSURE_HPP

#include <optional>

#include "mi/ideal.hpp"

namespace mi {

// Exact feasibility of: exists lambda >= 0, sum lambda = 1,
// sum lambda_g * exp(g) <= exp(u) componentwise over the generators.
// Rational arithmetic throughout; no floating point.
bool is_integral_over(const Monomial& u, const MonomialIdeal& ideal);

// Minimal generators of the monomials with exponent in the Newton
// polyhedron conv(exponents) + R_{>=0}^n.
MonomialIdeal integral_closure(const MonomialIdeal& ideal, const Limits& limits = {});

// Brute-force oracle: least k <= k_max with u^k in I^k.
std::optional<int> closure_oracle(const Monomial& u, const MonomialIdeal& ideal,
                                  int k_max, const Limits& limits = {});

}  // namespace mi

#endif
