#ifndef MI_GENERATE_HPP
#define MI_GENERATE_HPP

#include <cstdint>

#include "mi/predicates.hpp"

namespace mi {

// Deterministic seeded instance generator: same parameters and seed
// always produce the same ideal, and the result passes the predicate of
// the requested class.  PRNG is std::mt19937_64 seeded directly, so CI
// failures replay exactly.
//
// Construction per class:
//   universal-lexsegment  staircase from a random a-vector
//   lexsegment            sum of random per-degree lex-initial segments
//   strongly-stable       exchange closure of random monomials
//   borel-fixed           digit-criterion closure (char p; char 0 falls
//                         back to strongly stable)
//   borel-type            colon of a strongly stable ideal by a random
//                         monomial ideal
//   squarefree-strongly-stable  squarefree exchange closure
//   stably-lexsegment     lexsegment in two variables
MonomialIdeal gen_ideal(IdealClass cls, int n, int max_deg, int max_gens,
                        std::uint64_t seed, Characteristic ch = 0);

}  // namespace mi

#endif
