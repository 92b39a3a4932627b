#ifndef MI_PREDICATES_HPP
#define MI_PREDICATES_HPP

#include <optional>
#include <vector>

#include "mi/ideal.hpp"

namespace mi {

// 0 or a prime p
class Characteristic {
public:
    Characteristic(int value = 0);  // NOLINT: implicit by design
    int value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

private:
    int value_;
};

enum class IdealClass {
    BorelType,
    BorelFixed,
    StronglyStable,
    Lexsegment,
    UniversalLexsegment,
    SquarefreeStronglyStable,
    StablyLexsegment,
};

const char* to_string(IdealClass c);
std::optional<IdealClass> ideal_class_from_string(const std::string& name);

// I : x_i^infty == I : <x_1..x_i>^infty for all i
bool is_borel_type(const MonomialIdeal& ideal, const Limits& limits = {});

// exchange moves x_i * (g / x_j), i < j, on minimal generators
bool is_strongly_stable(const MonomialIdeal& ideal);

// char 0 delegates to is_strongly_stable; char p uses the binomial
// digit criterion on the moves x_i^s * (g / x_j^s)
bool is_borel_fixed(const MonomialIdeal& ideal, Characteristic ch);

// in each degree up to the max generator degree, the degree-d monomials
// of I form an initial segment of the lex order
bool is_lexsegment(const MonomialIdeal& ideal, const Limits& limits = {});

// staircase shape u_i = x_i^{a_i} * prod_{j<i} x_j^{a_j - 1};
// returns the witness a-vector
std::optional<std::vector<int>> universal_lexsegment_witness(const MonomialIdeal& ideal);
bool is_universal_lexsegment(const MonomialIdeal& ideal);
// independent route: x_i * (u / x_j^{b_j}) in I on generators, i < j
bool is_universal_lexsegment_by_exchange(const MonomialIdeal& ideal);

// squarefree exchange x_j * (u / x_i) for j < i, x_j not dividing u;
// variables are taken in their natural order
bool is_squarefree_strongly_stable(const MonomialIdeal& ideal);

// bounded semi-decision over k = 1..k_max
struct StablyLexsegmentVerdict {
    bool up_to_bound;         // true: every power up to k_max is lexsegment
    int failing_k = 0;        // least failing k when up_to_bound is false
};
StablyLexsegmentVerdict is_stably_lexsegment(const MonomialIdeal& ideal, int k_max,
                                             const Limits& limits = {});

// n - |G_min(I)|; requires a universal lexsegment input
int depth_universal_lex(const MonomialIdeal& ideal);

// C(t, s) != 0 mod p via the base-p digit test
bool binomial_nonzero_mod_p(int t, int s, int p);

// all degree-d monomials of K[x_1..x_n] in descending pure lex
std::vector<Monomial> monomials_of_degree(int n, int d, std::size_t cap);

}  // namespace mi

#endif
