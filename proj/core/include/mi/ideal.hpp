#ifndef MI_IDEAL_HPP
#define MI_IDEAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mi/monomial.hpp"

namespace mi {

// Caps on intermediate generator-set sizes.  Product and power expansion
// blows up combinatorially; hitting the cap raises ResourceLimitError
// instead of exhausting memory.
struct Limits {
    std::size_t max_terms = 1'000'000;
};

// Monomial ideal in canonical form: the minimal generating set, sorted
// descending under pure lex.  Structural equality is ideal equality.
// Zero ideal <=> no generators; unit ideal <=> single unit generator.
class MonomialIdeal {
public:
    MonomialIdeal() = default;                // zero ideal of the n = 0 ring
    explicit MonomialIdeal(int n) : n_(n) {}  // zero ideal
    static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
    static MonomialIdeal unit_ideal(int n);
    // minimalize: drops every monomial strictly divisible by another
    static MonomialIdeal make(int n, std::vector<Monomial> raw);

    int nvars() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool is_proper() const { return !is_unit(); }
    bool is_squarefree() const;
    int max_gen_degree() const;  // 0 for the zero ideal

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_ = 0;
    std::vector<Monomial> gens_;
};

bool contains(const MonomialIdeal& ideal, const Monomial& u);
// J subseteq I
bool contains(const MonomialIdeal& ideal, const MonomialIdeal& sub);

MonomialIdeal sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs,
                      const Limits& limits = {});
// binary exponentiation, minimalized after every product
MonomialIdeal power(const MonomialIdeal& ideal, int k, const Limits& limits = {});
MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs,
                        const Limits& limits = {});

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v);
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by,
                    const Limits& limits = {});
// least fixed point of L -> L : by
MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by,
                       const Limits& limits = {});

// squarefree parts of the generators, minimalized
MonomialIdeal radical_direct(const MonomialIdeal& ideal);

// image of ideal + <x_j> (0-based j), realized in the same ambient ring
MonomialIdeal set_var_zero(const MonomialIdeal& ideal, int j);

// componentwise max of generator exponents
std::vector<int> exponent_vector(const MonomialIdeal& ideal);

// <x_i : i in vars>
MonomialIdeal prime_ideal(int n, const VarSet& vars);
// <x_1, ..., x_n>
MonomialIdeal maximal_ideal(int n);

// Almost-regularity of x_n, ..., x_1 on S/I via the finite-length
// criterion (I : x_i) subseteq I : m^infty, shrinking the ring one
// variable at a time.
struct AlmostRegularStep {
    int variable;  // 0-based index in the original ring
    bool almost_regular;
};
struct AlmostRegularReport {
    bool ok = true;
    std::vector<AlmostRegularStep> steps;
};
AlmostRegularReport verify_almost_regular_sequence(const MonomialIdeal& ideal,
                                                   const Limits& limits = {});

// "<x1^3, x1*x2>"; "<0>" for the zero ideal
std::string render(const MonomialIdeal& ideal);

}  // namespace mi

#endif
