#include <doctest.h>

#include <algorithm>

#include "mi/generate.hpp"
#include "mi/predicates.hpp"

using namespace mi;

TEST_CASE("generation is deterministic") {
    for (auto cls : {IdealClass::BorelType, IdealClass::StronglyStable,
                     IdealClass::Lexsegment, IdealClass::UniversalLexsegment,
                     IdealClass::SquarefreeStronglyStable, IdealClass::StablyLexsegment}) {
        CHECK(gen_ideal(cls, 4, 4, 3, 12345) == gen_ideal(cls, 4, 4, 3, 12345));
    }
}

TEST_CASE("every generated instance passes its predicate") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        CHECK(is_universal_lexsegment(
            gen_ideal(IdealClass::UniversalLexsegment, 4, 5, 4, s)));
        CHECK(is_lexsegment(gen_ideal(IdealClass::Lexsegment, 3, 4, 4, s)));
        CHECK(is_strongly_stable(gen_ideal(IdealClass::StronglyStable, 4, 4, 3, s)));
        CHECK(is_borel_fixed(gen_ideal(IdealClass::BorelFixed, 4, 4, 3, s, 2), 2));
        CHECK(is_borel_type(gen_ideal(IdealClass::BorelType, 4, 4, 3, s)));
        CHECK(is_squarefree_strongly_stable(
            gen_ideal(IdealClass::SquarefreeStronglyStable, 5, 4, 3, s)));
    }
}

TEST_CASE("stably lexsegment instances stay lexsegment through the fourth power") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        auto I = gen_ideal(IdealClass::StablyLexsegment, 3, 3, 3, s);
        CHECK(is_stably_lexsegment(I, 4).up_to_bound);
        auto J = gen_ideal(IdealClass::Lexsegment, 2, 4, 4, s);
        CHECK(is_stably_lexsegment(J, 4).up_to_bound);  // two variables suffice
    }
}

TEST_CASE("exchange closure of a single seed") {
    // the smallest strongly stable ideal containing x2*x3, by fixed point
    std::vector<Monomial> members = {Monomial({0, 1, 1})};
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t t = 0; t < members.size(); ++t)
            for (int j = 1; j < 3; ++j) {
                if (members[t].exp(j) == 0) continue;
                for (int i = 0; i < j; ++i) {
                    Monomial v = mul(div_exact(members[t], Monomial::variable(3, j)),
                                     Monomial::variable(3, i));
                    if (std::find(members.begin(), members.end(), v) == members.end()) {
                        members.push_back(v);
                        grew = true;
                    }
                }
            }
    }
    auto E = MonomialIdeal::make(3, members);
    CHECK(E == MonomialIdeal::make(3, {Monomial({2, 0, 0}), Monomial({1, 1, 0}),
                                       Monomial({1, 0, 1}), Monomial({0, 2, 0}),
                                       Monomial({0, 1, 1})}));
    CHECK(is_strongly_stable(E));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(gen_ideal(IdealClass::Lexsegment, 0, 3, 3, 0), PreconditionError);
    CHECK_THROWS_AS(gen_ideal(IdealClass::Lexsegment, 3, 0, 3, 0), PreconditionError);
    CHECK_THROWS_AS(gen_ideal(IdealClass::Lexsegment, 3, 3, 0, 0), PreconditionError);
}
