#include <doctest.h>

#include <random>

#include "mi/generate.hpp"
#include "mi/predicates.hpp"

using namespace mi;

namespace {

// the lexsegment-squared counterexample ideal
MonomialIdeal lex_example() {
    return MonomialIdeal::make(3, {Monomial({3, 0, 0}), Monomial({2, 1, 0}),
                                   Monomial({2, 0, 1}), Monomial({1, 2, 0}),
                                   Monomial({1, 1, 1})});
}

}  // namespace

TEST_CASE("characteristic validation") {
    CHECK(Characteristic(0).is_zero());
    CHECK(Characteristic(7).value() == 7);
    CHECK_THROWS_AS(Characteristic(4), PreconditionError);
    CHECK_THROWS_AS(Characteristic(-1), PreconditionError);
}

TEST_CASE("class names round-trip") {
    for (auto c : {IdealClass::BorelType, IdealClass::BorelFixed, IdealClass::StronglyStable,
                   IdealClass::Lexsegment, IdealClass::UniversalLexsegment,
                   IdealClass::SquarefreeStronglyStable, IdealClass::StablyLexsegment})
        CHECK(ideal_class_from_string(to_string(c)) == c);
    CHECK(!ideal_class_from_string("nonsense"));
}

TEST_CASE("borel type") {
    CHECK(is_borel_type(MonomialIdeal::make(2, {Monomial({3, 0}), Monomial({2, 1}),
                                                Monomial({1, 2})})));
    CHECK(!is_borel_type(MonomialIdeal::make(3, {Monomial({2, 0, 2}), Monomial({1, 1, 2})})));
    CHECK(is_borel_type(MonomialIdeal::unit_ideal(3)));
    CHECK(is_borel_type(MonomialIdeal::zero(3)));
}

TEST_CASE("strongly stable") {
    CHECK(is_strongly_stable(MonomialIdeal::make(2, {Monomial({3, 0}), Monomial({2, 1}),
                                                     Monomial({1, 2})})));
    CHECK(!is_strongly_stable(MonomialIdeal::make(2, {Monomial({3, 0}), Monomial({1, 1})})));
    CHECK(is_strongly_stable(MonomialIdeal::make(1, {Monomial({1})})));
}

TEST_CASE("borel fixed in characteristic 2") {
    auto I = MonomialIdeal::make(2, {Monomial({3, 0}), Monomial({1, 2})});
    CHECK(is_borel_fixed(I, 2));
    CHECK(!is_borel_fixed(MonomialIdeal::make(2, {Monomial({3, 0}), Monomial({1, 1})}), 2));
}

TEST_CASE("borel fixed in characteristic 0 is strong stability") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        std::vector<Monomial> raw;
        for (int s = 0; s < 3; ++s) {
            std::vector<int> e(4, 0);
            for (int d = 0; d < 3; ++d) ++e[rng() % 4];
            raw.emplace_back(std::move(e));
        }
        auto I = MonomialIdeal::make(4, std::move(raw));
        CHECK(is_borel_fixed(I, 0) == is_strongly_stable(I));
    }
}

TEST_CASE("lucas binomial criterion") {
    // C(3,1) = 3 is odd, C(2,1) = 2 is even
    CHECK(binomial_nonzero_mod_p(3, 1, 2));
    CHECK(!binomial_nonzero_mod_p(2, 1, 2));
    CHECK(binomial_nonzero_mod_p(4, 4, 2));
    CHECK(!binomial_nonzero_mod_p(3, 1, 3));  // C(3,1) = 3
}

TEST_CASE("lucas matches direct binomials mod p") {
    for (int p : {2, 3, 5}) {
        for (int t = 0; t <= 12; ++t) {
            // build row t of Pascal's triangle mod p
            std::vector<long long> c(t + 1, 0);
            c[0] = 1;
            for (int i = 1; i <= t; ++i) {
                std::vector<long long> next(t + 1, 0);
                next[0] = 1;
                for (int s = 1; s <= i; ++s) next[s] = (c[s - 1] + c[s]) % p;
                c = next;
            }
            for (int s = 0; s <= t; ++s)
                CHECK(binomial_nonzero_mod_p(t, s, p) == (c[s] % p != 0));
        }
    }
}

TEST_CASE("lexsegment") {
    CHECK(is_lexsegment(lex_example()));
    CHECK(!is_lexsegment(power(lex_example(), 2)));
    CHECK(!is_lexsegment(MonomialIdeal::make(3, {Monomial({2, 0, 0}), Monomial({1, 1, 0}),
                                                 Monomial({0, 2, 0})})));
}

TEST_CASE("universal lexsegment") {
    auto w = universal_lexsegment_witness(MonomialIdeal::make(2, {Monomial({1, 0}),
                                                                  Monomial({0, 1})}));
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{1, 1});
    CHECK(!is_universal_lexsegment(MonomialIdeal::make(2, {Monomial({3, 0}), Monomial({2, 1}),
                                                           Monomial({1, 2})})));
    auto w2 = universal_lexsegment_witness(MonomialIdeal::make(2, {Monomial({2, 0}),
                                                                   Monomial({1, 2})}));
    REQUIRE(w2.has_value());
    CHECK(*w2 == std::vector<int>{2, 2});
}

TEST_CASE("universal lexsegment: staircase and exchange routes agree") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 500; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        MonomialIdeal I = (t % 3 == 0)
                              ? gen_ideal(IdealClass::UniversalLexsegment, n, 5, n,
                                          rng())
                              : [&] {
                                    std::vector<Monomial> raw;
                                    for (int s = 0; s < 3; ++s) {
                                        std::vector<int> e(n, 0);
                                        for (int d = 0; d < 4; ++d) ++e[rng() % n];
                                        raw.emplace_back(std::move(e));
                                    }
                                    return MonomialIdeal::make(n, std::move(raw));
                                }();
        CHECK(is_universal_lexsegment(I) == is_universal_lexsegment_by_exchange(I));
    }
}

TEST_CASE("squarefree strongly stable") {
    auto J = MonomialIdeal::make(5, {Monomial({1, 1, 1, 0, 0}), Monomial({1, 1, 0, 1, 0}),
                                     Monomial({1, 0, 0, 1, 1})});
    CHECK(!is_squarefree_strongly_stable(J));
    CHECK(is_squarefree_strongly_stable(MonomialIdeal::make(1, {Monomial({1})})));
    CHECK_THROWS_AS(is_squarefree_strongly_stable(MonomialIdeal::make(1, {Monomial({2})})),
                    PreconditionError);
}

TEST_CASE("stably lexsegment verdicts") {
    auto v1 = is_stably_lexsegment(
        MonomialIdeal::make(2, {Monomial({2, 0}), Monomial({1, 1})}), 4);
    CHECK(v1.up_to_bound);
    auto v2 = is_stably_lexsegment(lex_example(), 2);
    CHECK(!v2.up_to_bound);
    CHECK(v2.failing_k == 2);
    CHECK(is_stably_lexsegment(MonomialIdeal::make(1, {Monomial({1})}), 5).up_to_bound);
}

TEST_CASE("depth for universal lexsegment") {
    CHECK(depth_universal_lex(MonomialIdeal::make(3, {Monomial({1, 0, 0}),
                                                      Monomial({0, 1, 0})})) == 1);
    CHECK(depth_universal_lex(MonomialIdeal::make(1, {Monomial({1})})) == 0);
    CHECK_THROWS_AS(depth_universal_lex(MonomialIdeal::make(
                        2, {Monomial({3, 0}), Monomial({2, 1}), Monomial({1, 2})})),
                    PreconditionError);
}

TEST_CASE("class hierarchy implications") {
    std::mt19937_64 rng(31);
    auto imply = [](bool a, bool b) { return !a || b; };
    for (int t = 0; t < 150; ++t) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<Monomial> raw;
        for (int s = 0; s < 1 + static_cast<int>(rng() % 3); ++s) {
            std::vector<int> e(n, 0);
            for (int d = 0; d < 1 + static_cast<int>(rng() % 4); ++d) ++e[rng() % n];
            raw.emplace_back(std::move(e));
        }
        // mix in guaranteed members of the thin classes
        MonomialIdeal I = (t % 4 == 0)
                              ? gen_ideal(static_cast<IdealClass>(1 + t / 4 % 4), n, 4, 3, rng())
                              : MonomialIdeal::make(n, std::move(raw));
        bool ul = is_universal_lexsegment(I);
        bool lex = is_lexsegment(I);
        bool ss = is_strongly_stable(I);
        bool bf = is_borel_fixed(I, 0);
        bool bt = is_borel_type(I);
        CHECK(imply(ul, lex));
        CHECK(imply(lex, ss));
        CHECK(imply(ss, bf));
        CHECK(imply(bf, bt));
    }
}
