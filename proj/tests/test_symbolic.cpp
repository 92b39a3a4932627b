#include <doctest.h>

#include <random>

#include "mi/generate.hpp"
#include "mi/predicates.hpp"
#include "mi/symbolic.hpp"

using namespace mi;

namespace {

MonomialIdeal identity_example() {
    return MonomialIdeal::make(3, {Monomial({2, 0, 2}), Monomial({1, 1, 2})});
}

MonomialIdeal rand_ideal(std::mt19937_64& rng, int n, int max_deg, int max_gens) {
    std::vector<Monomial> raw;
    int m = 1 + static_cast<int>(rng() % max_gens);
    for (int t = 0; t < m; ++t) {
        std::vector<int> e(n, 0);
        int d = 1 + static_cast<int>(rng() % max_deg);
        for (int s = 0; s < d; ++s) ++e[rng() % n];
        raw.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(n, std::move(raw));
}

}  // namespace

TEST_CASE("symbolic powers of the running example") {
    auto I = identity_example();
    for (int k = 1; k <= 3; ++k) {
        CHECK(symbolic_power(I, k) == MonomialIdeal::make(3, {Monomial({k, 0, 2 * k})}));
        auto verdict = symbolic_equals_ordinary(I, k);
        CHECK(!verdict.equal);
        CHECK(verdict.ass_certificate == verdict.equal);
    }
}

TEST_CASE("maximal ideal has symbolic equal to ordinary") {
    auto m2 = MonomialIdeal::make(2, {Monomial({1, 0}), Monomial({0, 1})});
    CHECK(symbolic_power(m2, 2) == power(m2, 2));
    CHECK(symbolic_equals_ordinary(m2, 2).equal);
    CHECK(!is_lexsegment(MonomialIdeal::make(3, {Monomial({2, 0, 0}), Monomial({1, 1, 0}),
                                                 Monomial({0, 2, 0})})));
}

TEST_CASE("principal ideals") {
    auto I = MonomialIdeal::make(2, {Monomial({1, 2})});
    for (int k = 1; k <= 3; ++k) CHECK(symbolic_equals_ordinary(I, k).equal);
    CHECK(symbolic_power(MonomialIdeal::make(1, {Monomial({1})}), 3) ==
          MonomialIdeal::make(1, {Monomial({3})}));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(symbolic_power(identity_example(), 0), PreconditionError);
    CHECK_THROWS_AS(symbolic_power(MonomialIdeal::zero(2), 1), PreconditionError);
    CHECK_THROWS_AS(symbolic_power(MonomialIdeal::unit_ideal(2), 1), PreconditionError);
    CHECK_THROWS_AS(symbolic_power_squarefree(identity_example(), 1), PreconditionError);
}

TEST_CASE("the two kernel routes agree") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 30; ++t) {
        auto I = rand_ideal(rng, 4, 3, 3);
        if (I.is_zero() || I.is_unit()) continue;
        for (int k = 1; k <= 3; ++k) {
            auto a = symbolic_power(I, k);
            CHECK(a == symbolic_power_via_power_kernels(I, k));
            CHECK(contains(a, power(I, k)));  // ordinary inside symbolic
        }
    }
}

TEST_CASE("squarefree route agrees on squarefree inputs") {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 30; ++t) {
        auto I = radical_direct(rand_ideal(rng, 4, 3, 4));
        if (I.is_zero() || I.is_unit()) continue;
        for (int k = 1; k <= 3; ++k)
            CHECK(symbolic_power_squarefree(I, k) == symbolic_power(I, k));
        CHECK(symbolic_power_squarefree(I, 1) == I);
    }
}

TEST_CASE("symbolic powers preserve the borel classes") {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 20; ++t) {
        auto bt = gen_ideal(IdealClass::BorelType, 4, 4, 3, rng());
        auto ss = gen_ideal(IdealClass::StronglyStable, 4, 4, 3, rng());
        auto bf = gen_ideal(IdealClass::BorelFixed, 4, 4, 3, rng(), 3);
        for (int k = 1; k <= 3; ++k) {
            if (!bt.is_unit() && !bt.is_zero()) CHECK(is_borel_type(symbolic_power(bt, k)));
            if (!ss.is_unit() && !ss.is_zero())
                CHECK(is_strongly_stable(symbolic_power(ss, k)));
            if (!bf.is_unit() && !bf.is_zero())
                CHECK(is_borel_fixed(symbolic_power(bf, k), 3));
        }
    }
}

TEST_CASE("symbolic powers of stably lexsegment ideals are lexsegment") {
    std::mt19937_64 rng(89);
    for (int t = 0; t < 20; ++t) {
        auto I = gen_ideal(IdealClass::StablyLexsegment, 3, 3, 3, rng());
        if (I.is_unit() || I.is_zero()) continue;
        if (!is_stably_lexsegment(I, 3).up_to_bound) continue;
        for (int k = 1; k <= 3; ++k) CHECK(is_lexsegment(symbolic_power(I, k)));
    }
}
