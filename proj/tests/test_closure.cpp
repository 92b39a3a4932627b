#include <doctest.h>

#include <random>

#include "mi/closure.hpp"
#include "mi/complex.hpp"
#include "mi/generate.hpp"
#include "mi/predicates.hpp"

using namespace mi;

namespace {

MonomialIdeal not_equal_example() {
    return MonomialIdeal::make(6, {Monomial({1, 1, 1, 0, 0, 0}), Monomial({1, 0, 0, 1, 1, 0}),
                                   Monomial({0, 1, 0, 1, 0, 1}), Monomial({0, 0, 1, 0, 1, 1})});
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

TEST_CASE("squarefree ideals are integrally closed") {
    auto I = not_equal_example();
    CHECK(integral_closure(I) == I);
}

TEST_CASE("closure of the square picks up the long squarefree monomial") {
    auto I = not_equal_example();
    Monomial u({1, 1, 1, 1, 1, 1});
    CHECK(contains(integral_closure(power(I, 2)), u));
    CHECK(is_integral_over(u, power(I, 2)));
    auto k = closure_oracle(u, power(I, 2), 4);
    REQUIRE(k.has_value());
    CHECK(*k == 2);
    // strictness: u is not in the square of the closure of I
    CHECK(!contains(power(integral_closure(I), 2), u));
}

TEST_CASE("two squares pick up the mixed product") {
    auto I = MonomialIdeal::make(2, {Monomial({2, 0}), Monomial({0, 2})});
    CHECK(integral_closure(I) ==
          MonomialIdeal::make(2, {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})}));
    auto k = closure_oracle(Monomial({1, 1}), I, 4);
    REQUIRE(k.has_value());
    CHECK(*k == 2);
}

TEST_CASE("integral membership basics") {
    auto I = MonomialIdeal::make(2, {Monomial({2, 0}), Monomial({0, 2})});
    for (const auto& g : I.gens()) CHECK(is_integral_over(g, I));
    CHECK(!is_integral_over(Monomial::unit(2), I));
    CHECK_THROWS_AS(is_integral_over(Monomial({1, 1}), MonomialIdeal::zero(2)),
                    PreconditionError);
}

TEST_CASE("closure sandwich and idempotence") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 30; ++t) {
        auto I = rand_ideal(rng, 4, 4, 4);
        if (I.is_zero()) continue;
        auto cl = integral_closure(I);
        CHECK(contains(cl, I));
        CHECK(contains(radical_direct(I), cl));
        CHECK(integral_closure(cl) == cl);
    }
}

TEST_CASE("powers of the closure sit inside the closure of the power") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 15; ++t) {
        auto I = rand_ideal(rng, 3, 3, 3);
        if (I.is_zero()) continue;
        auto cl = integral_closure(I);
        for (int k = 2; k <= 3; ++k)
            CHECK(contains(integral_closure(power(I, k)), power(cl, k)));
    }
}

TEST_CASE("closure preserves minimal primes") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 30; ++t) {
        auto I = rand_ideal(rng, 4, 4, 4);
        if (I.is_zero() || I.is_unit()) continue;
        CHECK(min_primes(integral_closure(I)) == min_primes(I));
    }
}

TEST_CASE("closure preserves every class in the hierarchy") {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 25; ++t) {
        auto bt = gen_ideal(IdealClass::BorelType, 4, 4, 3, rng());
        CHECK(is_borel_type(integral_closure(bt)));
        auto ss = gen_ideal(IdealClass::StronglyStable, 4, 4, 3, rng());
        CHECK(is_strongly_stable(integral_closure(ss)));
        auto bf = gen_ideal(IdealClass::BorelFixed, 4, 4, 3, rng(), 2);
        CHECK(is_borel_fixed(integral_closure(bf), 2));
        auto lex = gen_ideal(IdealClass::Lexsegment, 3, 4, 4, rng());
        CHECK(is_lexsegment(integral_closure(lex)));
        auto ul = gen_ideal(IdealClass::UniversalLexsegment, 4, 5, 4, rng());
        CHECK(integral_closure(ul) == ul);  // exact fixed point
    }
}

TEST_CASE("LP membership agrees with the power oracle") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 20; ++t) {
        auto I = rand_ideal(rng, 3, 3, 3);
        if (I.is_zero()) continue;
        for (int s = 0; s < 6; ++s) {
            std::vector<int> e(3);
            for (int& x : e) x = static_cast<int>(rng() % 4);
            Monomial u(std::move(e));
            bool lp = is_integral_over(u, I);
            auto k = closure_oracle(u, I, 6);
            if (k) CHECK(lp);  // oracle hit implies LP membership
            if (lp) CHECK(contains(integral_closure(I), u));
        }
    }
}
