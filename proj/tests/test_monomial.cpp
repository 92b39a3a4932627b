#include <doctest.h>

#include <random>

#include "mi/monomial.hpp"

using namespace mi;

namespace {

Monomial rand_mono(std::mt19937_64& rng, int n, int max_exp) {
    std::vector<int> e(n);
    for (int& x : e) x = static_cast<int>(rng() % (max_exp + 1));
    return Monomial(std::move(e));
}

}  // namespace

TEST_CASE("pure lex comparison") {
    CHECK(compare(Monomial({3, 0}), Monomial({2, 1}), Order::PureLex) > 0);
    CHECK(compare(Monomial({0, 0}), Monomial({0, 0}), Order::PureLex) == 0);
    // x1^3*x3^3 > x1^2*x2^2*x3^2
    CHECK(compare(Monomial({3, 0, 3}), Monomial({2, 2, 2}), Order::PureLex) > 0);
    CHECK_THROWS_AS(compare(Monomial({1}), Monomial({1, 0}), Order::PureLex),
                    AmbientMismatchError);
}

TEST_CASE("graded lex compares degree first") {
    CHECK(compare(Monomial({0, 2}), Monomial({1, 0}), Order::GradedLex) > 0);
    CHECK(compare(Monomial({1, 1}), Monomial({0, 2}), Order::GradedLex) > 0);
}

TEST_CASE("restrict") {
    Monomial u({2, 1, 2});
    CHECK(restrict_to(u, VarSet::of({0})) == Monomial({2, 0, 0}));
    CHECK(restrict_to(u, VarSet::full(3)) == u);
    CHECK(restrict_to(Monomial({1, 1, 1}), VarSet()) == Monomial::unit(3));
    // restriction to a set and its complement multiply back to u
    VarSet a = VarSet::of({0, 2});
    CHECK(mul(restrict_to(u, a), restrict_to(u, a.complement(3))) == u);
}

TEST_CASE("b_degree") {
    CHECK(b_degree(Monomial({2, 1, 2}), VarSet::of({0, 1})) == 3);
    CHECK(b_degree(Monomial({2, 1, 2}), VarSet()) == 0);
    CHECK(b_degree(Monomial({3}), VarSet::full(1)) == 3);
}

TEST_CASE("gcd, lcm, divides") {
    Monomial u({2, 0, 2}), v({1, 1, 2});
    CHECK(gcd(u, v) == Monomial({1, 0, 2}));
    CHECK(lcm(u, v) == Monomial({2, 1, 2}));
    CHECK(!divides(u, v));
    CHECK(divides(Monomial::unit(3), v));
    CHECK(divides(u, u));
}

TEST_CASE("gcd * lcm == u * v componentwise") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        Monomial u = rand_mono(rng, 5, 6), v = rand_mono(rng, 5, 6);
        CHECK(mul(gcd(u, v), lcm(u, v)) == mul(u, v));
        CHECK(divides(gcd(u, v), u));
        CHECK(divides(u, lcm(u, v)));
    }
}

TEST_CASE("pure lex is a total order") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Monomial u = rand_mono(rng, 6, 6), v = rand_mono(rng, 6, 6),
                 w = rand_mono(rng, 6, 6);
        int uv = compare(u, v, Order::PureLex);
        int vu = compare(v, u, Order::PureLex);
        CHECK(uv == -vu);
        CHECK((uv == 0) == (u == v));
        if (uv > 0 && compare(v, w, Order::PureLex) > 0)
            CHECK(compare(u, w, Order::PureLex) > 0);
    }
}

TEST_CASE("squarefree part keeps the support") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        Monomial u = rand_mono(rng, 5, 6);
        CHECK(u.squarefree_part().support() == u.support());
        CHECK(u.squarefree_part().is_squarefree());
    }
}

TEST_CASE("support and max_support") {
    Monomial u({0, 2, 0, 1});
    CHECK(u.support() == VarSet::of({1, 3}));
    CHECK(u.max_support() == 3);
    CHECK(Monomial::unit(4).max_support() == -1);
}

TEST_CASE("rendering") {
    CHECK(render(Monomial({3, 1, 0})) == "x1^3*x2");
    CHECK(render(Monomial::unit(3)) == "1");
    CHECK(render(Monomial({0, 0, 2})) == "x3^2");
}

TEST_CASE("div variants") {
    CHECK(div_exact(Monomial({3, 1}), Monomial({1, 0})) == Monomial({2, 1}));
    CHECK(div_clipped(Monomial({1, 2}), Monomial({3, 1})) == Monomial({0, 1}));
    CHECK(pow(Monomial({1, 2}), 3) == Monomial({3, 6}));
}
