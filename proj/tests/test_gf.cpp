#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "symscheme/gf.hpp"

using namespace symscheme;

TEST_CASE("prime field arithmetic matches integers mod p")
{
    FieldSpec F(7, 1);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            CHECK(F.add(a, b) == (a + b) % 7);
            CHECK(F.mul(a, b) == a * b % 7);
            CHECK(F.sub(a, b) == ((a - b) % 7 + 7) % 7);
        }
    for (int a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("extension field axioms hold exhaustively in F_9")
{
    FieldSpec F(3, 2);
    REQUIRE(F.q() == 9);
    for (int a = 0; a < 9; ++a) {
        CHECK(F.add(a, 0) == a);
        CHECK(F.mul(a, 1) == a);
        CHECK(F.add(a, F.neg(a)) == 0);
        for (int b = 0; b < 9; ++b) {
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            for (int c = 0; c < 9; ++c) {
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            }
        }
    }
    for (int a = 1; a < 9; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("frobenius is x -> x^p and fixes exactly F_p")
{
    FieldSpec F(3, 2);
    int fixed = 0;
    for (int a = 0; a < 9; ++a) {
        CHECK(F.frobenius_p(a) == F.pow(a, 3));
        if (F.frobenius_p(a) == a) ++fixed;
    }
    CHECK(fixed == 3);
}

TEST_CASE("quadratic character against explicit squares")
{
    for (long q : {3L, 5L, 7L, 9L, 25L}) {
        auto [p, e] = factor_prime_power(q);
        FieldSpec F = field_create(p, e);
        std::set<int> squares;
        for (int a = 1; a < q; ++a) squares.insert(F.mul(a, a));
        CHECK(F.eta(0) == 0);
        for (int a = 1; a < q; ++a)
            CHECK(F.eta(a) == (squares.count(a) ? 1 : -1));
        CHECK(F.eta_minus_one() == (q % 4 == 1 ? 1 : -1));
    }
}

TEST_CASE("absolute trace is F_p-linear and balanced")
{
    FieldSpec F(3, 2);
    std::vector<int> hist(3, 0);
    for (int a = 0; a < 9; ++a) {
        ++hist[F.absolute_trace(a)];
        for (int b = 0; b < 9; ++b)
            CHECK(F.absolute_trace(F.add(a, b)) ==
                  (F.absolute_trace(a) + F.absolute_trace(b)) % 3);
    }
    CHECK(hist == std::vector<int>{3, 3, 3});
}

TEST_CASE("tower trace and primitive element")
{
    FieldSpec F(3, 1);
    F.configure_tower(4);
    // trace(x) = x + x^q + x^{q^2} + x^{q^3} lands in F_q and is surjective
    std::vector<int> hist(3, 0);
    TowerElem x = F.tower_primitive();
    TowerElem cur = F.tone();
    long order = 0;
    do {
        cur = F.tmul(cur, x);
        ++order;
    } while (!(cur == F.tone()));
    CHECK(order == 80); // q^m - 1
    TowerElem y = F.tzero();
    ++hist[F.trace(y)];
    cur = F.tone();
    for (long i = 0; i < 80; ++i) {
        ++hist[F.trace(cur)];
        cur = F.tmul(cur, x);
    }
    CHECK(hist[0] == 27);
    CHECK(hist[1] == 27);
    CHECK(hist[2] == 27);
}

TEST_CASE("tower frobenius has order m and fixes the base field")
{
    FieldSpec F(3, 1);
    F.configure_tower(3);
    TowerElem x = F.tower_primitive();
    TowerElem y = x;
    for (int i = 0; i < 3; ++i) y = F.tfrobenius(y);
    CHECK(y == x);
    for (FqElem c = 0; c < 3; ++c) CHECK(F.tfrobenius(F.embed(c)) == F.embed(c));
}

TEST_CASE("field construction rejects bad parameters")
{
    CHECK_THROWS_AS(FieldSpec(4, 1), error);
    CHECK_THROWS_AS(FieldSpec(2, 3), error);
    CHECK_THROWS_AS(FieldSpec(3, 2, std::vector<long>{0, 0, 1}), error); // x^2 reducible
}

TEST_CASE("canonical character is a nontrivial additive character")
{
    FieldSpec F(3, 2);
    std::complex<double> sum = 0;
    for (int a = 0; a < 9; ++a) sum += F.canonical_character(a);
    CHECK(std::abs(sum) < 1e-9);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            CHECK(std::abs(F.canonical_character(F.add(a, b)) -
                           F.canonical_character(a) * F.canonical_character(b)) < 1e-9);
}
