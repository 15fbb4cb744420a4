#include <catch2/catch_amalgamated.hpp>

#include "symscheme/lp.hpp"

using namespace symscheme;

TEST_CASE("simplex solves a textbook instance exactly")
{
    // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18
    std::vector<std::vector<Rat>> A = {{1, 0}, {0, 2}, {3, 2}};
    std::vector<Rat> b = {4, 12, 18}, c = {3, 5};
    SimplexResult r = simplex_max(A, b, c);
    CHECK(r.value == 36);
    CHECK(r.x == std::vector<Rat>{2, 6});
    // duals certify: b.y == value, A^T y >= c
    Rat by = 0;
    for (size_t i = 0; i < b.size(); ++i) by += b[i] * r.y[i];
    CHECK(by == 36);
}

TEST_CASE("trivial distance gives the whole space")
{
    for (auto [m, q] : std::vector<std::pair<int, long>>{{1, 3}, {2, 3}, {3, 3}, {2, 5}}) {
        LPResult res = lp_bound(m, q, 1);
        CHECK(res.optimum == Rat(ipow(q, m * (m + 1) / 2)));
    }
}

TEST_CASE("known optima with certificates")
{
    {
        LPInstance ins = lp_instance(2, 3, 2);
        LPResult res = lp_bound(2, 3, 2);
        CHECK(res.optimum == 9);
        CHECK(lp_certificate_check(ins, res));
    }
    {
        LPInstance ins = lp_instance(4, 3, 2);
        LPResult res = lp_bound(4, 3, 2);
        CHECK(res.optimum == bound_even_nonadditive(4, 3, 1));
        CHECK(lp_certificate_check(ins, res));
    }
    {
        LPInstance ins = lp_instance(2, 5, 2);
        LPResult res = lp_bound(2, 5, 2);
        CHECK(res.optimum == bound_even_nonadditive(2, 5, 1));
        CHECK(lp_certificate_check(ins, res));
    }
}

TEST_CASE("monotone in the distance and above every construction")
{
    Rat prev;
    for (int d = 1; d <= 4; ++d) {
        Rat v = lp_bound(4, 3, d).optimum;
        if (d > 1) CHECK(v <= prev);
        prev = v;
    }
    CHECK(Rat(ipow(3, 3)) <= lp_bound(3, 3, 3).optimum);   // Y_1(0,3,3) has size 27
    CHECK(Rat(ipow(3, 8)) <= lp_bound(4, 3, 2).optimum);   // Y_1(1,4,3)
    CHECK(Rat(ipow(5, 2)) <= lp_bound(2, 5, 2).optimum);   // Y_1(0,2,5)
}

TEST_CASE("certificate check rejects a corrupted optimum")
{
    LPInstance ins = lp_instance(2, 3, 2);
    LPResult res = lp_bound(2, 3, 2);
    res.optimum += 1;
    CHECK(!lp_certificate_check(ins, res));
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(lp_bound(3, 3, 0), error);
    CHECK_THROWS_AS(lp_bound(3, 3, 4), error);
}
