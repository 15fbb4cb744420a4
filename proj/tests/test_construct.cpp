#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "symscheme/construct.hpp"

using namespace symscheme;

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(ConstructionParams({2, 0, 4, 3}).validate(), error); // gcd(s,m) != 1
    CHECK_THROWS_AS(ConstructionParams({1, 2, 4, 3}).validate(), error); // 2t+1 > m
    CHECK_NOTHROW(ConstructionParams({1, 1, 4, 3}).validate());
    CHECK_NOTHROW(ConstructionParams({3, 2, 5, 3}).validate());
}

TEST_CASE("sizes and minimum rank over the test matrix")
{
    for (auto P : {ConstructionParams{1, 0, 3, 3}, ConstructionParams{1, 1, 4, 3},
                   ConstructionParams{1, 0, 4, 3}, ConstructionParams{1, 0, 2, 5}}) {
        auto [p, e] = factor_prime_power(P.q);
        FieldSpec F = field_create(p, e);
        FormSet Y = construct_Y(F, P);
        CodeReport rep = verify_code_parameters(F, Y, P);
        CHECK(rep.pass);
        CHECK(rep.size == ipow(P.q, (long)P.m * (P.t + 1)));
        CHECK(rep.min_nonzero_rank >= P.m - 2 * P.t);
        CHECK(Y.size() == bound_additive(P.m, P.q, P.m - 2 * P.t));
    }
}

TEST_CASE("gram matrices are independent of the Frobenius stride sign")
{
    // s and m-s give congruent sets with the same inner distribution
    FieldSpec F(3, 1);
    FormSet Y1 = construct_Y(F, ConstructionParams{1, 1, 5, 3});
    FormSet Y2 = construct_Y(F, ConstructionParams{4, 1, 5, 3});
    CHECK(inner_distribution(Y1) == inner_distribution(Y2));
}

TEST_CASE("puncturing drops one dimension and keeps the code property")
{
    FieldSpec F(3, 1);
    FormSet Y = construct_Y(F, ConstructionParams{1, 1, 6, 3});
    FormSet Ystar = puncture(Y, coordinate_hyperplane(6));
    CHECK(Ystar.m() == 5);
    CHECK(Ystar.size() == ipow(3, 12));
    Distribution b = inner_distribution(Ystar);
    CHECK(is_d_code(b, 2));
    CHECK(b == closed_form_even(5, 3, 1, Ystar.size()));
    CHECK(punctured_design_inheritance_check(Y, Ystar));
}

TEST_CASE("puncture rejects dependent or ill-sized hyperplane bases")
{
    FieldSpec F(3, 1);
    FormSet Y = construct_Y(F, ConstructionParams{1, 0, 3, 3});
    auto H = coordinate_hyperplane(3);
    CHECK_NOTHROW(puncture(Y, H));
    H[1] = H[0];
    CHECK_THROWS_AS(puncture(Y, H), error);
    CHECK_THROWS_AS(puncture(Y, {{1, 0, 0}}), error);
}

TEST_CASE("dual set: size, biduality, and distribution duality")
{
    FieldSpec F(3, 1);
    for (auto P : {ConstructionParams{1, 0, 3, 3}, ConstructionParams{1, 1, 4, 3}}) {
        FormSet Y = construct_Y(F, P);
        FormSet Yd = additive_dual(Y);
        CHECK(Rat(Y.size()) * Rat(Yd.size()) ==
              Rat(ipow(P.q, (long)P.m * (P.m + 1) / 2)));
        // biduality via sorted element lists
        FormSet Ydd = additive_dual(Yd);
        auto a = Y.elements(), b = Ydd.elements();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        // |Y| * inner(Y_dual) = dual transform of inner(Y)
        Distribution ad = dual_distribution(inner_distribution(Y),
                                            q_numbers_explicit(P.m, P.q));
        Distribution bd = inner_distribution(Yd);
        for (auto& [k, v] : bd.a) v *= Rat(Y.size());
        CHECK(bd == ad);
    }
}

TEST_CASE("kernel dimension of the linearized map is bounded by 2t")
{
    FieldSpec F(3, 1);
    ConstructionParams P{1, 1, 5, 3};
    construct_Y(F, P); // configures the tower
    std::mt19937 rng(999);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<TowerElem> lambda(P.t + 1, F.tzero());
        bool zero = true;
        for (auto& l : lambda) {
            for (auto& c : l) c = (int)(rng() % 3);
            if (!F.tis_zero(l)) zero = false;
        }
        if (zero) continue;
        CHECK(kernel_dimension(F, P, lambda) <= 2 * P.t);
    }
}

TEST_CASE("explicit sets cannot be dualized")
{
    FieldSpec F(3, 1);
    FormSet Z = FormSet::explicit_set(F, 2, {SymForm(&F, 2)});
    CHECK_THROWS_AS(additive_dual(Z), error);
}
