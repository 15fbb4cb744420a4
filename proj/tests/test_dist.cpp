#include <catch2/catch_amalgamated.hpp>

#include "symscheme/construct.hpp"

using namespace symscheme;

namespace {

FormSet make_Y(int s, int t, int m, long q, FieldSpec& F)
{
    return construct_Y(F, ConstructionParams{s, t, m, q});
}

} // namespace

TEST_CASE("inner distribution of the full space gives the valencies")
{
    FieldSpec F(3, 1);
    const int m = 2;
    std::vector<SymForm> all;
    enumerate_forms(F, m, [&](const SymForm& B) { all.push_back(B); });
    FormSet X = FormSet::explicit_set(F, m, std::move(all));
    Distribution a = inner_distribution(X);
    QNumberTable labels(m, 3);
    for (int idx = 0; idx < labels.size(); ++idx) {
        auto [i, tau] = labels.label(idx);
        CHECK(a.get(i, tau) == Rat(valency(m, 3, i, tau)));
    }
}

TEST_CASE("explicit and additive representations agree on the distribution")
{
    FieldSpec F(3, 1);
    FormSet Y = make_Y(1, 0, 3, 3, F);
    FormSet Yx = FormSet::explicit_set(F, 3, Y.elements());
    CHECK(Yx.size() == Y.size());
    CHECK(inner_distribution(Yx) == inner_distribution(Y));
}

TEST_CASE("dual distribution of the full space is concentrated at (0,+)")
{
    FieldSpec F(3, 1);
    const int m = 2;
    std::vector<SymForm> all;
    enumerate_forms(F, m, [&](const SymForm& B) { all.push_back(B); });
    FormSet X = FormSet::explicit_set(F, m, std::move(all));
    Distribution ad = dual_distribution(inner_distribution(X), q_numbers_explicit(m, 3));
    CHECK(ad.get(0, 1) == 27);
    for (int i = 1; i <= m; ++i)
        for (int tau : {1, -1}) CHECK(ad.get(i, tau) == 0);
}

TEST_CASE("dual of the singleton is the valency vector")
{
    FieldSpec F(3, 1);
    const int m = 2;
    FormSet Z = FormSet::explicit_set(F, m, {SymForm(&F, m)});
    Distribution ad = dual_distribution(inner_distribution(Z), q_numbers_explicit(m, 3));
    QNumberTable labels(m, 3);
    for (int idx = 0; idx < labels.size(); ++idx) {
        auto [i, tau] = labels.label(idx);
        CHECK(ad.get(i, tau) == Rat(valency(m, 3, i, tau)));
    }
}

TEST_CASE("abcd profile round-trips")
{
    FieldSpec F(3, 1);
    for (auto P : {ConstructionParams{1, 0, 3, 3}, ConstructionParams{1, 1, 4, 3}}) {
        FormSet Y = construct_Y(F, P);
        Distribution a = inner_distribution(Y);
        CHECK(abcd_inverse(abcd(a), a.m, a.q) == a);
    }
}

TEST_CASE("four transform identities hold for constructed sets")
{
    FieldSpec F(3, 1);
    for (auto P : {ConstructionParams{1, 0, 3, 3}, ConstructionParams{1, 1, 4, 3},
                   ConstructionParams{1, 0, 4, 3}}) {
        FormSet Y = construct_Y(F, P);
        Distribution a = inner_distribution(Y);
        Distribution ad = dual_distribution(a, q_numbers_explicit(P.m, P.q));
        CHECK(four_equations_check(a, ad));
    }
}

TEST_CASE("code and design predicates")
{
    FieldSpec F(3, 1);
    FormSet Y = make_Y(1, 1, 4, 3, F);
    Distribution a = inner_distribution(Y);
    Distribution ad = dual_distribution(a, q_numbers_explicit(4, 3));
    CHECK(is_d_code(a, 2));
    CHECK(!is_d_code(a, 3));
    CHECK(is_t_design(ad, 3));
    CHECK(!is_t_design(ad, 4));
    CHECK(is_design_eps(ad, 1, 1)); // eta(-1)^{t+1} = (-1)^2 = +1 for q = 3, t = 1
}

TEST_CASE("size bounds")
{
    CHECK(bound_additive(4, 3, 2) == 6561);
    CHECK(bound_additive(3, 3, 3) == 27);
    CHECK(bound_additive(2, 5, 2) == 25);
    CHECK(bound_odd(3, 3, 2) == 27);
    CHECK(bound_even_nonadditive(4, 3, 1) == Rat(15309));
    CHECK_THROWS_AS(bound_additive(3, 3, 4), error);
}

TEST_CASE("closed-form distributions match enumeration")
{
    FieldSpec F(3, 1);
    {
        FormSet Y = make_Y(1, 0, 3, 3, F);
        Distribution a = inner_distribution(Y);
        CHECK(a == closed_form_odd(3, 3, 2, 27));
        CHECK(a.get(3, 1) == 13);
        CHECK(a.get(3, -1) == 13);
    }
    {
        FormSet Y = make_Y(1, 1, 4, 3, F);
        CHECK(inner_distribution(Y) == closed_form_even(4, 3, 1, 6561));
    }
    {
        FormSet Y = make_Y(1, 0, 2, 3, F);
        CHECK(inner_distribution(Y) == closed_form_even(2, 3, 1, 9));
    }
}

TEST_CASE("closed forms have nonnegative entries and the right total")
{
    for (auto [m, q, delta, size] : std::vector<std::tuple<int, long, int, long>>{
             {3, 3, 2, 27}, {5, 3, 2, 59049}, {5, 5, 3, 3125}}) {
        Distribution d = closed_form_odd(m, q, delta, size);
        Rat tot = 0;
        for (const auto& [k, v] : d.a) {
            CHECK(v >= 0);
            tot += v;
        }
        CHECK(tot == Rat(size));
    }
}

TEST_CASE("design extension profile is constant exactly for designs")
{
    FieldSpec F(3, 1);
    FormSet Y = make_Y(1, 1, 4, 3, F);
    DesignProfile p3 = design_extension_profile(Y, 3);
    CHECK(p3.constant);
    CHECK(p3.count == Rat(6561) / Rat(ipow(3, 6)));
    DesignProfile p4 = design_extension_profile(Y, 4);
    CHECK(!p4.constant);
}

TEST_CASE("distribution rejects a typed rank-0 entry")
{
    Distribution d;
    d.m = 2;
    d.q = 3;
    CHECK_THROWS_AS(d.add(0, -1, 1), error);
}
