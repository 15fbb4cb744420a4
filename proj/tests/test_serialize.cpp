#include <catch2/catch_amalgamated.hpp>

#include "symscheme/serialize.hpp"

using namespace symscheme;

TEST_CASE("field spec round-trips through JSON")
{
    FieldSpec F(3, 2);
    F.configure_tower(2);
    json j = field_to_json(F);
    FieldSpec G = field_from_json(j);
    CHECK(G.p() == 3);
    CHECK(G.e() == 2);
    CHECK(G.modulus() == F.modulus());
    CHECK(G.tower_modulus() == F.tower_modulus());
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) CHECK(F.mul(a, b) == G.mul(a, b));
}

TEST_CASE("form sets round-trip through JSON")
{
    FieldSpec F(3, 1);
    FormSet Y = construct_Y(F, ConstructionParams{1, 0, 3, 3});
    json j = formset_to_json(Y);
    FieldSpec G = field_from_json(j.at("field"));
    FormSet Z = formset_from_json(j, G);
    CHECK(Z.is_additive());
    CHECK(Z.size() == Y.size());
    CHECK(inner_distribution(Z) == inner_distribution(Y));

    FormSet E = FormSet::explicit_set(F, 3, Y.elements());
    json je = formset_to_json(E);
    FormSet E2 = formset_from_json(je, G);
    CHECK(!E2.is_additive());
    CHECK(E2.size() == E.size());
}

TEST_CASE("Q-table JSON carries exact entries with explicit labels")
{
    QNumberTable T = q_numbers_explicit(2, 3);
    json j = qtable_to_json(T);
    CHECK(j["row_labels"].size() == 5);
    CHECK(j["entries"].size() == 5);
    // entry (0,+),(0,+) is exactly 1
    CHECK(j["entries"][0][0]["a_num"] == "1");
    CHECK(j["entries"][0][0]["a_den"] == "1");
    CHECK(j["entries"][0][0]["b_num"] == "0");
    // reconstruct one entry and compare
    const GaussInt& g = T.entries()[3][1];
    json e = j["entries"][3][1];
    CHECK(Rat(Int(e["a_num"].get<std::string>()), Int(e["a_den"].get<std::string>())) == g.a);
    CHECK(Rat(Int(e["b_num"].get<std::string>()), Int(e["b_den"].get<std::string>())) == g.b);
}

TEST_CASE("enumerator JSON is sorted by weight with decimal-string counts")
{
    Enumerator E;
    E.add(0, 1);
    E.add(54, Int(1) << 80); // force a count beyond 64 bits
    E.add(27, 4);
    json j = enumerator_to_json(E);
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["entries"][0]["weight"] == 0);
    CHECK(j["entries"][1]["weight"] == 27);
    CHECK(j["entries"][2]["weight"] == 54);
    CHECK(j["entries"][2]["count"] == (Int(1) << 80).str());
}

TEST_CASE("distribution CSV lists every class in canonical order")
{
    FieldSpec F(3, 1);
    FormSet Y = construct_Y(F, ConstructionParams{1, 1, 4, 3});
    std::string csv = distribution_to_csv(inner_distribution(Y));
    CHECK(csv == "rank,type,value\n"
                 "0,1,1\n"
                 "1,1,0\n"
                 "1,-1,0\n"
                 "2,1,100\n"
                 "2,-1,160\n"
                 "3,1,1080\n"
                 "3,-1,1080\n"
                 "4,1,2340\n"
                 "4,-1,1800\n");
}

TEST_CASE("TeX emitters produce balanced tabular environments")
{
    QNumberTable T = q_numbers_explicit(1, 3);
    std::string tex = qtable_to_tex(T);
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
    CHECK(tex.find("\\end{tabular}") != std::string::npos);
    CHECK(tex.find("\\gamma") != std::string::npos);

    Distribution d;
    d.m = 1;
    d.q = 3;
    d.add(0, 1, 1);
    d.add(1, 1, Rat(1, 2));
    std::string dt = distribution_to_tex(d);
    CHECK(dt.find("\\tfrac{1}{2}") != std::string::npos);
    CHECK(rat_to_tex(Rat(-1, 2)) == "-\\tfrac{1}{2}");
}

TEST_CASE("LP JSON reports the exact optimum")
{
    LPInstance ins = lp_instance(2, 3, 2);
    LPResult res = lp_bound(2, 3, 2);
    json j = lp_to_json(ins, res, true);
    CHECK(j["optimum_num"] == "9");
    CHECK(j["optimum_den"] == "1");
    CHECK(j["certificate_valid"] == true);
}
