#include <catch2/catch_amalgamated.hpp>

#include "symscheme/scheme.hpp"

using namespace symscheme;

TEST_CASE("q-binomials: basics and symmetry")
{
    for (long q : {3L, 5L, 9L}) {
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n; ++k) {
                Int v = qbinom(n, k, q);
                CHECK(v == qbinom(n, n - k, q));
                CHECK(v > 0);
            }
        // base q^2 Gaussian binomial
        CHECK(qbinom(4, 1, q) == (ipow(q, 8) - 1) / (ipow(q, 2) - 1));
        CHECK(qbinom(3, 5, q) == 0);
    }
}

TEST_CASE("generalized Krawtchouk numbers: base cases and column sums")
{
    for (long q : {3L, 5L}) {
        for (int m = 0; m <= 4; ++m) {
            CHECK(krawtchouk(m, 0, 0, q) == 1);
            // the column at s = 0 sums to q^{m(m-1)/2}
            Int sum = 0;
            for (int r = 0; r <= m; ++r) sum += krawtchouk(m, r, 0, q);
            CHECK(sum == ipow(q, (long)m * (m - 1) / 2));
        }
    }
}

TEST_CASE("valencies are positive and sum to the space size")
{
    for (long q : {3L, 5L, 9L})
        for (int m = 1; m <= 5; ++m) {
            Int sum = 0;
            QNumberTable labels(m, q);
            for (int idx = 0; idx < labels.size(); ++idx) {
                auto [i, tau] = labels.label(idx);
                Int v = valency(m, q, i, tau);
                CHECK(v > 0);
                sum += v;
            }
            CHECK(sum == ipow(q, (long)m * (m + 1) / 2));
        }
}

TEST_CASE("gauss integers: conjugation and multiplication")
{
    for (long q : {3L, 5L}) {
        GaussInt x(Rat(2), Rat(3), q), y(Rat(-1), Rat(1, 2), q);
        CHECK((x * y).conj() == x.conj() * y.conj());
        // gamma^2 = eta(-1) q and conj(gamma) = eta(-1) gamma
        GaussInt g(0, 1, q);
        int sgn = q % 4 == 1 ? 1 : -1;
        CHECK(g * g == GaussInt(Rat(sgn * (long)q), 0, q));
        CHECK(g.conj() == GaussInt(0, Rat(sgn), q));
    }
    // gamma is imaginary for q = 3 mod 4, so x + conj(x) is rational there
    GaussInt x(Rat(2), Rat(3), 3);
    CHECK(x + x.conj() == GaussInt(Rat(4), 0, 3));
}

TEST_CASE("explicit and recurrence tables agree")
{
    for (auto [m, q] : std::vector<std::pair<int, long>>{{1, 3}, {2, 3}, {3, 3}, {1, 5},
                                                         {2, 5}, {1, 9}, {2, 9}})
        CHECK(q_numbers_explicit(m, q) == q_numbers_recurrence(m, q));
}

TEST_CASE("first row and first column of the table")
{
    QNumberTable T = q_numbers_explicit(3, 3);
    for (int c = 0; c < T.size(); ++c) {
        auto [i, tau] = T.label(c);
        // row (0,+): all ones; column (0,+): valencies
        CHECK(T.entries()[0][c] == GaussInt(1, 0, 3));
        CHECK(T.entries()[c][0] == GaussInt(Rat(valency(3, 3, i, tau)), 0, 3));
    }
}

TEST_CASE("orthogonality is exact")
{
    for (auto [m, q] :
         std::vector<std::pair<int, long>>{{1, 3}, {2, 3}, {3, 3}, {2, 5}, {1, 9}})
        CHECK(pq_orthogonality_check(q_numbers_explicit(m, q)));
}

TEST_CASE("character-sum oracle matches the exact table")
{
    for (auto [m, q] : std::vector<std::pair<int, long>>{{1, 3}, {2, 3}, {1, 5}}) {
        auto [p, e] = factor_prime_power(q);
        FieldSpec F = field_create(p, e);
        QNumberOracle O = q_numbers_charsum_oracle(F, m);
        QNumberTable T = q_numbers_explicit(m, q);
        std::complex<double> gamma = gauss_sum_numeric(F);
        CHECK(std::abs(gamma * gamma -
                       std::complex<double>((q % 4 == 1 ? 1.0 : -1.0) * (double)q)) < 1e-9);
        for (int r = 0; r < T.size(); ++r)
            for (int c = 0; c < T.size(); ++c)
                CHECK(std::abs(T.entries()[r][c].embed(gamma) - O.Q[r][c]) < 1e-6);
    }
}

TEST_CASE("row sums vanish off the trivial row")
{
    QNumberTable T = q_numbers_explicit(2, 5);
    for (int r = 1; r < T.size(); ++r) {
        GaussInt sum(0, 0, 5);
        for (int c = 0; c < T.size(); ++c) {
            auto [i, tau] = T.label(c);
            sum += T.entries()[r][c] * Rat(valency(2, 5, i, tau));
        }
        CHECK(sum == GaussInt(0, 0, 5));
    }
}
