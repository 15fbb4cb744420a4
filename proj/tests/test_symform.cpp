#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "symscheme/symform.hpp"

using namespace symscheme;

namespace {

// independent rank via Gaussian elimination on the full matrix
int brute_rank(const FieldSpec& F, const SymForm& B)
{
    auto M = B.full_matrix();
    const int m = (int)M.size();
    int rank = 0;
    for (int col = 0; col < m && rank < m; ++col) {
        int piv = -1;
        for (int r = rank; r < m; ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        int inv = F.inv(M[rank][col]);
        for (int r = rank + 1; r < m; ++r) {
            if (M[r][col] == 0) continue;
            int f = F.mul(M[r][col], inv);
            for (int c = 0; c < m; ++c) M[r][c] = F.sub(M[r][c], F.mul(f, M[rank][c]));
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("rank matches plain Gaussian elimination exhaustively")
{
    for (long q : {3L, 5L}) {
        FieldSpec F((long)q, 1);
        for (int m = 1; m <= (q == 3 ? 3 : 2); ++m)
            enumerate_forms(F, m, [&](const SymForm& B) {
                CHECK(rank_type(B).rank == brute_rank(F, B));
            });
    }
}

TEST_CASE("rank and type are congruence invariants")
{
    FieldSpec F(3, 1);
    const int m = 3;
    std::mt19937 rng(12345);
    enumerate_forms(F, m, [&](const SymForm& B) {
        if (rng() % 50 != 0) return; // sample
        RankType rt = rank_type(B);
        // random invertible L, compare rank_type(L^T B L)
        std::vector<std::vector<int>> L(m, std::vector<int>(m));
        auto full_rank = [&] {
            auto a = L;
            int rank = 0;
            for (int col = 0; col < m && rank < m; ++col) {
                int piv = -1;
                for (int r = rank; r < m; ++r)
                    if (a[r][col] != 0) {
                        piv = r;
                        break;
                    }
                if (piv < 0) continue;
                std::swap(a[rank], a[piv]);
                int inv = F.inv(a[rank][col]);
                for (int r = rank + 1; r < m; ++r) {
                    if (a[r][col] == 0) continue;
                    int f = F.mul(a[r][col], inv);
                    for (int c = 0; c < m; ++c) a[r][c] = F.sub(a[r][c], F.mul(f, a[rank][c]));
                }
                ++rank;
            }
            return rank == m;
        };
        do {
            for (auto& row : L)
                for (auto& v : row) v = (int)(rng() % 3);
        } while (!full_rank());
        SymForm C(&F, m);
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                int acc = 0;
                for (int r = 0; r < m; ++r)
                    for (int c = 0; c < m; ++c)
                        acc = F.add(acc, F.mul(F.mul(L[r][i], B.at(r, c)), L[c][j]));
                C.set(i, j, acc);
            }
        RankType rt2 = rank_type(C);
        CHECK(rt.rank == rt2.rank);
        CHECK(rt.type == rt2.type);
    });
}

TEST_CASE("pairing is symmetric and bilinear")
{
    FieldSpec F(3, 1);
    const int m = 2;
    std::vector<SymForm> all;
    enumerate_forms(F, m, [&](const SymForm& B) { all.push_back(B); });
    for (const auto& A : all)
        for (const auto& B : all) {
            CHECK(pairing(A, B) == pairing(B, A));
            CHECK(pairing(A + B, B) == F.add(pairing(A, B), pairing(B, B)));
        }
}

TEST_CASE("enumeration visits the whole space once")
{
    FieldSpec F(5, 1);
    const int m = 2;
    std::set<SymForm> seen;
    enumerate_forms(F, m, [&](const SymForm& B) { seen.insert(B); });
    CHECK(Int((long)seen.size()) == space_size(F, m));
}

TEST_CASE("gram matrix demands a basis")
{
    FieldSpec F(3, 1);
    F.configure_tower(2);
    auto bil = [&](const TowerElem& x, const TowerElem& y) { return F.trace(F.tmul(x, y)); };
    auto basis = polynomial_basis(F);
    CHECK_NOTHROW(gram_matrix(F, bil, basis));
    // the trace form itself is nonsingular
    CHECK(rank_type(gram_matrix(F, bil, basis)).rank == 2);
    basis[1] = basis[0];
    CHECK_THROWS_AS(gram_matrix(F, bil, basis), error);
}

TEST_CASE("rank-zero form is the zero form")
{
    FieldSpec F(3, 1);
    SymForm Z(&F, 3);
    RankType rt = rank_type(Z);
    CHECK(rt.rank == 0);
    CHECK(rt.type == 1);
    CHECK(Z.is_zero());
}
