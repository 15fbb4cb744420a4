#pragma once

#include <numeric>

#include "symscheme/dist.hpp"

namespace symscheme {

struct ConstructionParams {
    int s = 1;
    int t = 0;
    int m = 1;
    long q = 3;

    void validate() const
    {
        if (m < 1 || s < 1 || std::gcd(s, m) != 1)
            throw error(errc::invalid_params, "s must be positive and coprime to m");
        if (t < 0 || 2 * t + 1 > m)
            throw error(errc::invalid_params, "t must satisfy 0 <= t <= (m-1)/2");
    }
};

namespace detail {

inline TowerElem frob_power(const FieldSpec& F, TowerElem x, int k)
{
    k %= F.tower_degree();
    if (k < 0) k += F.tower_degree();
    for (int i = 0; i < k; ++i) x = F.tfrobenius(x);
    return x;
}

/// F_p-basis of F_{q^m}: theta^a * w_b with w_b the F_p-basis of F_q.
inline std::vector<TowerElem> tower_fp_basis(const FieldSpec& F)
{
    std::vector<TowerElem> out;
    for (int a = 0; a < F.tower_degree(); ++a)
        for (int b = 0; b < F.e(); ++b) {
            TowerElem x = F.tzero();
            x[a] = (FqElem)ipow(F.p(), b).convert_to<long>();
            out.push_back(x);
        }
    return out;
}

} // namespace detail

/// Gram matrix of B_lambda(x,y) = Tr(l_0 xy + sum_j l_j (x^{q^{sj}} y + x y^{q^{sj}}))
/// in the polynomial basis of the tower.
inline SymForm gram_of_lambda(const FieldSpec& F, const ConstructionParams& P,
                              const std::vector<TowerElem>& lambda)
{
    const int m = P.m;
    auto basis = polynomial_basis(F);
    SymForm G(&F, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            TowerElem acc = F.tmul(lambda[0], F.tmul(basis[i], basis[j]));
            for (int k = 1; k <= P.t; ++k) {
                TowerElem xi = detail::frob_power(F, basis[i], P.s * k);
                TowerElem yj = detail::frob_power(F, basis[j], P.s * k);
                TowerElem term = F.tadd(F.tmul(xi, basis[j]), F.tmul(basis[i], yj));
                acc = F.tadd(acc, F.tmul(lambda[k], term));
            }
            G.set(i, j, F.trace(acc));
        }
    return G;
}

/// The additive set Y_s(t,m,q) as an F_p-basis of Gram matrices.
inline FormSet construct_Y(FieldSpec& F, const ConstructionParams& P)
{
    P.validate();
    if (F.q() != P.q) throw error(errc::invalid_params, "field does not match parameters");
    if (!F.has_tower() || F.tower_degree() != P.m) F.configure_tower(P.m);

    auto fp_basis = detail::tower_fp_basis(F);
    std::vector<SymForm> gens;
    for (int slot = 0; slot <= P.t; ++slot)
        for (const auto& mu : fp_basis) {
            std::vector<TowerElem> lambda(P.t + 1, F.tzero());
            lambda[slot] = mu;
            gens.push_back(gram_of_lambda(F, P, lambda));
        }
    return FormSet::additive_set(F, P.m, gens);
}

/// Kernel dimension over F_q of x -> l_0 x + sum_j (l_j x^{q^{sj}} + (l_j x)^{q^{-sj}}).
inline int kernel_dimension(const FieldSpec& F, const ConstructionParams& P,
                            const std::vector<TowerElem>& lambda)
{
    const int m = P.m;
    auto basis = polynomial_basis(F);
    std::vector<std::vector<int>> mat(m); // columns = images of basis vectors
    for (int i = 0; i < m; ++i) {
        TowerElem img = F.tmul(lambda[0], basis[i]);
        for (int k = 1; k <= P.t; ++k) {
            TowerElem a = F.tmul(lambda[k], detail::frob_power(F, basis[i], P.s * k));
            TowerElem b = detail::frob_power(F, F.tmul(lambda[k], basis[i]), -P.s * k);
            img = F.tadd(img, F.tadd(a, b));
        }
        mat[i] = img;
    }
    int rank = 0;
    for (int col = 0; col < m && rank < m; ++col) {
        int piv = -1;
        for (int r = rank; r < m; ++r)
            if (mat[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(mat[rank], mat[piv]);
        int inv = F.inv(mat[rank][col]);
        for (int r = rank + 1; r < m; ++r) {
            if (mat[r][col] == 0) continue;
            int f = F.mul(mat[r][col], inv);
            for (int c = 0; c < m; ++c) mat[r][c] = F.sub(mat[r][c], F.mul(f, mat[rank][c]));
        }
        ++rank;
    }
    return m - rank;
}

struct CodeReport {
    bool pass = false;
    int min_nonzero_rank = 0;
    Int size = 0;
    Int expected_size = 0;
    int expected_d = 0;
    int max_kernel_dim = 0;
};

inline CodeReport verify_code_parameters(const FieldSpec& F, const FormSet& Y,
                                         const ConstructionParams& P)
{
    P.validate();
    CodeReport rep;
    rep.expected_d = P.m - 2 * P.t;
    rep.expected_size = ipow(P.q, (long)P.m * (P.t + 1));
    rep.size = Y.size();
    rep.min_nonzero_rank = P.m + 1;
    Y.for_each([&](const SymForm& B) {
        if (B.is_zero()) return;
        int r = rank_type(B).rank;
        if (r < rep.min_nonzero_rank) rep.min_nonzero_rank = r;
    });

    // kernel dimension of L_lambda for sampled lambda
    std::mt19937 rng(271828);
    auto random_tower = [&] {
        TowerElem x = F.tzero();
        for (auto& c : x) c = (int)(rng() % F.q());
        return x;
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<TowerElem> lambda(P.t + 1);
        bool zero = true;
        for (auto& l : lambda) {
            l = random_tower();
            if (!F.tis_zero(l)) zero = false;
        }
        if (zero) continue;
        rep.max_kernel_dim = std::max(rep.max_kernel_dim, kernel_dimension(F, P, lambda));
    }
    rep.pass = rep.size == rep.expected_size && rep.min_nonzero_rank >= rep.expected_d &&
               rep.max_kernel_dim <= 2 * P.t;
    return rep;
}

/// Restriction of every form onto the span of the given m independent vectors
/// of F_q^{m+1}, expressed in that basis.
inline FormSet puncture(const FormSet& Y, const std::vector<std::vector<int>>& hyperplane)
{
    const FieldSpec& F = Y.field();
    const int m1 = Y.m();
    const int m = m1 - 1;
    if ((int)hyperplane.size() != m)
        throw error(errc::not_a_hyperplane_basis, "need m independent vectors");
    for (const auto& w : hyperplane)
        if ((int)w.size() != m1)
            throw error(errc::not_a_hyperplane_basis, "vector of wrong length");
    // independence check
    {
        auto mat = hyperplane;
        int rank = 0;
        for (int col = 0; col < m1 && rank < m; ++col) {
            int piv = -1;
            for (int r = rank; r < m; ++r)
                if (mat[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(mat[rank], mat[piv]);
            int inv = F.inv(mat[rank][col]);
            for (int r = rank + 1; r < m; ++r) {
                if (mat[r][col] == 0) continue;
                int f = F.mul(mat[r][col], inv);
                for (int c = 0; c < m1; ++c) mat[r][c] = F.sub(mat[r][c], F.mul(f, mat[rank][c]));
            }
            ++rank;
        }
        if (rank != m) throw error(errc::not_a_hyperplane_basis, "vectors are dependent");
    }
    auto restrict_form = [&](const SymForm& B) {
        SymForm C(&F, m);
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                int acc = 0;
                for (int r = 0; r < m1; ++r)
                    for (int c = 0; c < m1; ++c)
                        acc = F.add(acc, F.mul(F.mul(hyperplane[i][r], B.at(r, c)),
                                               hyperplane[j][c]));
                C.set(i, j, acc);
            }
        return C;
    };
    if (Y.is_additive()) {
        std::vector<SymForm> gens;
        for (const auto& B : Y.basis()) gens.push_back(restrict_form(B));
        return FormSet::additive_set(F, m, gens);
    }
    std::vector<SymForm> forms;
    for (const auto& B : Y.forms()) forms.push_back(restrict_form(B));
    return FormSet::explicit_set(F, m, std::move(forms));
}

/// Default hyperplane: the first m coordinate vectors.
inline std::vector<std::vector<int>> coordinate_hyperplane(int m1)
{
    std::vector<std::vector<int>> w(m1 - 1, std::vector<int>(m1, 0));
    for (int i = 0; i < m1 - 1; ++i) w[i][i] = 1;
    return w;
}

/// Dual of an additive set under <A,B> = chi(tr(AB)): the F_p-kernel of
/// B -> (Tr_abs(tr(g_j B)))_j over the generators g_j of Y.
inline FormSet additive_dual(const FormSet& Y)
{
    if (!Y.is_additive()) throw error(errc::not_additive, "dual requires an additive set");
    const FieldSpec& F = Y.field();
    const int m = Y.m();
    const int T = m * (m + 1) / 2;
    const int N = T * F.e();
    const long p = F.p();

    // pairing matrix rows: generators of Y; columns: F_p-basis forms of X
    std::vector<std::vector<int>> M;
    for (const auto& g : Y.basis()) {
        std::vector<int> row(N);
        for (int t = 0; t < T; ++t)
            for (int b = 0; b < F.e(); ++b) {
                SymForm E(&F, m);
                E.packed()[t] = (int)ipow(p, b).convert_to<long>();
                row[t * F.e() + b] = F.absolute_trace(pairing(g, E));
            }
        M.push_back(row);
    }
    // kernel of M over F_p
    auto rows = detail::fp_row_basis(std::move(M), p);
    const int r = (int)rows.size();
    std::vector<int> pivot(r);
    std::vector<bool> is_pivot(N, false);
    // rows are in echelon form with unit pivots; back-substitute to RREF
    for (int i = r - 1; i >= 0; --i) {
        int pc = 0;
        while (rows[i][pc] == 0) ++pc;
        pivot[i] = pc;
        is_pivot[pc] = true;
        for (int u = 0; u < i; ++u) {
            int c = rows[u][pc];
            if (c == 0) continue;
            for (int j = 0; j < N; ++j)
                rows[u][j] = (int)(((rows[u][j] - (long)c * rows[i][j]) % p + p) % p);
        }
    }
    std::vector<SymForm> gens;
    for (int c = 0; c < N; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int> v(N, 0);
        v[c] = 1;
        for (int i = 0; i < r; ++i) v[pivot[i]] = (int)(((-(long)rows[i][c]) % p + p) % p);
        gens.push_back(detail::unflatten_form(F, m, v));
    }
    return FormSet::additive_set(F, m, gens);
}

/// Entrywise check that zeros of the dual distribution survive puncturing.
inline bool punctured_design_inheritance_check(const FormSet& Y, const FormSet& Ystar)
{
    Distribution a = inner_distribution(Y);
    int min_rank = Y.m() + 1;
    for (const auto& [k, v] : a.a)
        if (k.first > 0 && v != 0) min_rank = std::min(min_rank, k.first);
    if (min_rank < 3)
        throw error(errc::precondition_violated, "requires a d-code with d >= 3");
    Distribution ad = dual_distribution(a, q_numbers_explicit(Y.m(), a.q));
    Distribution b = inner_distribution(Ystar);
    Distribution bd = dual_distribution(b, q_numbers_explicit(Ystar.m(), b.q));
    for (int k = 0; k <= Ystar.m(); ++k)
        for (int eps : {1, -1}) {
            if (k == 0 && eps == -1) continue;
            if (ad.get(k, eps) == 0 && bd.get(k, eps) != 0) return false;
        }
    return true;
}

} // namespace symscheme
