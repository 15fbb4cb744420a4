#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "symscheme/common.hpp"
#include "symscheme/gf.hpp"

namespace symscheme {

struct RankType {
    int rank;
    int type; // +1 or -1; rank 0 forces +1
    bool operator==(const RankType&) const = default;
};

/// Symmetric bilinear form on F_q^m, stored as the packed upper triangle of
/// its m x m Gram matrix (row-major).
class SymForm {
public:
    SymForm(const FieldSpec* F, int m) : F_(F), m_(m), u_(m * (m + 1) / 2, 0) {}
    SymForm(const FieldSpec* F, int m, std::vector<int> packed)
        : F_(F), m_(m), u_(std::move(packed))
    {
        if ((int)u_.size() != m * (m + 1) / 2)
            throw error(errc::dimension_mismatch, "packed triangle has wrong length");
    }

    int dim() const { return m_; }
    const FieldSpec* field() const { return F_; }
    const std::vector<int>& packed() const { return u_; }
    std::vector<int>& packed() { return u_; }

    int at(int i, int j) const
    {
        if (i > j) std::swap(i, j);
        return u_[idx(i, j)];
    }
    void set(int i, int j, int v)
    {
        if (i > j) std::swap(i, j);
        u_[idx(i, j)] = v;
    }

    bool is_zero() const
    {
        for (int v : u_)
            if (v != 0) return false;
        return true;
    }

    SymForm operator+(const SymForm& o) const
    {
        SymForm r(F_, m_);
        for (size_t i = 0; i < u_.size(); ++i) r.u_[i] = F_->add(u_[i], o.u_[i]);
        return r;
    }
    SymForm operator-(const SymForm& o) const
    {
        SymForm r(F_, m_);
        for (size_t i = 0; i < u_.size(); ++i) r.u_[i] = F_->sub(u_[i], o.u_[i]);
        return r;
    }
    SymForm scaled(int c) const
    {
        SymForm r(F_, m_);
        for (size_t i = 0; i < u_.size(); ++i) r.u_[i] = F_->mul(c, u_[i]);
        return r;
    }

    bool operator==(const SymForm& o) const { return m_ == o.m_ && u_ == o.u_; }
    bool operator<(const SymForm& o) const { return u_ < o.u_; }

    std::vector<std::vector<int>> full_matrix() const
    {
        std::vector<std::vector<int>> a(m_, std::vector<int>(m_));
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) a[i][j] = at(i, j);
        return a;
    }

private:
    int idx(int i, int j) const { return i * m_ - i * (i - 1) / 2 + (j - i); }

    const FieldSpec* F_;
    int m_;
    std::vector<int> u_;
};

/// Rank and type by symmetric congruence diagonalization.  If every diagonal
/// entry of the trailing block vanishes but some off-diagonal a_ij does not,
/// adding row/column j to row/column i produces the diagonal entry 2 a_ij,
/// nonzero since the characteristic is odd.
inline RankType rank_type(const SymForm& B)
{
    const FieldSpec& F = *B.field();
    const int m = B.dim();
    auto a = B.full_matrix();

    auto add_rowcol = [&](int dst, int src) {
        for (int j = 0; j < m; ++j) a[dst][j] = F.add(a[dst][j], a[src][j]);
        for (int i = 0; i < m; ++i) a[i][dst] = F.add(a[i][dst], a[i][src]);
    };
    auto swap_rowcol = [&](int i, int j) {
        std::swap(a[i], a[j]);
        for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    };

    int rank = 0;
    int type = 1;
    for (int k = 0; k < m; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k; i < m; ++i)
                if (a[i][i] != 0) {
                    piv = i;
                    break;
                }
            if (piv >= 0) {
                if (piv != k) swap_rowcol(k, piv);
            } else {
                int pi = -1, pj = -1;
                for (int i = k; i < m && pi < 0; ++i)
                    for (int j = i + 1; j < m; ++j)
                        if (a[i][j] != 0) {
                            pi = i;
                            pj = j;
                            break;
                        }
                if (pi < 0) break; // trailing block is zero
                add_rowcol(pi, pj);
                if (pi != k) swap_rowcol(k, pi);
            }
        }
        int d = a[k][k];
        int dinv = F.inv(d);
        for (int i = k + 1; i < m; ++i) {
            if (a[i][k] == 0) continue;
            int f = F.mul(a[i][k], dinv);
            for (int j = 0; j < m; ++j) a[i][j] = F.sub(a[i][j], F.mul(f, a[k][j]));
            for (int r = 0; r < m; ++r) a[r][i] = F.sub(a[r][i], F.mul(f, a[r][k]));
        }
        ++rank;
        type *= F.eta(d);
    }
    if (rank == 0) type = 1;
    return {rank, type};
}

/// tr(AB), exact in F_q.
inline FqElem pairing(const SymForm& A, const SymForm& B)
{
    if (A.dim() != B.dim() || A.field() != B.field())
        throw error(errc::dimension_mismatch, "pairing of incompatible forms");
    const FieldSpec& F = *A.field();
    const int m = A.dim();
    int acc = 0;
    for (int i = 0; i < m; ++i) {
        acc = F.add(acc, F.mul(A.at(i, i), B.at(i, i)));
        for (int j = i + 1; j < m; ++j) {
            int t = F.mul(A.at(i, j), B.at(i, j));
            acc = F.add(acc, F.add(t, t));
        }
    }
    return acc;
}

/// chi(tr(AB)) as a complex number; oracle use only.
inline std::complex<double> pairing_char(const SymForm& A, const SymForm& B)
{
    return A.field()->canonical_character(pairing(A, B));
}

/// Visit every symmetric m x m matrix over F_q exactly once, in lexicographic
/// order of the packed upper triangle (last packed digit fastest).  With a
/// filter, only forms of the given rank and type are passed on.
inline void enumerate_forms(const FieldSpec& F, int m,
                            const std::function<void(const SymForm&)>& visit,
                            std::optional<RankType> filter = std::nullopt)
{
    const int T = m * (m + 1) / 2;
    check_budget(ipow(F.q(), T), "form enumeration");
    SymForm B(&F, m);
    auto& u = B.packed();
    while (true) {
        if (!filter || rank_type(B) == *filter) visit(B);
        int i = T - 1;
        while (i >= 0) {
            if (++u[i] < F.q()) break;
            u[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
}

/// Number of symmetric m x m matrices over F_q.
inline Int space_size(const FieldSpec& F, int m) { return ipow(F.q(), m * (m + 1) / 2); }

/// Gram matrix of a bilinear function on F_{q^m} x F_{q^m} with respect to a
/// basis over F_q.  The basis must be nonsingular as a coordinate matrix.
inline SymForm gram_matrix(const FieldSpec& F,
                           const std::function<FqElem(const TowerElem&, const TowerElem&)>& B,
                           const std::vector<TowerElem>& basis)
{
    const int m = F.tower_degree();
    if ((int)basis.size() != m) throw error(errc::not_a_basis, "basis has wrong size");
    // rank of the coordinate matrix over F_q
    std::vector<std::vector<int>> mat;
    for (const auto& b : basis) mat.push_back(b);
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
        for (int r = 0; r < m; ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            int f = F.mul(mat[r][col], inv);
            for (int c = 0; c < m; ++c) mat[r][c] = F.sub(mat[r][c], F.mul(f, mat[rank][c]));
        }
        ++rank;
    }
    if (rank != m) throw error(errc::not_a_basis, "vectors do not form a basis");

    SymForm G(&F, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) G.set(i, j, B(basis[i], basis[j]));
    return G;
}

/// Polynomial basis 1, theta, ..., theta^{m-1} of the configured tower.
inline std::vector<TowerElem> polynomial_basis(const FieldSpec& F)
{
    const int m = F.tower_degree();
    std::vector<TowerElem> basis(m, F.tzero());
    for (int i = 0; i < m; ++i) basis[i][i] = 1;
    return basis;
}

} // namespace symscheme
