#pragma once

#include "symscheme/dist.hpp"

namespace symscheme {

/// max c.x subject to A x <= b, x >= 0, with b >= 0 (slack basis feasible).
/// Bland's rule; everything exact.
struct SimplexResult {
    Rat value = 0;
    std::vector<Rat> x;
    std::vector<Rat> y; // dual multipliers, one per constraint
};

inline SimplexResult simplex_max(const std::vector<std::vector<Rat>>& A,
                                 const std::vector<Rat>& b, const std::vector<Rat>& c)
{
    const int mrows = (int)A.size();
    const int nvars = (int)c.size();
    for (const Rat& bi : b)
        if (bi < 0) throw error(errc::internal, "simplex requires nonnegative rhs");

    // tableau: mrows x (nvars + mrows + 1), plus objective row of reduced costs
    std::vector<std::vector<Rat>> T(mrows, std::vector<Rat>(nvars + mrows + 1, 0));
    for (int r = 0; r < mrows; ++r) {
        for (int j = 0; j < nvars; ++j) T[r][j] = A[r][j];
        T[r][nvars + r] = 1;
        T[r].back() = b[r];
    }
    std::vector<Rat> obj(nvars + mrows + 1, 0);
    for (int j = 0; j < nvars; ++j) obj[j] = c[j];
    std::vector<int> basis(mrows);
    for (int r = 0; r < mrows; ++r) basis[r] = nvars + r;

    while (true) {
        int enter = -1;
        for (int j = 0; j < nvars + mrows; ++j)
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rat best = 0;
        for (int r = 0; r < mrows; ++r) {
            if (T[r][enter] <= 0) continue;
            Rat ratio = T[r].back() / T[r][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) throw error(errc::internal, "linear program is unbounded");
        Rat piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (int r = 0; r < mrows; ++r) {
            if (r == leave || T[r][enter] == 0) continue;
            Rat f = T[r][enter];
            for (int j = 0; j <= nvars + mrows; ++j) T[r][j] -= f * T[leave][j];
        }
        Rat f = obj[enter];
        for (int j = 0; j <= nvars + mrows; ++j) obj[j] -= f * T[leave][j];
        basis[leave] = enter;
    }

    SimplexResult res;
    res.x.assign(nvars, 0);
    for (int r = 0; r < mrows; ++r)
        if (basis[r] < nvars) res.x[basis[r]] = T[r].back();
    res.value = -obj.back();
    res.y.assign(mrows, 0);
    for (int r = 0; r < mrows; ++r) res.y[r] = -obj[nvars + r];
    return res;
}

/// The Delsarte program for d-codes: maximize the total mass of a
/// nonnegative distribution with a_{0,1} = 1, a_{i,.} = 0 for 0 < i < d,
/// rational part of every dual entry nonnegative, gamma part zero.
struct LPInstance {
    int m = 0;
    long q = 0;
    int d = 0;
    std::vector<std::pair<int, int>> vars; // (i, tau) per column
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    std::vector<Rat> c;
};

struct LPResult {
    Rat optimum = 0;
    Distribution a;
    std::vector<Rat> duals;
};

inline LPInstance lp_instance(int m, long q, int d)
{
    if (d < 1 || d > m) throw error(errc::invalid_params, "d out of range");
    if (m > 16) throw error(errc::limit_exceeded, "LP restricted to small m");
    QNumberTable T = q_numbers_explicit(m, q);
    LPInstance ins;
    ins.m = m;
    ins.q = q;
    ins.d = d;
    for (int i = d; i <= m; ++i)
        for (int tau : {1, -1}) ins.vars.push_back({i, tau});
    const int n = (int)ins.vars.size();
    for (int row = 1; row < T.size(); ++row) {
        auto [k, eps] = T.label(row);
        std::vector<Rat> real(n), imag(n);
        bool has_imag = false;
        for (int j = 0; j < n; ++j) {
            const GaussInt& Q = T.at(k, eps, ins.vars[j].first, ins.vars[j].second);
            real[j] = Q.a;
            imag[j] = Q.b;
            if (Q.b != 0) has_imag = true;
        }
        // rational part: sum Q_re a >= -v(k,eps)  ->  -sum Q_re a <= v(k,eps)
        std::vector<Rat> neg(n);
        for (int j = 0; j < n; ++j) neg[j] = -real[j];
        ins.A.push_back(neg);
        ins.b.push_back(Rat(valency(m, q, k, eps)));
        if (has_imag) {
            // gamma part must vanish: split equality into <= pair with rhs 0
            ins.A.push_back(imag);
            ins.b.push_back(0);
            for (auto& v : imag) v = -v;
            ins.A.push_back(imag);
            ins.b.push_back(0);
        }
    }
    ins.c.assign(n, 1);
    return ins;
}

inline LPResult lp_bound(int m, long q, int d)
{
    LPInstance ins = lp_instance(m, q, d);
    SimplexResult s = simplex_max(ins.A, ins.b, ins.c);
    LPResult out;
    out.optimum = 1 + s.value; // add back the fixed unit mass at (0,1)
    out.a.m = m;
    out.a.q = q;
    out.a.add(0, 1, 1);
    for (size_t j = 0; j < ins.vars.size(); ++j)
        out.a.add(ins.vars[j].first, ins.vars[j].second, s.x[j]);
    out.duals = s.y;
    return out;
}

/// Strong-duality certificate: primal/dual feasibility plus matching values.
inline bool lp_certificate_check(const LPInstance& ins, const LPResult& res)
{
    const int n = (int)ins.vars.size();
    std::vector<Rat> x(n, 0);
    for (int j = 0; j < n; ++j) x[j] = res.a.get(ins.vars[j].first, ins.vars[j].second);
    for (const Rat& v : x)
        if (v < 0) return false;
    Rat primal = 0;
    for (const Rat& v : x) primal += v;
    if (1 + primal != res.optimum) return false;
    if ((int)res.duals.size() != (int)ins.A.size()) return false;
    for (size_t r = 0; r < ins.A.size(); ++r) {
        if (res.duals[r] < 0) return false;
        Rat lhs = 0;
        for (int j = 0; j < n; ++j) lhs += ins.A[r][j] * x[j];
        if (lhs > ins.b[r]) return false;
    }
    // dual feasibility: A^T y >= c
    for (int j = 0; j < n; ++j) {
        Rat col = 0;
        for (size_t r = 0; r < ins.A.size(); ++r) col += ins.A[r][j] * res.duals[r];
        if (col < ins.c[j]) return false;
    }
    // strong duality: b.y == c.x
    Rat dual = 0;
    for (size_t r = 0; r < ins.b.size(); ++r) dual += ins.b[r] * res.duals[r];
    if (dual != primal) return false;
    return true;
}

} // namespace symscheme
