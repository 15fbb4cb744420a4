#pragma once

#include "symscheme/construct.hpp"

namespace symscheme {

/// Sparse weight -> count histogram; counts rational so that distance
/// enumerators of non-additive codes fit too.
struct Enumerator {
    std::map<long, Rat> coef;

    void add(long w, const Rat& c)
    {
        if (c == 0) return;
        coef[w] += c;
        if (coef[w] == 0) coef.erase(w);
    }
    Rat total() const
    {
        Rat t = 0;
        for (const auto& [w, c] : coef) t += c;
        return t;
    }
    long min_nonzero_weight() const
    {
        for (const auto& [w, c] : coef)
            if (w > 0 && c != 0) return w;
        throw error(errc::internal, "no nonzero weight present");
    }
    bool operator==(const Enumerator& o) const { return coef == o.coef; }
};

/// Codeword of C1: values of Q(x) = B(x,x) at x = 1, theta, ..., theta^{q^m-2}.
inline std::vector<FqElem> quad_values(const FieldSpec& F, const SymForm& B,
                                       const TowerElem& theta)
{
    const int m = B.dim();
    Int len = F.tower_order() - 1;
    check_budget(len, "codeword evaluation");
    std::vector<FqElem> out;
    out.reserve(len.convert_to<long>());
    TowerElem x = F.tone();
    for (Int j = 0; j < len; ++j) {
        FqElem acc = 0;
        for (int i = 0; i < m; ++i) {
            acc = F.add(acc, F.mul(B.at(i, i), F.mul(x[i], x[i])));
            for (int k = i + 1; k < m; ++k) {
                int t = F.mul(B.at(i, k), F.mul(x[i], x[k]));
                acc = F.add(acc, F.add(t, t));
            }
        }
        out.push_back(acc);
        x = F.tmul(x, theta);
    }
    return out;
}

/// Codeword of L: values of x -> Tr(beta x) at the same coordinates.
inline std::vector<FqElem> linear_values(const FieldSpec& F, const TowerElem& beta,
                                         const TowerElem& theta)
{
    Int len = F.tower_order() - 1;
    std::vector<FqElem> out;
    out.reserve(len.convert_to<long>());
    TowerElem x = F.tone();
    for (Int j = 0; j < len; ++j) {
        out.push_back(F.trace(F.tmul(beta, x)));
        x = F.tmul(x, theta);
    }
    return out;
}

inline long hamming_weight(const std::vector<FqElem>& v)
{
    long w = 0;
    for (FqElem c : v)
        if (c != 0) ++w;
    return w;
}

/// Solution count of Q(x) = h for a quadratic form of rank i and type tau.
inline Int n_of_h(const FieldSpec& F, int m, int i, int tau, FqElem h)
{
    if (i < 0 || i > m) throw error(errc::invalid_params, "rank out of range");
    const long q = F.q();
    const int sgn = F.eta_minus_one();
    if (i % 2 == 1) {
        int sg = ((i - 1) / 2) % 2 == 0 ? 1 : sgn;
        return ipow(q, m - 1) + Int(tau * sg * F.eta(h)) * ipow(q, m - (i + 1) / 2);
    }
    int sg = (i / 2) % 2 == 0 ? 1 : sgn;
    long nu = h == 0 ? q - 1 : -1;
    return ipow(q, m - 1) + Int(tau * sg) * nu * ipow(q, m - i / 2 - 1);
}

/// C1 codeword weight of a rank-i type-tau form.
inline long c1_weight(int m, long q, int i, int tau, int sgn)
{
    Int w;
    if (i % 2 == 1)
        w = ipow(q, m - 1) * (q - 1);
    else {
        int sg = (i / 2) % 2 == 0 ? 1 : sgn;
        w = (ipow(q, m - 1) - Int(tau * sg) * ipow(q, m - i / 2 - 1)) * (q - 1);
    }
    return w.convert_to<long>();
}

inline Enumerator enumerator_C1_formula(const Distribution& a)
{
    const int sgn = a.q % 4 == 1 ? 1 : -1;
    Enumerator E;
    for (const auto& [k, v] : a.a) E.add(c1_weight(a.m, a.q, k.first, k.second, sgn), v);
    return E;
}

/// Weight enumerator of the coset Q + L for Q of rank i and type tau.
struct CosetTrinomial {
    int i = 0, tau = 1;
    long u = 0, v = 0, w = 0;
    Int nu = 0, nv = 0, nw = 0;

    void accumulate(Enumerator& E, const Rat& mult) const
    {
        E.add(u, mult * Rat(nu));
        E.add(v, mult * Rat(nv));
        E.add(w, mult * Rat(nw));
    }
};

inline CosetTrinomial coset_trinomial(int m, long q, int i, int tau)
{
    if (i < 0 || i > m) throw error(errc::invalid_params, "rank out of range");
    const int sgn = q % 4 == 1 ? 1 : -1;
    CosetTrinomial T;
    T.i = i;
    T.tau = tau;
    Rat qi1 = rpow(q, i - 1); // q^{i-1}; rational for i = 0
    if (i % 2 == 1) {
        Int step = ipow(q, m - (i + 1) / 2);
        T.u = (ipow(q, m - 1) * (q - 1) - step).convert_to<long>();
        T.v = (ipow(q, m - 1) * (q - 1)).convert_to<long>();
        T.w = (ipow(q, m - 1) * (q - 1) + step).convert_to<long>();
        Int half = ipow(q, (i - 1) / 2);
        T.nu = (ipow(q, i - 1) + half) * (q - 1) / 2;
        T.nv = ipow(q, m) - ipow(q, i - 1) * (q - 1);
        T.nw = (ipow(q, i - 1) - half) * (q - 1) / 2;
        return T;
    }
    int sg = (i / 2) % 2 == 0 ? 1 : sgn;
    Rat step = Rat(tau * sg) * rpow(q, m - i / 2 - 1);
    Rat u = (rpow(q, m - 1) - step) * (q - 1);
    Rat w = rpow(q, m - 1) * (q - 1) + step;
    Rat nu = qi1 + Rat(tau * sg) * rpow(q, i / 2 - 1) * (q - 1);
    Rat nw = (qi1 - Rat(tau * sg) * rpow(q, i / 2 - 1)) * (q - 1);
    auto as_int = [](const Rat& r) {
        if (boost::multiprecision::denominator(r) != 1)
            throw error(errc::internal, "coset trinomial entry not integral");
        return Int(boost::multiprecision::numerator(r));
    };
    T.u = as_int(u).convert_to<long>();
    T.v = (ipow(q, m - 1) * (q - 1)).convert_to<long>();
    T.w = as_int(w).convert_to<long>();
    T.nu = as_int(nu);
    T.nv = ipow(q, m) - ipow(q, i);
    T.nw = as_int(nw);
    return T;
}

inline Enumerator enumerator_C2_formula(const Distribution& a)
{
    Enumerator E;
    for (const auto& [k, v] : a.a)
        coset_trinomial(a.m, a.q, k.first, k.second).accumulate(E, v);
    return E;
}

enum class EnumeratorMode { weight, distance };

inline Enumerator brute_force_enumerator(const std::vector<std::vector<FqElem>>& code,
                                         const FieldSpec& F, EnumeratorMode mode)
{
    Enumerator E;
    if (mode == EnumeratorMode::weight) {
        check_budget((long)code.size(), "weight enumeration");
        for (const auto& c : code) E.add(hamming_weight(c), 1);
        return E;
    }
    check_budget(Int((long)code.size()) * (long)code.size(), "distance enumeration");
    Rat inv = Rat(1, (long)code.size());
    for (const auto& b : code)
        for (const auto& c : code) {
            long w = 0;
            for (size_t j = 0; j < b.size(); ++j)
                if (F.sub(c[j], b[j]) != 0) ++w;
            E.add(w, inv);
        }
    return E;
}

/// All C1 codewords of a form set (order follows the set's iteration order).
inline std::vector<std::vector<FqElem>> materialize_C1(const FieldSpec& F, const FormSet& Y,
                                                       const TowerElem& theta)
{
    std::vector<std::vector<FqElem>> code;
    Y.for_each([&](const SymForm& B) { code.push_back(quad_values(F, B, theta)); });
    return code;
}

/// All C2 codewords: every coset representative plus every linear word.
inline std::vector<std::vector<FqElem>> materialize_C2(const FieldSpec& F, const FormSet& Y,
                                                       const TowerElem& theta)
{
    Int total = Y.size() * F.tower_order();
    check_budget(total, "C2 materialization");
    std::vector<std::vector<FqElem>> lin;
    {
        // odometer over beta coordinates
        TowerElem beta = F.tzero();
        while (true) {
            lin.push_back(linear_values(F, beta, theta));
            int i = 0;
            while (i < (int)beta.size()) {
                beta[i] = F.add(beta[i], 1);
                if (beta[i] != 0) break;
                ++i;
            }
            if (i == (int)beta.size()) break;
        }
    }
    std::vector<std::vector<FqElem>> code;
    Y.for_each([&](const SymForm& B) {
        auto qv = quad_values(F, B, theta);
        for (const auto& l : lin) {
            std::vector<FqElem> w(qv.size());
            for (size_t j = 0; j < qv.size(); ++j) w[j] = F.add(qv[j], l[j]);
            code.push_back(std::move(w));
        }
    });
    return code;
}

enum class DerivedCode { C1, C2, C1_punctured, C2_punctured };

/// Cyclic zero exponents mod q^m - 1 (as exponents of theta).
inline std::vector<long> cyclic_zeros(const ConstructionParams& P, DerivedCode which)
{
    P.validate();
    if (which != DerivedCode::C1 && which != DerivedCode::C2)
        throw error(errc::invalid_params, "cyclic structure stated for C1 and C2 only");
    long N = (ipow(P.q, P.m) - 1).convert_to<long>();
    std::vector<long> zeros;
    auto add = [&](Int ex) { zeros.push_back((long)(((-ex) % N + N) % N)); };
    if (which == DerivedCode::C2) add(1);
    add(2);
    for (int j = 1; j <= P.t; ++j) add(ipow(P.q, (long)P.s * j) + 1);
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
    return zeros;
}

/// Closed-form minimum distances; punctured variants take the parameters of
/// the punctured space (the m of X(m,q) the punctured set lives in).
inline Int min_distance_formula(const ConstructionParams& P, DerivedCode which)
{
    const long q = P.q;
    const int m = P.m, t = P.t;
    switch (which) {
    case DerivedCode::C1:
        // for odd m and t = 0 no even rank occurs in Y, so the generic
        // even-rank minimum is not attained and all weights equal the odd-rank
        // value
        if (m % 2 == 1 && t == 0) return ipow(q, m - 1) * (q - 1);
        return (ipow(q, m - 1) - ipow(q, m / 2 + t - 1)) * (q - 1);
    case DerivedCode::C2:
        if (m % 2 == 1) return ipow(q, m - 1) * (q - 1) - ipow(q, (m - 1) / 2 + t);
        return (ipow(q, m - 1) - ipow(q, m / 2 + t - 1)) * (q - 1);
    case DerivedCode::C1_punctured:
        return (ipow(q, m - 1) - ipow(q, (m - 1) / 2 + t)) * (q - 1);
    case DerivedCode::C2_punctured:
        if (m % 2 == 1) return (ipow(q, m - 1) - ipow(q, (m - 1) / 2 + t)) * (q - 1);
        return ipow(q, m - 1) * (q - 1) - ipow(q, m / 2 + t);
    }
    throw error(errc::invalid_params, "unknown code variant");
}

/// Exact check that a codeword vanishes at theta^z: sum_j c_j theta^{jz} = 0.
inline bool vanishes_at_zero(const FieldSpec& F, const std::vector<FqElem>& c,
                             const TowerElem& theta, long z)
{
    TowerElem step = F.tpow(theta, z);
    TowerElem x = F.tone();
    TowerElem acc = F.tzero();
    for (FqElem cj : c) {
        if (cj != 0) acc = F.tadd(acc, F.tscale(cj, x));
        x = F.tmul(x, step);
    }
    return F.tis_zero(acc);
}

/// Verify the listed zeros against a code in ascending-power coordinate
/// order.  The zero exponents are stated for the reversed orientation, so the
/// ascending-order words vanish at the reciprocal points theta^{-z}.
inline bool check_cyclic_zeros(const FieldSpec& F, const std::vector<std::vector<FqElem>>& code,
                               const TowerElem& theta, const std::vector<long>& zeros)
{
    long N = (F.tower_order() - 1).convert_to<long>();
    for (const auto& c : code)
        for (long z : zeros)
            if (!vanishes_at_zero(F, c, theta, ((N - z) % N + N) % N)) return false;
    return true;
}

} // namespace symscheme
