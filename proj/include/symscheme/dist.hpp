#pragma once

#include <map>
#include <set>
#include <vector>

#include "symscheme/scheme.hpp"
#include "symscheme/symform.hpp"

namespace symscheme {

/// Sparse (i, tau) -> count map with exact rational counts.
struct Distribution {
    int m = 0;
    long q = 0;
    std::map<std::pair<int, int>, Rat> a;

    Rat get(int i, int tau) const
    {
        auto it = a.find({i, tau});
        return it == a.end() ? Rat(0) : it->second;
    }
    void add(int i, int tau, const Rat& v)
    {
        if (i == 0 && tau != 1) throw error(errc::invalid_params, "rank 0 has type +1 only");
        if (v == 0) return;
        a[{i, tau}] += v;
    }
    Rat total() const
    {
        Rat t = 0;
        for (const auto& [k, v] : a) t += v;
        return t;
    }
    bool operator==(const Distribution& o) const { return m == o.m && q == o.q && a == o.a; }
};

namespace detail {

inline std::vector<int> flatten_form(const SymForm& B)
{
    const FieldSpec& F = *B.field();
    std::vector<int> out;
    out.reserve(B.packed().size() * F.e());
    for (int v : B.packed())
        for (int c : F.coords(v)) out.push_back(c);
    return out;
}

inline SymForm unflatten_form(const FieldSpec& F, int m, const std::vector<int>& digits)
{
    const int T = m * (m + 1) / 2;
    std::vector<int> packed(T);
    for (int t = 0; t < T; ++t) {
        long idx = 0;
        for (int mu = F.e(); mu-- > 0;) idx = idx * F.p() + digits[t * F.e() + mu];
        packed[t] = (int)idx;
    }
    return SymForm(&F, m, packed);
}

/// Reduce a list of F_p vectors to a row-echelon basis; returns the basis.
inline std::vector<std::vector<int>> fp_row_basis(std::vector<std::vector<int>> rows, long p)
{
    std::vector<std::vector<int>> basis;
    std::vector<int> pivot_col;
    for (auto& row : rows) {
        for (size_t b = 0; b < basis.size(); ++b) {
            int c = row[pivot_col[b]];
            if (c == 0) continue;
            for (size_t j = 0; j < row.size(); ++j)
                row[j] = (int)(((row[j] - (long)c * basis[b][j]) % p + p) % p);
        }
        int pc = -1;
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) {
                pc = (int)j;
                break;
            }
        if (pc < 0) continue;
        // normalize pivot to 1
        long inv = 1;
        for (long x = 1; x < p; ++x)
            if (x * row[pc] % p == 1) {
                inv = x;
                break;
            }
        for (auto& v : row) v = (int)(v * inv % p);
        basis.push_back(row);
        pivot_col.push_back(pc);
    }
    return basis;
}

} // namespace detail

/// A subset of X(m,q): either an explicit duplicate-free list, or an additive
/// set held as an F_p-basis with its span implied.
class FormSet {
public:
    static FormSet explicit_set(const FieldSpec& F, int m, std::vector<SymForm> forms)
    {
        FormSet Y(F, m, false);
        std::sort(forms.begin(), forms.end());
        forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
        Y.forms_ = std::move(forms);
        return Y;
    }

    static FormSet additive_set(const FieldSpec& F, int m, const std::vector<SymForm>& generators)
    {
        FormSet Y(F, m, true);
        std::vector<std::vector<int>> rows;
        for (const auto& g : generators) {
            if (g.dim() != m) throw error(errc::dimension_mismatch, "generator of wrong dimension");
            rows.push_back(detail::flatten_form(g));
        }
        for (const auto& row : detail::fp_row_basis(std::move(rows), F.p()))
            Y.basis_.push_back(detail::unflatten_form(F, m, row));
        return Y;
    }

    const FieldSpec& field() const { return *F_; }
    int m() const { return m_; }
    bool is_additive() const { return additive_; }
    const std::vector<SymForm>& basis() const
    {
        if (!additive_) throw error(errc::not_additive, "explicit set has no basis");
        return basis_;
    }
    const std::vector<SymForm>& forms() const
    {
        if (additive_) throw error(errc::not_additive, "additive set is not materialized");
        return forms_;
    }

    Int size() const
    {
        if (additive_) return ipow(F_->p(), (long)basis_.size());
        return (long)forms_.size();
    }

    /// Visit every element once (the zero form first for additive sets).
    void for_each(const std::function<void(const SymForm&)>& visit) const
    {
        if (!additive_) {
            for (const auto& B : forms_) visit(B);
            return;
        }
        check_budget(size(), "additive span enumeration");
        const long p = F_->p();
        const int r = (int)basis_.size();
        std::vector<int> digit(r, 0);
        SymForm cur(F_, m_);
        visit(cur);
        while (true) {
            int j = 0;
            while (j < r && digit[j] == p - 1) digit[j++] = 0;
            if (j == r) break;
            ++digit[j];
            // rolling digits l < j back to 0 adds g_l once each (char p)
            for (int l = 0; l < j; ++l) cur = cur + basis_[l];
            cur = cur + basis_[j];
            visit(cur);
        }
    }

    /// Explicit element list (materializes additive spans; budgeted).
    std::vector<SymForm> elements() const
    {
        std::vector<SymForm> out;
        for_each([&](const SymForm& B) { out.push_back(B); });
        return out;
    }

private:
    FormSet(const FieldSpec& F, int m, bool additive) : F_(&F), m_(m), additive_(additive) {}

    const FieldSpec* F_;
    int m_;
    bool additive_;
    std::vector<SymForm> forms_;
    std::vector<SymForm> basis_;
};

inline Distribution inner_distribution(const FormSet& Y)
{
    Distribution d;
    d.m = Y.m();
    d.q = Y.field().q();
    if (Y.is_additive()) {
        // a_{i,tau} = |Y cap X_{i,tau}|
        Y.for_each([&](const SymForm& B) {
            RankType rt = rank_type(B);
            d.add(rt.rank, rt.type, 1);
        });
        return d;
    }
    const auto& forms = Y.forms();
    if (forms.empty()) return d;
    check_budget(Int(forms.size()) * Int(forms.size()), "pairwise difference enumeration");
    Rat inv_size = Rat(1, (long)forms.size());
    for (const auto& A : forms)
        for (const auto& B : forms) {
            RankType rt = rank_type(A - B);
            d.add(rt.rank, rt.type, inv_size);
        }
    return d;
}

/// a'_{k,e} = sum Q_{k,e}(i,t) a_{i,t}.  The result must be rational and
/// nonnegative; anything else signals an upstream inconsistency.
inline Distribution dual_distribution(const Distribution& a, const QNumberTable& T)
{
    if (a.m != T.m() || a.q != T.q())
        throw error(errc::dimension_mismatch, "distribution and table parameters differ");
    Distribution d;
    d.m = a.m;
    d.q = a.q;
    const int n = T.size();
    for (int row = 0; row < n; ++row) {
        auto [k, eps] = T.label(row);
        GaussInt acc(0, 0, a.q);
        for (const auto& [key, v] : a.a) acc += T.at(k, eps, key.first, key.second) * v;
        if (acc.b != 0)
            throw error(errc::non_real_dual, "dual distribution has a gamma component");
        if (acc.a < 0) throw error(errc::negative_dual, "dual distribution entry is negative");
        d.add(k, eps, acc.a);
    }
    return d;
}

/// The A/B/C/D repackaging of a distribution; C and D absorb the rational
/// eta(-1)^s q^{-s} prefactor.
struct ABCDProfile {
    std::vector<Rat> A, B, C, D; // index s = 0 .. floor((m+1)/2)
};

inline ABCDProfile abcd(const Distribution& a)
{
    const int nmax = (a.m + 1) / 2 + 1;
    const int sgn = a.q % 4 == 1 ? 1 : -1;
    ABCDProfile P{std::vector<Rat>(nmax + 1, 0), std::vector<Rat>(nmax + 1, 0),
                  std::vector<Rat>(nmax + 1, 0), std::vector<Rat>(nmax + 1, 0)};
    auto get = [&](int i, int tau) { return i < 0 || i > a.m ? Rat(0) : a.get(i, tau); };
    for (int s = 0; s <= nmax; ++s) {
        P.A[s] = get(2 * s, 1) + get(2 * s, -1) + get(2 * s - 1, 1) + get(2 * s - 1, -1);
        P.B[s] = get(2 * s, 1) + get(2 * s, -1) + get(2 * s + 1, 1) + get(2 * s + 1, -1);
        Rat pref = Rat(s % 2 == 0 ? 1 : sgn) * rpow(a.q, -s);
        P.C[s] = pref * (get(2 * s, 1) - get(2 * s, -1));
        P.D[s] = pref * (get(2 * s + 1, 1) - get(2 * s + 1, -1));
    }
    return P;
}

inline Distribution abcd_inverse(const ABCDProfile& P, int m, long q)
{
    const int sgn = q % 4 == 1 ? 1 : -1;
    Distribution d;
    d.m = m;
    d.q = q;
    // even sums E_s and odd sums O_s from A_s = E_s + O_{s-1}, B_s = E_s + O_s
    std::vector<Rat> E(P.A.size(), 0), O(P.A.size(), 0);
    Rat prevO = 0;
    for (size_t s = 0; s < P.A.size(); ++s) {
        E[s] = P.A[s] - prevO;
        O[s] = P.B[s] - E[s];
        prevO = O[s];
    }
    for (size_t s = 0; s < P.A.size(); ++s) {
        Rat pref = Rat(s % 2 == 0 ? 1 : sgn) * rpow(q, (long)s);
        Rat de = pref * P.C[s]; // a_{2s,1} - a_{2s,-1}
        Rat dz = pref * P.D[s]; // a_{2s+1,1} - a_{2s+1,-1}
        int i = 2 * (int)s;
        if (i <= m) {
            if (i == 0)
                d.add(0, 1, E[s]);
            else {
                d.add(i, 1, (E[s] + de) / 2);
                d.add(i, -1, (E[s] - de) / 2);
            }
        }
        if (i + 1 <= m) {
            d.add(i + 1, 1, (O[s] + dz) / 2);
            d.add(i + 1, -1, (O[s] - dz) / 2);
        }
    }
    return d;
}

/// The four transform identities linking (A,B,C,D) of a distribution to
/// (A',B',C',D') of its dual; the D' identity is checked with gamma symbolic.
inline bool four_equations_check(const Distribution& a, const Distribution& ad)
{
    const int m = a.m;
    const long q = a.q;
    ABCDProfile P = abcd(a), Pd = abcd(ad);
    const int R = (int)Pd.A.size();
    for (int r = 0; r < R; ++r) {
        Rat Ar = 0, Cr = 0, Br = 0, Dr = 0;
        for (int s = 0; s < (int)P.A.size(); ++s) {
            Ar += Rat(krawtchouk(m + 1, r, s, q)) * P.A[s];
            Cr += Rat(krawtchouk(m, r, s, q)) * P.B[s];
            Br += Rat(krawtchouk(m, r, s, q)) * P.C[s];
            Dr += Rat(krawtchouk(m - 1, r, s, q)) * P.D[s];
        }
        if (Pd.A[r] != Ar) return false;
        if (Pd.C[r] != Cr) return false;
        if (Pd.B[r] != Rat(ipow(q, m)) * Br) return false;
        // D'_r (rational) vs q^{m-1} gamma * sum: equal in Z[gamma] only if
        // both sides vanish
        GaussInt lhs(Pd.D[r], 0, q);
        GaussInt rhs(0, Rat(ipow(q, m - 1)) * Dr, q);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

inline bool is_d_code(const Distribution& a, int d)
{
    for (const auto& [k, v] : a.a)
        if (k.first >= 1 && k.first <= d - 1 && v != 0) return false;
    return true;
}

inline bool is_t_design(const Distribution& ad, int t)
{
    for (const auto& [k, v] : ad.a)
        if (k.first >= 1 && k.first <= t && v != 0) return false;
    return true;
}

inline bool is_design_eps(const Distribution& ad, int t, int eps)
{
    return is_t_design(ad, 2 * t + 1) && ad.get(2 * t + 2, eps) == 0;
}

inline Int bound_additive(int m, long q, int d)
{
    if (d < 1 || d > m) throw error(errc::invalid_params, "d out of range");
    if ((m - d) % 2 == 0) return ipow(q, (long)m * (m - d + 2) / 2);
    return ipow(q, (long)(m + 1) * (m - d + 1) / 2);
}

/// Size bound for (2 delta - 1)-codes, not necessarily additive.
inline Int bound_odd(int m, long q, int delta)
{
    if (m % 2 == 1) return ipow(q, (long)m * ((m + 1) / 2 - delta + 1));
    return ipow(q, (long)(m + 1) * (m / 2 - delta + 1));
}

/// Size bound for (2 delta)-codes, not necessarily additive.
inline Rat bound_even_nonadditive(int m, long q, int delta)
{
    if (m % 2 == 1)
        return Rat(ipow(q, (long)m * ((m + 1) / 2 - delta + 1))) * (1 + rpow(q, -m + 1)) /
               (q + 1);
    return Rat(ipow(q, (long)(m + 1) * (m / 2 - delta + 1))) *
           (1 + rpow(q, -m + 2 * delta - 1)) / (q + 1);
}

/// Recover (w_i) from its F^{(m)}-transform (w'_r) given w_1..w_{delta-1}=0.
inline std::vector<Rat> invert_distribution(const std::vector<Rat>& w,
                                            const std::vector<Rat>& wp, int m, long q,
                                            int delta)
{
    const int n = m / 2;
    for (int s = 1; s < delta && s < (int)w.size(); ++s)
        if (w[s] != 0) throw error(errc::precondition_violated, "w_1..w_{delta-1} must vanish");
    const Int c = ipow(q, m % 2 == 0 ? m - 1 : m);
    auto wp_at = [&](int r) { return r < (int)wp.size() ? wp[r] : Rat(0); };
    Rat w0 = w.empty() ? Rat(0) : w[0];
    std::vector<Rat> out(n + 1, 0);
    out[0] = w0;
    for (int i = 1; i <= n; ++i) {
        Rat acc = 0;
        for (int j = 0; j <= i - delta; ++j) {
            Rat cp = rpow(c, n + j - i);
            Rat term = qbinom_rational(n, i, q) * qbinom_rational(i, j, q) *
                       (wp_at(0) / cp - w0);
            Rat inner = 0;
            for (int r = 1; r <= n + j - i; ++r)
                inner += qbinom_rational(n - r, i - j, q) * wp_at(r);
            term += qbinom_rational(n + j - i, n - i, q) * inner / cp;
            if (j % 2 != 0) term = -term;
            acc += Rat(ipow(q, (long)j * (j - 1))) * term;
        }
        out[i] = acc;
    }
    return out;
}

/// Inner distribution of a (2 delta - 1)-code that is also a sufficiently
/// strong design (odd-m and even-m branches).
inline Distribution closed_form_odd(int m, long q, int delta, const Int& size)
{
    if (delta < 1 || m < 1) throw error(errc::inconsistent_parameters, "invalid parameters");
    Distribution d;
    d.m = m;
    d.q = q;
    d.add(0, 1, 1);
    const int sgn = q % 4 == 1 ? 1 : -1;
    if (m % 2 == 1) {
        const int n = (m - 1) / 2;
        auto inner = [&](int i) {
            Rat acc = 0;
            for (int j = 0; j <= i - delta; ++j) {
                Rat t = qbinom_rational(i, j, q) *
                        (Rat(size) / rpow(q, (long)(2 * n + 1) * (n + 1 + j - i)) - 1);
                if (j % 2 != 0) t = -t;
                acc += Rat(ipow(q, (long)j * (j - 1))) * t;
            }
            return acc;
        };
        for (int i = 1; 2 * i - 1 <= m; ++i) {
            Rat odd = qbinom_rational(n, i - 1, q) * inner(i) / 2;
            d.add(2 * i - 1, 1, odd);
            d.add(2 * i - 1, -1, odd);
            if (2 * i > m) continue;
            Rat base = qbinom_rational(n, i, q) * inner(i) / 2;
            int sg = (i % 2 == 0) ? 1 : sgn;
            for (int tau : {1, -1})
                d.add(2 * i, tau,
                      (Rat(ipow(q, 2L * i)) + Rat(tau * sg) * Rat(ipow(q, (long)i))) * base);
        }
        return d;
    }
    const int n = m / 2;
    for (int i = 1; 2 * i - 1 <= m; ++i) {
        Rat odd = 0;
        for (int j = 0; j <= i - delta; ++j) {
            Rat t = qbinom_rational(i - 1, j, q) * Rat(size) * Rat(ipow(q, 2L * j)) /
                    rpow(q, (long)(2 * n + 1) * (n + 1 + j - i));
            if (j % 2 != 0) t = -t;
            odd += Rat(ipow(q, (long)j * (j - 1))) * t;
        }
        odd *= Rat(ipow(q, 2L * i) - 1) * qbinom_rational(n, i, q) / 2;
        d.add(2 * i - 1, 1, odd);
        d.add(2 * i - 1, -1, odd);
        if (2 * i > m) continue;
        Rat even = 0;
        for (int j = 0; j <= i - delta + 1; ++j) {
            Rat t = qbinom_rational(i, j, q) *
                    (Rat(size) * Rat(ipow(q, 2L * j)) /
                         rpow(q, (long)(2 * n + 1) * (n + j - i)) -
                     1);
            if (j % 2 != 0) t = -t;
            even += Rat(ipow(q, (long)j * (j - 1))) * t;
        }
        even *= qbinom_rational(n, i, q) / 2;
        Rat skew = 0;
        for (int j = 0; j <= i - delta; ++j) {
            Rat t = qbinom_rational(i, j, q) *
                    (Rat(size) / (rpow(q, (long)(2 * n - 1) * (n + j - i)) *
                                  Rat(ipow(q, 2L * n))) -
                     1);
            if (j % 2 != 0) t = -t;
            skew += Rat(ipow(q, (long)j * (j - 1))) * t;
        }
        skew *= Rat((i % 2 == 0 ? 1 : sgn)) * Rat(ipow(q, (long)i)) *
                qbinom_rational(n, i, q) / 2;
        for (int tau : {1, -1}) d.add(2 * i, tau, even + Rat(tau) * skew);
    }
    return d;
}

/// Inner distribution of a (2 delta)-code with the matching design property
/// (even-m and odd-m branches).
inline Distribution closed_form_even(int m, long q, int delta, const Int& size)
{
    if (delta < 1 || m < 1) throw error(errc::inconsistent_parameters, "invalid parameters");
    Distribution d;
    d.m = m;
    d.q = q;
    d.add(0, 1, 1);
    const int sgn = q % 4 == 1 ? 1 : -1;
    if (m % 2 == 0) {
        const int n = m / 2;
        for (int i = 1; 2 * i - 1 <= m; ++i) {
            Rat odd = 0;
            for (int j = 0; j <= i - delta - 1; ++j) {
                Rat t = qbinom_rational(i - 1, j, q) * Rat(size) * Rat(ipow(q, 2L * j)) /
                        rpow(q, (long)(2 * n + 1) * (n + 1 + j - i));
                if (j % 2 != 0) t = -t;
                odd += Rat(ipow(q, (long)j * (j - 1))) * t;
            }
            odd *= Rat(ipow(q, 2L * i) - 1) * qbinom_rational(n, i, q) / 2;
            d.add(2 * i - 1, 1, odd);
            d.add(2 * i - 1, -1, odd);
            if (2 * i > m) continue;
            Rat even = 0;
            for (int j = 0; j <= i - delta; ++j) {
                Rat t = qbinom_rational(i, j, q) *
                        (Rat(size) * Rat(ipow(q, 2L * j)) /
                             rpow(q, (long)(2 * n + 1) * (n + j - i)) -
                         1);
                if (j % 2 != 0) t = -t;
                even += Rat(ipow(q, (long)j * (j - 1))) * t;
            }
            even *= qbinom_rational(n, i, q) / 2;
            Rat skew = 0;
            for (int j = 0; j <= i - delta; ++j) {
                Rat t = qbinom_rational(i, j, q) *
                        (Rat(size) / (rpow(q, (long)(2 * n - 1) * (n + j - i)) *
                                      Rat(ipow(q, 2L * n))) -
                         1);
                if (j % 2 != 0) t = -t;
                skew += Rat(ipow(q, (long)j * (j - 1))) * t;
            }
            skew *= Rat((i % 2 == 0 ? 1 : sgn)) * Rat(ipow(q, (long)i)) *
                    qbinom_rational(n, i, q) / 2;
            for (int tau : {1, -1}) d.add(2 * i, tau, even + Rat(tau) * skew);
        }
        return d;
    }
    const int n = (m - 1) / 2;
    Rat excess = Rat(size) / rpow(q, (long)(2 * n + 1) * (n - delta + 1)) - 1;
    auto inner = [&](int i) {
        Rat acc = 0;
        for (int j = 0; j <= i - delta; ++j) {
            Rat t = qbinom_rational(i, j, q) *
                    (Rat(size) / rpow(q, (long)(2 * n + 1) * (n + 1 + j - i)) - 1);
            if (j % 2 != 0) t = -t;
            acc += Rat(ipow(q, (long)j * (j - 1))) * t;
        }
        return acc;
    };
    for (int i = 1; 2 * i - 1 <= m; ++i) {
        Rat odd = qbinom_rational(n, i - 1, q) * inner(i) / 2;
        if (i - delta >= 0) {
            Rat corr = Rat(ipow(q, (long)(i - delta) * (i - delta - 1))) *
                       qbinom_rational(n, delta - 1, q) * excess *
                       (qbinom_rational(n - delta, n - i + 1, q) *
                            (Rat(ipow(q, (long)(n - delta + 1))) + 1) -
                        qbinom_rational(n - delta + 1, n - i + 1, q)) /
                       2;
            if ((i - delta) % 2 != 0) corr = -corr;
            odd += corr;
        }
        d.add(2 * i - 1, 1, odd);
        d.add(2 * i - 1, -1, odd);
        if (2 * i > m) continue;
        Rat base = qbinom_rational(n, i, q) * inner(i) / 2;
        Rat corr2 = 0;
        if (i - delta >= 0) {
            corr2 = Rat(ipow(q, (long)(i - delta + 1) * (i - delta))) *
                    qbinom_rational(n, delta - 1, q) *
                    qbinom_rational(n - delta, n - i, q) *
                    (Rat(ipow(q, (long)(n - delta + 1))) + 1) * excess / 2;
            if ((i - delta) % 2 != 0) corr2 = -corr2;
        }
        int sg = (i % 2 == 0) ? 1 : sgn;
        for (int tau : {1, -1})
            d.add(2 * i, tau,
                  (Rat(ipow(q, 2L * i)) + Rat(tau * sg) * Rat(ipow(q, (long)i))) * base +
                      corr2);
    }
    return d;
}

/// Extension-count profile over all t-dimensional subspaces.
struct DesignProfile {
    bool constant = false;
    Rat count = 0; // the common count when constant
    // (canonical subspace index, packed restricted form) -> count
    std::map<std::pair<int, std::vector<int>>, Rat> table;
    int subspace_count = 0;
};

namespace detail {

/// All t x m reduced-echelon matrices over F_q (canonical subspace reps).
inline std::vector<std::vector<std::vector<int>>> echelon_subspaces(const FieldSpec& F, int m,
                                                                    int t)
{
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> piv(t);
    std::function<void(int, int)> choose = [&](int pos, int start) {
        if (pos == t) {
            // free positions: row r, column c with c > piv[r], c not a pivot
            std::vector<std::pair<int, int>> free_pos;
            std::vector<bool> is_piv(m, false);
            for (int r = 0; r < t; ++r) is_piv[piv[r]] = true;
            for (int r = 0; r < t; ++r)
                for (int c = piv[r] + 1; c < m; ++c)
                    if (!is_piv[c]) free_pos.push_back({r, c});
            std::vector<int> vals(free_pos.size(), 0);
            while (true) {
                std::vector<std::vector<int>> mat(t, std::vector<int>(m, 0));
                for (int r = 0; r < t; ++r) mat[r][piv[r]] = 1;
                for (size_t k = 0; k < free_pos.size(); ++k)
                    mat[free_pos[k].first][free_pos[k].second] = vals[k];
                out.push_back(mat);
                size_t k = 0;
                while (k < vals.size()) {
                    if (++vals[k] < F.q()) break;
                    vals[k++] = 0;
                }
                if (k == vals.size()) break;
                if (vals.empty()) break;
            }
            return;
        }
        for (int c = start; c < m - (t - pos - 1); ++c) {
            piv[pos] = c;
            choose(pos + 1, c + 1);
        }
    };
    if (t >= 0 && t <= m) choose(0, 0);
    return out;
}

} // namespace detail

inline DesignProfile design_extension_profile(const FormSet& Y, int t)
{
    const FieldSpec& F = Y.field();
    const int m = Y.m();
    auto subspaces = detail::echelon_subspaces(F, m, t);
    DesignProfile prof;
    prof.subspace_count = (int)subspaces.size();
    check_budget(Y.size() * (long)subspaces.size(), "design profile enumeration");

    Y.for_each([&](const SymForm& B) {
        for (size_t u = 0; u < subspaces.size(); ++u) {
            const auto& basis = subspaces[u];
            std::vector<int> packed;
            packed.reserve(t * (t + 1) / 2);
            for (int i = 0; i < t; ++i)
                for (int j = i; j < t; ++j) {
                    int acc = 0;
                    for (int r = 0; r < m; ++r)
                        for (int c = 0; c < m; ++c)
                            acc = F.add(acc,
                                        F.mul(F.mul(basis[i][r], B.at(r, c)), basis[j][c]));
                    packed.push_back(acc);
                }
            prof.table[{(int)u, packed}] += 1;
        }
    });

    // constant iff every (subspace, form) pair occurs equally often over the
    // full q^{t(t+1)/2} form space
    Int form_count = ipow(F.q(), t * (t + 1) / 2);
    Rat expected = Rat(Y.size()) / Rat(form_count);
    prof.constant = true;
    prof.count = expected;
    if (Int((long)prof.table.size()) != form_count * (long)subspaces.size())
        prof.constant = false; // some form has zero extensions
    for (const auto& [k, v] : prof.table)
        if (v != expected) {
            prof.constant = false;
            break;
        }
    return prof;
}

} // namespace symscheme
