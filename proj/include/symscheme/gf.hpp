#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "symscheme/common.hpp"

namespace symscheme {

// Elements of F_q are stored as integer indices in [0, q).  The index encodes
// the polynomial-basis coordinate vector over F_p in base p, constant term in
// the lowest digit.  Elements of the tower F_{q^m} are coordinate vectors of
// length m over F_q (again polynomial basis, constant term first).
using FqElem = int;
using TowerElem = std::vector<int>;

namespace detail {

inline bool is_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Poly = std::vector<long>; // coefficients mod p, constant first

inline void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly pmul(const Poly& a, const Poly& b, long p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

inline Poly pmod(Poly a, const Poly& f, long p)
{
    trim(a);
    // inverse of the leading coefficient, so non-monic divisors work too
    long lead_inv = 1;
    for (long x = 1; x < p; ++x)
        if (x * f.back() % p == 1) {
            lead_inv = x;
            break;
        }
    while (a.size() >= f.size()) {
        long c = a.back() * lead_inv % p;
        size_t shift = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i) {
            long& x = a[shift + i];
            x = ((x - c * f[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

inline Poly ppowmod(Poly base, Int e, const Poly& f, long p)
{
    Poly r{1};
    base = pmod(std::move(base), f, p);
    while (e > 0) {
        if ((e & 1) != 0) r = pmod(pmul(r, base, p), f, p);
        base = pmod(pmul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

inline Poly pgcd(Poly a, Poly b, long p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline bool irreducible_mod_p(const Poly& f, long p)
{
    const size_t e = f.size() - 1;
    if (e == 0) return false;
    // gcd(x^{p^k} - x, f) = 1 for 1 <= k < e and x^{p^e} = x mod f.
    for (size_t k = 1; k < e; ++k) {
        Poly xp = ppowmod(Poly{0, 1}, ipow(p, (long)k), f, p);
        if (xp.size() < 2)
            xp.resize(2, 0);
        Poly g = xp;
        g[1] = ((g[1] - 1) % p + p) % p;
        trim(g);
        Poly d = pgcd(f, g, p);
        if (d.size() != 1) return false;
    }
    Poly xpe = ppowmod(Poly{0, 1}, ipow(p, (long)e), f, p);
    Poly x = pmod(Poly{0, 1}, f, p);
    return xpe == x;
}

} // namespace detail

/// Exact arithmetic context for F_q = F_p^e (p an odd prime) with an optional
/// tower extension F_{q^m}.  All base-field operations are table lookups.
class FieldSpec {
public:
    FieldSpec(long p, int e, std::optional<std::vector<long>> modulus = std::nullopt)
        : p_(p), e_(e)
    {
        if (p % 2 == 0) throw error(errc::even_characteristic, "characteristic must be odd");
        if (!detail::is_prime(p)) throw error(errc::not_prime, "p is not prime");
        if (e < 1) throw error(errc::invalid_params, "extension degree must be >= 1");
        Int qq = ipow(p, e);
        if (qq > 1024) throw error(errc::limit_exceeded, "field too large for table-based arithmetic");
        q_ = (long)qq;

        if (modulus) {
            if ((int)modulus->size() != e + 1)
                throw error(errc::invalid_params, "modulus must have degree e");
            modulus_.assign(modulus->begin(), modulus->end());
            for (auto& c : modulus_) c = ((c % p) + p) % p;
            if (modulus_.back() != 1)
                throw error(errc::invalid_params, "modulus must be monic");
            if (!detail::irreducible_mod_p(modulus_, p))
                throw error(errc::reducible_modulus, "modulus is reducible over F_p");
        } else {
            modulus_ = smallest_irreducible(p, e);
        }
        build_tables();
    }

    long p() const { return p_; }
    int e() const { return e_; }
    long q() const { return q_; }
    const std::vector<long>& modulus() const { return modulus_; }

    // ---- base field F_q -------------------------------------------------

    FqElem add(FqElem a, FqElem b) const { return add_t_[a * q_ + b]; }
    FqElem sub(FqElem a, FqElem b) const { return add_t_[a * q_ + neg_t_[b]]; }
    FqElem mul(FqElem a, FqElem b) const { return mul_t_[a * q_ + b]; }
    FqElem neg(FqElem a) const { return neg_t_[a]; }
    FqElem inv(FqElem a) const
    {
        if (a == 0) throw error(errc::invalid_params, "inverse of zero");
        return inv_t_[a];
    }
    FqElem one() const { return 1; }

    FqElem pow(FqElem a, Int n) const
    {
        if (a == 0) return n == 0 ? 1 : 0;
        n %= q_ - 1;
        if (n < 0) n += q_ - 1;
        FqElem r = 1, b = a;
        while (n > 0) {
            if ((n & 1) != 0) r = mul(r, b);
            b = mul(b, b);
            n >>= 1;
        }
        return r;
    }

    /// Embed an integer into F_q (as a multiple of 1).
    FqElem from_int(long n) const { return (int)(((n % p_) + p_) % p_); }

    /// Coordinates of an element over F_p, constant term first.
    std::vector<int> coords(FqElem a) const
    {
        std::vector<int> c(e_);
        for (int i = 0; i < e_; ++i) {
            c[i] = (int)(a % p_);
            a /= (int)p_;
        }
        return c;
    }

    /// Quadratic character, extended by eta(0) = 0.
    int eta(FqElem a) const { return eta_t_[a]; }
    int eta_minus_one() const { return eta_t_[neg_t_[1]]; }

    /// Smallest element index with eta = -1.
    FqElem smallest_nonsquare() const
    {
        for (FqElem a = 1; a < q_; ++a)
            if (eta_t_[a] == -1) return a;
        throw error(errc::internal, "no nonsquare found");
    }

    /// Trace down to the prime field, returned as an integer in [0, p).
    int absolute_trace(FqElem a) const { return abstr_t_[a]; }

    FqElem frobenius_p(FqElem a) const { return frob_t_[a]; }

    /// chi(x) = exp(2 pi i Tr_{F_q/F_p}(x) / p).  Numeric oracle only.
    std::complex<double> canonical_character(FqElem a) const
    {
        double arg = 2.0 * std::numbers::pi * absolute_trace(a) / (double)p_;
        return {std::cos(arg), std::sin(arg)};
    }

    // ---- tower F_{q^m} --------------------------------------------------

    void configure_tower(int m, std::optional<std::vector<int>> modulus = std::nullopt)
    {
        if (m < 1) throw error(errc::invalid_params, "tower degree must be >= 1");
        tm_ = m;
        if (modulus) {
            if ((int)modulus->size() != m + 1 || modulus->back() != 1)
                throw error(errc::invalid_params, "tower modulus must be monic of degree m");
            tmod_ = *modulus;
            if (!tower_irreducible(tmod_))
                throw error(errc::reducible_modulus, "tower modulus is reducible over F_q");
        } else {
            tmod_ = smallest_tower_irreducible(m);
        }
        build_tower_frobenius();
    }

    bool has_tower() const { return tm_ > 0; }
    int tower_degree() const
    {
        require_tower();
        return tm_;
    }
    const std::vector<int>& tower_modulus() const { return tmod_; }
    Int tower_order() const
    {
        require_tower();
        return ipow(q_, tm_);
    }

    TowerElem tzero() const { return TowerElem(tm_, 0); }
    TowerElem tone() const
    {
        TowerElem r(tm_, 0);
        r[0] = 1;
        return r;
    }
    TowerElem embed(FqElem a) const
    {
        require_tower();
        TowerElem r(tm_, 0);
        r[0] = a;
        return r;
    }

    bool tis_zero(const TowerElem& x) const
    {
        return std::all_of(x.begin(), x.end(), [](int c) { return c == 0; });
    }

    TowerElem tadd(const TowerElem& x, const TowerElem& y) const
    {
        TowerElem r(tm_);
        for (int i = 0; i < tm_; ++i) r[i] = add(x[i], y[i]);
        return r;
    }
    TowerElem tsub(const TowerElem& x, const TowerElem& y) const
    {
        TowerElem r(tm_);
        for (int i = 0; i < tm_; ++i) r[i] = sub(x[i], y[i]);
        return r;
    }
    TowerElem tscale(FqElem c, const TowerElem& x) const
    {
        TowerElem r(tm_);
        for (int i = 0; i < tm_; ++i) r[i] = mul(c, x[i]);
        return r;
    }

    TowerElem tmul(const TowerElem& x, const TowerElem& y) const
    {
        std::vector<int> prod(2 * tm_ - 1, 0);
        for (int i = 0; i < tm_; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < tm_; ++j)
                prod[i + j] = add(prod[i + j], mul(x[i], y[j]));
        }
        // reduce by the monic tower modulus
        for (int d = 2 * tm_ - 2; d >= tm_; --d) {
            int c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < tm_; ++i)
                prod[d - tm_ + i] = sub(prod[d - tm_ + i], mul(c, tmod_[i]));
        }
        prod.resize(tm_);
        return prod;
    }

    TowerElem tpow(TowerElem x, Int n) const
    {
        Int ord = tower_order() - 1;
        if (tis_zero(x)) return n == 0 ? tone() : tzero();
        n %= ord;
        if (n < 0) n += ord;
        TowerElem r = tone();
        while (n > 0) {
            if ((n & 1) != 0) r = tmul(r, x);
            x = tmul(x, x);
            n >>= 1;
        }
        return r;
    }

    TowerElem tinv(const TowerElem& x) const
    {
        if (tis_zero(x)) throw error(errc::invalid_params, "inverse of zero");
        return tpow(x, tower_order() - 2);
    }

    /// x -> x^q, the F_q-linear Frobenius of the tower.
    TowerElem tfrobenius(const TowerElem& x) const
    {
        require_tower();
        TowerElem r(tm_, 0);
        for (int i = 0; i < tm_; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < tm_; ++j)
                r[j] = add(r[j], mul(x[i], tfrob_[i][j]));
        }
        return r;
    }

    /// Relative trace F_{q^m} -> F_q: sum of x^{q^k}, k = 0..m-1.
    FqElem trace(const TowerElem& x) const
    {
        require_tower();
        TowerElem acc = x, conj = x;
        for (int k = 1; k < tm_; ++k) {
            conj = tfrobenius(conj);
            acc = tadd(acc, conj);
        }
        for (int i = 1; i < tm_; ++i)
            if (acc[i] != 0) throw error(errc::internal, "relative trace not in base field");
        return acc[0];
    }

    /// Absolute trace F_{q^m} -> F_p.
    int absolute_trace(const TowerElem& x) const { return absolute_trace(trace(x)); }

    /// Deterministic primitive element of F_{q^m}: the first element, in index
    /// order of its coordinate vector, whose multiplicative order is q^m - 1.
    TowerElem tower_primitive() const
    {
        require_tower();
        Int ord = tower_order() - 1;
        std::vector<Int> primes;
        Int n = ord;
        for (Int d = 2; d * d <= n; ++d)
            while (n % d == 0) {
                if (primes.empty() || primes.back() != d) primes.push_back(d);
                n /= d;
            }
        if (n > 1) primes.push_back(n);

        TowerElem x = tzero();
        while (true) {
            // odometer over coordinates
            int i = 0;
            while (i < tm_) {
                x[i] = add(x[i], 1);
                if (x[i] != 0) break;
                ++i;
            }
            if (i == tm_) throw error(errc::internal, "no primitive element found");
            bool ok = true;
            for (const Int& ell : primes)
                if (tis_zero(tsub(tpow(x, ord / ell), tone()))) {
                    ok = false;
                    break;
                }
            if (ok) return x;
        }
    }

private:
    void require_tower() const
    {
        if (tm_ == 0) throw error(errc::no_tower_configured, "no tower configured");
    }

    static std::vector<long> smallest_irreducible(long p, int e)
    {
        // monic x^e + c_{e-1} x^{e-1} + ... + c_0; candidates ordered by the
        // base-p value of (c_0, c_1, ...), constant term in the lowest digit.
        std::vector<long> f(e + 1, 0);
        f[e] = 1;
        Int total = ipow(p, e);
        for (Int v = 0; v < total; ++v) {
            Int t = v;
            for (int i = 0; i < e; ++i) {
                f[i] = (long)(t % p);
                t /= p;
            }
            detail::Poly cand(f.begin(), f.end());
            if (detail::irreducible_mod_p(cand, p)) return f;
        }
        throw error(errc::internal, "no irreducible polynomial found");
    }

    void build_tables()
    {
        add_t_.resize(q_ * q_);
        mul_t_.resize(q_ * q_);
        neg_t_.resize(q_);
        inv_t_.assign(q_, 0);
        detail::Poly mod(modulus_.begin(), modulus_.end());
        auto to_poly = [&](int a) {
            detail::Poly f;
            while (a > 0) {
                f.push_back(a % p_);
                a /= (int)p_;
            }
            return f;
        };
        auto to_index = [&](const detail::Poly& f) {
            long idx = 0;
            for (size_t i = f.size(); i-- > 0;) idx = idx * p_ + f[i];
            return (int)idx;
        };
        for (int a = 0; a < q_; ++a) {
            detail::Poly fa = to_poly(a);
            for (int b = 0; b < q_; ++b) {
                detail::Poly fb = to_poly(b);
                detail::Poly s(std::max(fa.size(), fb.size()), 0);
                for (size_t i = 0; i < fa.size(); ++i) s[i] = fa[i];
                for (size_t i = 0; i < fb.size(); ++i) s[i] = (s[i] + fb[i]) % p_;
                detail::trim(s);
                add_t_[a * q_ + b] = to_index(s);
                mul_t_[a * q_ + b] = to_index(detail::pmod(detail::pmul(fa, fb, p_), mod, p_));
            }
        }
        for (int a = 0; a < q_; ++a) {
            detail::Poly fa = to_poly(a);
            for (auto& c : fa) c = (p_ - c) % p_;
            detail::trim(fa);
            neg_t_[a] = to_index(fa);
        }
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_t_[a * q_ + b] == 1) {
                    inv_t_[a] = b;
                    break;
                }

        frob_t_.resize(q_);
        for (int a = 0; a < q_; ++a) {
            int r = 1, b = a;
            long n = p_;
            if (a == 0) {
                frob_t_[a] = 0;
                continue;
            }
            while (n > 0) {
                if (n & 1) r = mul_t_[r * q_ + b];
                b = mul_t_[b * q_ + b];
                n >>= 1;
            }
            frob_t_[a] = r;
        }

        eta_t_.resize(q_);
        eta_t_[0] = 0;
        long half = (q_ - 1) / 2;
        for (int a = 1; a < q_; ++a) {
            int r = 1, b = a;
            long n = half;
            while (n > 0) {
                if (n & 1) r = mul_t_[r * q_ + b];
                b = mul_t_[b * q_ + b];
                n >>= 1;
            }
            eta_t_[a] = r == 1 ? 1 : -1;
        }

        abstr_t_.resize(q_);
        for (int a = 0; a < q_; ++a) {
            int acc = a, conj = a;
            for (int k = 1; k < e_; ++k) {
                conj = frob_t_[conj];
                acc = add_t_[acc * q_ + conj];
            }
            if (acc >= p_) throw error(errc::internal, "absolute trace not in prime field");
            abstr_t_[a] = acc;
        }
    }

    bool tower_irreducible(const std::vector<int>& f) const
    {
        const int m = (int)f.size() - 1;
        // same gcd test as over F_p, with F_q[x] arithmetic
        auto xqk_minus_x_coprime = [&](const Int& exp) {
            std::vector<int> xp = poly_powmod_q({0, 1}, exp, f);
            if ((int)xp.size() < 2) xp.resize(2, 0);
            std::vector<int> g = xp;
            g[1] = sub(g[1], 1);
            return poly_gcd_q(f, g).size() == 1;
        };
        for (int k = 1; k < m; ++k)
            if (!xqk_minus_x_coprime(ipow(q_, k))) return false;
        std::vector<int> xpe = poly_powmod_q({0, 1}, ipow(q_, m), f);
        std::vector<int> fv = f;
        std::vector<int> x = poly_mod_q({0, 1}, fv);
        return xpe == x;
    }

    std::vector<int> smallest_tower_irreducible(int m) const
    {
        std::vector<int> f(m + 1, 0);
        f[m] = 1;
        Int total = ipow(q_, m);
        for (Int v = 0; v < total; ++v) {
            Int t = v;
            for (int i = 0; i < m; ++i) {
                f[i] = (int)(t % q_);
                t /= q_;
            }
            if (tower_irreducible(f)) return f;
        }
        throw error(errc::internal, "no irreducible tower polynomial found");
    }

    static void trim_q(std::vector<int>& f)
    {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }

    std::vector<int> poly_mul_q(const std::vector<int>& a, const std::vector<int>& b) const
    {
        if (a.empty() || b.empty()) return {};
        std::vector<int> r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = add(r[i + j], mul(a[i], b[j]));
        }
        trim_q(r);
        return r;
    }

    std::vector<int> poly_mod_q(std::vector<int> a, const std::vector<int>& f) const
    {
        trim_q(a);
        std::vector<int> g = f;
        trim_q(g);
        int lead_inv = inv(g.back());
        while (a.size() >= g.size()) {
            int c = mul(a.back(), lead_inv);
            size_t shift = a.size() - g.size();
            for (size_t i = 0; i < g.size(); ++i)
                a[shift + i] = sub(a[shift + i], mul(c, g[i]));
            trim_q(a);
        }
        return a;
    }

    std::vector<int> poly_powmod_q(std::vector<int> base, Int n, const std::vector<int>& f) const
    {
        std::vector<int> r{1};
        base = poly_mod_q(std::move(base), f);
        while (n > 0) {
            if ((n & 1) != 0) r = poly_mod_q(poly_mul_q(r, base), f);
            base = poly_mod_q(poly_mul_q(base, base), f);
            n >>= 1;
        }
        return r;
    }

    std::vector<int> poly_gcd_q(std::vector<int> a, std::vector<int> b) const
    {
        trim_q(a);
        trim_q(b);
        while (!b.empty()) {
            std::vector<int> r = poly_mod_q(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    void build_tower_frobenius()
    {
        // images of the basis 1, theta, ..., theta^{m-1} under x -> x^q
        tfrob_.assign(tm_, TowerElem(tm_, 0));
        // theta^q by slow exponentiation using polynomial arithmetic mod tmod_
        std::vector<int> th{0, 1};
        std::vector<int> thq = poly_powmod_q(th, q_, tmod_);
        thq.resize(tm_, 0);
        std::vector<int> pow_i{1}; // (theta^q)^i
        for (int i = 0; i < tm_; ++i) {
            std::vector<int> img = pow_i;
            img.resize(tm_, 0);
            tfrob_[i] = img;
            pow_i = poly_mod_q(poly_mul_q(pow_i, thq), tmod_);
        }
    }

    long p_;
    int e_;
    long q_;
    std::vector<long> modulus_;
    std::vector<int> add_t_, mul_t_, neg_t_, inv_t_, eta_t_, abstr_t_, frob_t_;

    int tm_ = 0;
    std::vector<int> tmod_;
    std::vector<TowerElem> tfrob_;
};

/// Factor q into (p, e) with p prime; rejects non prime powers.
inline std::pair<long, int> factor_prime_power(long q)
{
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            int e = 0;
            long n = q;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            if (n != 1) throw error(errc::invalid_params, "q is not a prime power");
            return {d, e};
        }
    }
    if (q < 2) throw error(errc::invalid_params, "q must be a prime power");
    return {q, 1};
}

/// Construct the field F_{p^e}; default modulus is the deterministic
/// smallest irreducible of degree e.
inline FieldSpec field_create(long p, int e, std::optional<std::vector<long>> modulus = std::nullopt)
{
    return FieldSpec(p, e, std::move(modulus));
}

} // namespace symscheme
