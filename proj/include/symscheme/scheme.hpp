#pragma once

#include <complex>
#include <random>
#include <vector>

#include "symscheme/common.hpp"
#include "symscheme/symform.hpp"

namespace symscheme {

/// Element a + b*gamma of the ring Z[gamma] (rational a, b) with the single
/// relation gamma^2 = eta(-1) q.  All eigenvalue data lives here exactly.
struct GaussInt {
    Rat a{0};
    Rat b{0};
    long q = 0;
    int sgn = 0; // eta(-1): +1 if q = 1 mod 4, -1 if q = 3 mod 4

    GaussInt() = default;
    GaussInt(Rat a_, Rat b_, long q_) : a(std::move(a_)), b(std::move(b_)), q(q_), sgn(q_ % 4 == 1 ? 1 : -1) {}
    static GaussInt rational(Rat v, long q) { return GaussInt(std::move(v), 0, q); }
    static GaussInt gamma(long q) { return GaussInt(0, 1, q); }

    bool is_rational() const { return b == 0; }

    GaussInt operator+(const GaussInt& o) const { return GaussInt(a + o.a, b + o.b, q); }
    GaussInt operator-(const GaussInt& o) const { return GaussInt(a - o.a, b - o.b, q); }
    GaussInt operator-() const { return GaussInt(-a, -b, q); }
    GaussInt operator*(const GaussInt& o) const
    {
        Rat qq = Rat(sgn) * q;
        return GaussInt(a * o.a + qq * b * o.b, a * o.b + b * o.a, q);
    }
    GaussInt operator*(const Rat& c) const { return GaussInt(a * c, b * c, q); }
    GaussInt& operator+=(const GaussInt& o)
    {
        a += o.a;
        b += o.b;
        return *this;
    }
    bool operator==(const GaussInt& o) const { return a == o.a && b == o.b; }

    /// Complex conjugate: conj(gamma) = eta(-1) gamma.
    GaussInt conj() const { return GaussInt(a, Rat(sgn) * b, q); }

    /// Embed with a numeric value for gamma.
    std::complex<double> embed(std::complex<double> gamma_num) const
    {
        return std::complex<double>((double)a.convert_to<double>(), 0.0) +
               gamma_num * std::complex<double>((double)b.convert_to<double>(), 0.0);
    }
};

/// q^2-analog binomial coefficient, exact product formula.  Negative n is
/// handled through the rational product; the integer form requires an
/// integral result (always the case for n >= 0).
inline Rat qbinom_rational(long n, long k, long q)
{
    if (k < 0) return 0;
    Rat r = 1;
    for (long i = 1; i <= k; ++i)
        r *= (rpow(q, 2 * n - 2 * i + 2) - 1) / (rpow(q, 2 * i) - 1);
    return r;
}

inline Int qbinom(long n, long k, long q)
{
    Rat r = qbinom_rational(n, k, q);
    if (boost::multiprecision::denominator(r) != 1)
        throw error(errc::invalid_params, "q^2-binomial is not integral for these arguments");
    return boost::multiprecision::numerator(r);
}

/// Generalized Krawtchouk number F^{(m)}_r(s), with the convention that any
/// undefined index combination evaluates to zero.
inline Int krawtchouk(long m, long r, long s, long q)
{
    if (m < 0 || r < 0 || s < 0) return (m >= 0 && r == 0 && s == 0) ? 1 : 0;
    long n = m / 2;
    if (r > n || s > n) return 0;
    if (n == 0) return (r == 0 && s == 0) ? 1 : 0;
    // c = q^{m(m-1)/(2n)}: q^{m-1} for even m, q^m for odd m
    Int c = ipow(q, m % 2 == 0 ? m - 1 : m);
    Int sum = 0;
    Int cj = 1;
    for (long j = 0; j <= r; ++j) {
        Int term = ipow(q, (r - j) * (r - j - 1)) * qbinom(n - j, n - r, q) * qbinom(n - s, j, q) * cj;
        if ((r - j) % 2 != 0) term = -term;
        sum += term;
        cj *= c;
    }
    return sum;
}

/// Number of m x m symmetric matrices over F_q of rank i and type tau.
inline Int valency(long m, long q, long i, int tau)
{
    if (i < 0 || i > m) return 0;
    int sgn = q % 4 == 1 ? 1 : -1; // eta(-1)
    long s = i / 2;
    Rat num = 1;
    for (long j = 0; j < i; ++j) num *= Rat(ipow(q, m) - ipow(q, j));
    Rat den = 1;
    for (long j = 0; j < s; ++j) den *= Rat(ipow(q, 2 * s) - ipow(q, 2 * j));
    Rat v;
    if (i % 2 == 0) {
        long sg = (s % 2 == 0) ? 1 : sgn;
        v = Rat(ipow(q, s) + Int(sg * tau)) / 2 * num / den;
    } else {
        v = num / den / (2 * ipow(q, s));
    }
    if (boost::multiprecision::denominator(v) != 1)
        throw error(errc::internal, "valency is not integral");
    return boost::multiprecision::numerator(v);
}

/// Eigenvalue table of the scheme on m x m symmetric matrices over F_q.
/// Rows are indexed by (k, epsilon), columns by (i, tau); the pair (0, -1)
/// does not exist on either axis.
class QNumberTable {
public:
    QNumberTable(int m, long q)
        : m_(m), q_(q), sgn_(q % 4 == 1 ? 1 : -1),
          ent_(size(), std::vector<GaussInt>(size(), GaussInt(0, 0, q)))
    {
    }

    int m() const { return m_; }
    long q() const { return q_; }
    int sgn() const { return sgn_; }
    int size() const { return 2 * m_ + 1; }

    static int index_of(int k, int eps) { return k == 0 ? 0 : 2 * k - 1 + (eps < 0 ? 1 : 0); }
    std::pair<int, int> label(int idx) const
    {
        if (idx == 0) return {0, 1};
        return {(idx + 1) / 2, idx % 2 == 1 ? 1 : -1};
    }

    const GaussInt& at(int k, int eps, int i, int tau) const
    {
        return ent_[index_of(k, eps)][index_of(i, tau)];
    }
    GaussInt& at(int k, int eps, int i, int tau) { return ent_[index_of(k, eps)][index_of(i, tau)]; }
    const std::vector<std::vector<GaussInt>>& entries() const { return ent_; }
    std::vector<std::vector<GaussInt>>& entries() { return ent_; }

    bool operator==(const QNumberTable& o) const
    {
        return m_ == o.m_ && q_ == o.q_ && ent_ == o.ent_;
    }

private:
    int m_;
    long q_;
    int sgn_;
    std::vector<std::vector<GaussInt>> ent_;
};

namespace detail {

// eta(-1)^e as +-1
inline int sgn_pow(int sgn, long e) { return (e % 2 == 0) ? 1 : sgn; }

// sum S and difference R of the two type components of a Q-number row pair;
// Q_{k,eps} = (S_k + eps R_k) / 2 for k, i >= 1.
inline GaussInt S_number(int m, long q, int k, int i, int tau)
{
    const int sgn = q % 4 == 1 ? 1 : -1;
    if (i % 2 == 1) {
        long r = (k % 2 == 1) ? (k - 1) / 2 : k / 2;
        long s = (i - 1) / 2;
        Rat val = Rat(ipow(q, 2 * r)) * Rat(krawtchouk(m - 1, r, s, q));
        if (k % 2 == 1) val = -val;
        return GaussInt(val, 0, q);
    }
    long s = i / 2;
    if (k % 2 == 1) {
        long r = (k - 1) / 2;
        Rat v1 = -Rat(ipow(q, 2 * r)) * Rat(krawtchouk(m - 1, r, s - 1, q));
        Rat v2 = Rat(tau * sgn_pow(sgn, s)) * Rat(ipow(q, m - s + 2 * r)) *
                 Rat(krawtchouk(m - 2, r, s - 1, q));
        return GaussInt(v1 + v2, 0, q);
    }
    long r = k / 2;
    Rat v1 = Rat(ipow(q, 2 * r)) * Rat(krawtchouk(m - 1, r, s - 1, q));
    Rat v2 = 0;
    if (r >= 1)
        v2 = -Rat(tau * sgn_pow(sgn, s)) * Rat(ipow(q, m - s + 2 * r - 2)) *
             Rat(krawtchouk(m - 2, r - 1, s - 1, q));
    return GaussInt(v1 + v2, 0, q);
}

inline GaussInt R_number(int m, long q, int k, int i, int tau)
{
    const int sgn = q % 4 == 1 ? 1 : -1;
    if (k % 2 == 1) {
        long r = (k - 1) / 2;
        if (i % 2 == 0) return GaussInt(0, 0, q);
        long s = (i - 1) / 2;
        Rat coef = Rat(tau * sgn_pow(sgn, r + s)) * Rat(ipow(q, m - s + r - 1)) *
                   Rat(krawtchouk(m - 1, r, s, q));
        return GaussInt(0, coef, q); // carries one factor gamma
    }
    long r = k / 2;
    Rat val = Rat(sgn_pow(sgn, r)) * Rat(ipow(q, r)) * Rat(krawtchouk(m, r, i / 2, q));
    return GaussInt(val, 0, q);
}

} // namespace detail

/// Eigenvalue table from the closed-form expressions.
inline QNumberTable q_numbers_explicit(int m, long q)
{
    QNumberTable T(m, q);
    const int n = T.size();
    for (int col = 0; col < n; ++col) {
        auto [i, tau] = T.label(col);
        T.at(0, 1, i, tau) = GaussInt(1, 0, q);
    }
    for (int row = 1; row < n; ++row) {
        auto [k, eps] = T.label(row);
        T.at(k, eps, 0, 1) = GaussInt(Rat(valency(m, q, k, eps)), 0, q);
        for (int col = 1; col < n; ++col) {
            auto [i, tau] = T.label(col);
            GaussInt S = detail::S_number(m, q, k, i, tau);
            GaussInt R = detail::R_number(m, q, k, i, tau);
            GaussInt num = (eps == 1) ? S + R : S - R;
            T.at(k, eps, i, tau) = num * Rat(1, 2);
        }
    }
    return T;
}

/// Eigenvalue table built dimension by dimension from the one-step recurrence.
inline QNumberTable q_numbers_recurrence(int m, long q)
{
    // Q^{(0)} is the 1x1 table [1].
    QNumberTable prev(0, q);
    prev.at(0, 1, 0, 1) = GaussInt(1, 0, q);

    const GaussInt gamma = GaussInt::gamma(q);
    const GaussInt qg = GaussInt(q, 0, q);

    for (int mm = 1; mm <= m; ++mm) {
        QNumberTable cur(mm, q);
        const int n = cur.size();
        for (int col = 0; col < n; ++col) {
            auto [i, tau] = cur.label(col);
            cur.at(0, 1, i, tau) = GaussInt(1, 0, q);
        }
        for (int row = 1; row < n; ++row) {
            auto [k, eps] = cur.label(row);
            cur.at(k, eps, 0, 1) = GaussInt(Rat(valency(mm, q, k, eps)), 0, q);
        }
        // previous-dimension values at (k-1, +-eps), honoring Q_{0,-1} = 0
        auto prev_at = [&](int k1, int e1, int i1) -> GaussInt {
            if (k1 == 0 && e1 == -1) return GaussInt(0, 0, q);
            return prev.at(k1, e1, i1, 1);
        };
        for (int i = 1; i <= mm; ++i) {
            GaussInt gpow = GaussInt(1, 0, q);
            for (int t = 0; t < i - 1; ++t) gpow = gpow * gamma;
            GaussInt scale = gpow * Rat(ipow(q, mm - i), 2);
            for (int row = 1; row < n; ++row) {
                auto [k, eps] = cur.label(row);
                for (int tau : {1, -1}) {
                    GaussInt base = cur.at(k, eps, i - 1, 1);
                    GaussInt tg = gamma * Rat(tau);
                    GaussInt first = prev_at(k - 1, eps, i - 1) * (qg - tg);
                    GaussInt second = prev_at(k - 1, -eps, i - 1) * (qg + tg);
                    GaussInt bracket = (i % 2 == 0) ? first - second : first + second;
                    cur.at(k, eps, i, tau) = base - scale * bracket;
                }
            }
        }
        prev = std::move(cur);
    }
    return prev;
}

/// Numeric Gauss sum for the canonical character.
inline std::complex<double> gauss_sum_numeric(const FieldSpec& F)
{
    std::complex<double> s = 0;
    for (FqElem y = 1; y < F.q(); ++y)
        s += (double)F.eta(y) * F.canonical_character(y);
    return s;
}

/// Diagonal class representative diag(z, 1, ..., 1, 0, ...) of rank k and
/// type eps, with z = 1 or the smallest nonsquare.
inline SymForm class_representative(const FieldSpec& F, int m, int k, int eps)
{
    SymForm B(&F, m);
    if (k > 0) {
        B.set(0, 0, eps == 1 ? F.one() : F.smallest_nonsquare());
        for (int i = 1; i < k; ++i) B.set(i, i, F.one());
    }
    return B;
}

struct QNumberOracle {
    int m;
    long q;
    std::vector<std::vector<std::complex<double>>> Q; // indexed like QNumberTable
    double representative_deviation = 0.0;            // max over 3 random representatives
};

/// Character-sum route: P_{i,tau}(k,eps) summed over an exhaustive pass of
/// the space, then Q = conj(P).  Checks that three random representatives of
/// each class give the same row.
inline QNumberOracle q_numbers_charsum_oracle(const FieldSpec& F, int m)
{
    const int n = 2 * m + 1;
    QNumberOracle out{m, F.q(), std::vector<std::vector<std::complex<double>>>(
                                    n, std::vector<std::complex<double>>(n)),
                      0.0};
    check_budget(space_size(F, m), "character-sum oracle");

    std::mt19937 rng(20141025);
    auto random_representative = [&](int k, int eps) {
        // random congruence L^T B L of the diagonal representative
        SymForm B = class_representative(F, m, k, eps);
        std::vector<std::vector<int>> L(m, std::vector<int>(m));
        while (true) {
            for (auto& row : L)
                for (auto& v : row) v = (int)(rng() % F.q());
            // nonsingularity via Gaussian elimination
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
            if (rank == m) break;
        }
        SymForm C(&F, m);
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                int acc = 0;
                for (int r = 0; r < m; ++r)
                    for (int c = 0; c < m; ++c)
                        acc = F.add(acc, F.mul(F.mul(L[r][i], B.at(r, c)), L[c][j]));
                C.set(i, j, acc);
            }
        return C;
    };

    QNumberTable labels(m, F.q());
    std::vector<SymForm> reps;
    for (int row = 0; row < n; ++row) {
        auto [k, eps] = labels.label(row);
        reps.push_back(class_representative(F, m, k, eps));
    }

    auto accumulate = [&](const std::vector<SymForm>& rep_set,
                          std::vector<std::vector<std::complex<double>>>& P) {
        enumerate_forms(F, m, [&](const SymForm& A) {
            RankType rt = rank_type(A);
            int col = QNumberTable::index_of(rt.rank, rt.type);
            for (int row = 0; row < n; ++row)
                P[col][row] += std::conj(pairing_char(A, rep_set[row]));
        });
    };

    std::vector<std::vector<std::complex<double>>> P(n, std::vector<std::complex<double>>(n));
    accumulate(reps, P);
    // P[(k,eps)][(i,tau)] sums over the class (k,eps) against a representative
    // of (i,tau); the Q-number is its conjugate with the same index roles.
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.Q[r][c] = std::conj(P[r][c]);

    for (int trial = 0; trial < 3; ++trial) {
        std::vector<SymForm> rnd;
        for (int row = 0; row < n; ++row) {
            auto [k, eps] = labels.label(row);
            rnd.push_back(random_representative(k, eps));
        }
        std::vector<std::vector<std::complex<double>>> P2(n, std::vector<std::complex<double>>(n));
        accumulate(rnd, P2);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                out.representative_deviation =
                    std::max(out.representative_deviation, std::abs(P2[r][c] - P[r][c]));
    }
    if (out.representative_deviation > 1e-6)
        throw error(errc::internal, "character sums depend on the class representative");
    return out;
}

/// Exact check of Q P = |X| I, using P_{i,t}(k,e) = conj Q_{i,t}(k,e).
inline bool pq_orthogonality_check(const QNumberTable& T)
{
    const int n = T.size();
    const long q = T.q();
    Int total = ipow(q, (long)T.m() * (T.m() + 1) / 2);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            GaussInt acc(0, 0, q);
            for (int j = 0; j < n; ++j)
                acc += T.entries()[r][j] * T.entries()[j][c].conj();
            GaussInt expect = (r == c) ? GaussInt(Rat(total), 0, q) : GaussInt(0, 0, q);
            if (!(acc == expect)) return false;
        }
    }
    return true;
}

} // namespace symscheme
