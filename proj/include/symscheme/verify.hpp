#pragma once

#include <array>
#include <set>
#include <sstream>

#include "symscheme/construct.hpp"
#include "symscheme/hamming.hpp"
#include "symscheme/lp.hpp"

namespace symscheme {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline const std::vector<ConstructionParams>& construction_matrix()
{
    static const std::vector<ConstructionParams> M = {
        {1, 0, 3, 3}, {1, 1, 4, 3}, {1, 0, 4, 3}, {1, 1, 5, 3}, {2, 1, 5, 3}, {1, 0, 2, 5},
    };
    return M;
}

inline std::string params_str(const ConstructionParams& P)
{
    std::ostringstream os;
    os << "Y_" << P.s << "(" << P.t << "," << P.m << "," << P.q << ")";
    return os.str();
}

} // namespace detail

/// Explicit and recurrence tables agree exactly; the character-sum oracle
/// agrees numerically after embedding gamma.
inline CriterionResult criterion_three_routes()
{
    CriterionResult r{1, "three-route Q-number agreement", true, ""};
    const std::vector<std::pair<int, long>> cases = {{1, 3}, {2, 3}, {3, 3},
                                                     {4, 3}, {1, 5}, {2, 5}};
    double worst = 0;
    for (auto [m, q] : cases) {
        QNumberTable Te = q_numbers_explicit(m, q);
        QNumberTable Tr = q_numbers_recurrence(m, q);
        if (!(Te == Tr)) {
            r.pass = false;
            r.detail = "explicit != recurrence at m=" + std::to_string(m) +
                       " q=" + std::to_string(q);
            return r;
        }
        FieldSpec F = field_create(factor_prime_power(q).first, factor_prime_power(q).second);
        QNumberOracle O = q_numbers_charsum_oracle(F, m);
        std::complex<double> gamma = gauss_sum_numeric(F);
        for (int a = 0; a < Te.size(); ++a)
            for (int b = 0; b < Te.size(); ++b)
                worst = std::max(worst,
                                 std::abs(Te.entries()[a][b].embed(gamma) - O.Q[a][b]));
    }
    if (worst > 1e-6) {
        r.pass = false;
        r.detail = "oracle deviation " + std::to_string(worst);
    } else {
        std::ostringstream os;
        os << "max oracle deviation " << worst;
        r.detail = os.str();
    }
    return r;
}

inline CriterionResult criterion_orthogonality()
{
    CriterionResult r{2, "Q P orthogonality", true, "exact over all cases"};
    const std::vector<std::pair<int, long>> cases = {{1, 3}, {2, 3}, {3, 3},
                                                     {4, 3}, {1, 5}, {2, 5}};
    for (auto [m, q] : cases)
        if (!pq_orthogonality_check(q_numbers_explicit(m, q))) {
            r.pass = false;
            r.detail = "failed at m=" + std::to_string(m) + " q=" + std::to_string(q);
            break;
        }
    return r;
}

inline CriterionResult criterion_valencies()
{
    CriterionResult r{3, "valency formulas vs class counts", true, "exact"};
    for (long q : {3L, 5L})
        for (int m = 1; m <= 3; ++m) {
            FieldSpec F = field_create(q, 1);
            std::map<std::pair<int, int>, Int> count;
            enumerate_forms(F, m, [&](const SymForm& B) {
                RankType rt = rank_type(B);
                count[{rt.rank, rt.type}] += 1;
            });
            Int sum = 0;
            QNumberTable labels(m, q);
            for (int idx = 0; idx < labels.size(); ++idx) {
                auto [i, tau] = labels.label(idx);
                Int v = valency(m, q, i, tau);
                sum += v;
                if (v != count[{i, tau}]) {
                    r.pass = false;
                    r.detail = "mismatch at m=" + std::to_string(m) +
                               " q=" + std::to_string(q) + " class (" + std::to_string(i) +
                               "," + std::to_string(tau) + ")";
                    return r;
                }
            }
            if (sum != space_size(F, m)) {
                r.pass = false;
                r.detail = "valency sum != |X|";
                return r;
            }
        }
    return r;
}

inline CriterionResult criterion_table1_row()
{
    CriterionResult r{4, "reference distribution row reproduction", true, ""};
    FieldSpec F(3, 1);
    ConstructionParams P{1, 1, 4, 3};
    FormSet Y = construct_Y(F, P);
    Distribution a = inner_distribution(Y);
    const std::vector<Rat> expect = {1, 0, 0, 100, 160, 1080, 1080, 2340, 1800};
    QNumberTable labels(4, 3);
    for (int idx = 0; idx < labels.size(); ++idx) {
        auto [i, tau] = labels.label(idx);
        if (a.get(i, tau) != expect[idx]) {
            r.pass = false;
            r.detail = "enumerated row differs at class index " + std::to_string(idx);
            return r;
        }
    }
    if (a != closed_form_even(4, 3, 1, 6561)) {
        r.pass = false;
        r.detail = "closed form disagrees with enumeration";
        return r;
    }
    r.detail = "(1,0,0,100,160,1080,1080,2340,1800) and closed form agree";
    return r;
}

inline CriterionResult criterion_constructions()
{
    CriterionResult r{5, "trace construction over the test matrix", true, ""};
    for (const auto& P : detail::construction_matrix()) {
        FieldSpec F = field_create(factor_prime_power(P.q).first,
                                   factor_prime_power(P.q).second);
        FormSet Y = construct_Y(F, P);
        const int d = P.m - 2 * P.t;
        if (Y.size() != ipow(P.q, (long)P.m * (P.t + 1)) ||
            Y.size() != bound_additive(P.m, P.q, d)) {
            r.pass = false;
            r.detail = detail::params_str(P) + ": size or bound equality fails";
            return r;
        }
        Distribution a = inner_distribution(Y);
        if (!is_d_code(a, d)) {
            r.pass = false;
            r.detail = detail::params_str(P) + ": not a " + std::to_string(d) + "-code";
            return r;
        }
        Distribution ad = dual_distribution(a, q_numbers_explicit(P.m, P.q));
        bool ok;
        if (P.m % 2 == 0) {
            int eps = (P.t + 1) % 2 == 0 ? 1 : F.eta_minus_one();
            ok = is_design_eps(ad, P.t, eps);
        } else {
            ok = is_t_design(ad, 2 * P.t + 2);
        }
        if (!ok) {
            r.pass = false;
            r.detail = detail::params_str(P) + ": design property fails";
            return r;
        }
    }
    r.detail = "all 6 parameter sets: size, bound equality, design property";
    return r;
}

inline CriterionResult criterion_closed_forms()
{
    CriterionResult r{6, "closed-form distributions", true, ""};
    {
        FieldSpec F(3, 1);
        FormSet Y = construct_Y(F, ConstructionParams{1, 0, 3, 3});
        Distribution a = inner_distribution(Y);
        if (a.get(3, 1) != 13 || a.get(3, -1) != 13 || a != closed_form_odd(3, 3, 2, 27)) {
            r.pass = false;
            r.detail = "odd closed form fails for Y_1(0,3,3)";
            return r;
        }
    }
    {
        FieldSpec F(3, 1);
        FormSet Y = construct_Y(F, ConstructionParams{1, 1, 4, 3});
        if (inner_distribution(Y) != closed_form_even(4, 3, 1, 6561)) {
            r.pass = false;
            r.detail = "even closed form fails for Y_1(1,4,3)";
            return r;
        }
    }
    {
        FieldSpec F(3, 1);
        FormSet Y = construct_Y(F, ConstructionParams{1, 1, 6, 3});
        FormSet Ystar = puncture(Y, coordinate_hyperplane(6));
        if (inner_distribution(Ystar) != closed_form_even(5, 3, 1, Ystar.size())) {
            r.pass = false;
            r.detail = "even closed form fails for punctured Y_1(1,6,3)";
            return r;
        }
    }
    r.detail = "odd (a_{3,+-}=13), even, and punctured cases agree";
    return r;
}

inline CriterionResult criterion_duality()
{
    CriterionResult r{7, "dual set vs dual distribution", true, ""};
    std::vector<ConstructionParams> cases = detail::construction_matrix();
    for (const auto& P : cases) {
        FieldSpec F = field_create(factor_prime_power(P.q).first,
                                   factor_prime_power(P.q).second);
        FormSet Y = construct_Y(F, P);
        Distribution a = inner_distribution(Y);
        Distribution ad = dual_distribution(a, q_numbers_explicit(P.m, P.q));
        Distribution b = inner_distribution(additive_dual(Y));
        for (auto& [k, v] : b.a) v *= Rat(Y.size());
        if (!(b == ad)) {
            r.pass = false;
            r.detail = detail::params_str(P) + ": |Y| a(Y^perp) != a'(Y)";
            return r;
        }
    }
    // punctured additive set in X(5,3)
    {
        FieldSpec F(3, 1);
        FormSet Y = construct_Y(F, ConstructionParams{1, 1, 6, 3});
        FormSet Ystar = puncture(Y, coordinate_hyperplane(6));
        Distribution a = inner_distribution(Ystar);
        Distribution ad = dual_distribution(a, q_numbers_explicit(5, 3));
        Distribution b = inner_distribution(additive_dual(Ystar));
        for (auto& [k, v] : b.a) v *= Rat(Ystar.size());
        if (!(b == ad)) {
            r.pass = false;
            r.detail = "punctured Y_1(1,6,3): duality fails";
            return r;
        }
    }
    r.detail = "exact for all constructed additive sets";
    return r;
}

inline CriterionResult criterion_hamming()
{
    CriterionResult r{8, "Hamming enumerators and minimum distances", true, ""};
    {
        FieldSpec F(3, 1);
        ConstructionParams P{1, 0, 3, 3};
        FormSet Y = construct_Y(F, P);
        TowerElem theta = F.tower_primitive();
        Distribution a = inner_distribution(Y);
        auto C1 = materialize_C1(F, Y, theta);
        auto C2 = materialize_C2(F, Y, theta);
        Enumerator b1 = brute_force_enumerator(C1, F, EnumeratorMode::weight);
        Enumerator b2 = brute_force_enumerator(C2, F, EnumeratorMode::weight);
        if (enumerator_C1_formula(a) != b1 || enumerator_C2_formula(a) != b2) {
            r.pass = false;
            r.detail = "enumerator formula mismatch for Y_1(0,3,3)";
            return r;
        }
        if (Int(b1.min_nonzero_weight()) != min_distance_formula(P, DerivedCode::C1) ||
            Int(b2.min_nonzero_weight()) != min_distance_formula(P, DerivedCode::C2)) {
            r.pass = false;
            r.detail = "minimum distance mismatch for Y_1(0,3,3)";
            return r;
        }
        if (!check_cyclic_zeros(F, C1, theta, cyclic_zeros(P, DerivedCode::C1)) ||
            !check_cyclic_zeros(F, C2, theta, cyclic_zeros(P, DerivedCode::C2))) {
            r.pass = false;
            r.detail = "cyclic zeros fail for Y_1(0,3,3)";
            return r;
        }
    }
    {
        FieldSpec F(3, 1);
        ConstructionParams P{1, 1, 4, 3};
        FormSet Y = construct_Y(F, P);
        TowerElem theta = F.tower_primitive();
        Distribution a = inner_distribution(Y);
        auto C1 = materialize_C1(F, Y, theta);
        Enumerator b1 = brute_force_enumerator(C1, F, EnumeratorMode::weight);
        if (enumerator_C1_formula(a) != b1) {
            r.pass = false;
            r.detail = "enumerator formula mismatch for Y_1(1,4,3)";
            return r;
        }
        if (Int(b1.min_nonzero_weight()) != min_distance_formula(P, DerivedCode::C1)) {
            r.pass = false;
            r.detail = "minimum distance mismatch for Y_1(1,4,3)";
            return r;
        }
    }
    r.detail = "formula == brute force; distances match closed forms";
    return r;
}

inline CriterionResult criterion_nh()
{
    CriterionResult r{9, "quadratic-form solution counts", true, "exact for all (i,tau,h)"};
    FieldSpec F(3, 1);
    for (int m = 1; m <= 3 && r.pass; ++m) {
        enumerate_forms(F, m, [&](const SymForm& B) {
            if (!r.pass) return;
            RankType rt = rank_type(B);
            std::vector<long> cnt(3, 0);
            std::vector<int> x(m, 0);
            while (true) {
                int acc = 0;
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        acc = F.add(acc, F.mul(F.mul(x[i], B.at(i, j)), x[j]));
                ++cnt[acc];
                int i = 0;
                while (i < m && ++x[i] == 3) x[i++] = 0;
                if (i == m) break;
            }
            for (FqElem h = 0; h < 3; ++h)
                if (Int(cnt[h]) != n_of_h(F, m, rt.rank, rt.type, h)) {
                    r.pass = false;
                    r.detail = "mismatch at m=" + std::to_string(m);
                }
        });
    }
    return r;
}

inline CriterionResult criterion_lp()
{
    CriterionResult r{10, "linear programming bound", true, ""};
    {
        LPInstance ins = lp_instance(2, 3, 2);
        LPResult res = lp_bound(2, 3, 2);
        if (res.optimum != 9 || !lp_certificate_check(ins, res)) {
            r.pass = false;
            r.detail = "lp(2,3,2) != 9 or certificate fails";
            return r;
        }
    }
    {
        LPInstance ins = lp_instance(4, 3, 2);
        LPResult res = lp_bound(4, 3, 2);
        if (res.optimum != bound_even_nonadditive(4, 3, 1) ||
            !lp_certificate_check(ins, res)) {
            r.pass = false;
            r.detail = "lp(4,3,2) differs from even closed-form bound";
            return r;
        }
    }
    for (auto [m, q] : std::vector<std::pair<int, long>>{{1, 3}, {2, 3}, {3, 3}, {2, 5}}) {
        if (lp_bound(m, q, 1).optimum != Rat(ipow(q, m * (m + 1) / 2))) {
            r.pass = false;
            r.detail = "lp(m,q,1) != |X|";
            return r;
        }
    }
    for (const auto& P : detail::construction_matrix()) {
        Int size = ipow(P.q, (long)P.m * (P.t + 1));
        if (Rat(size) > lp_bound(P.m, P.q, P.m - 2 * P.t).optimum) {
            r.pass = false;
            r.detail = detail::params_str(P) + " exceeds its LP bound";
            return r;
        }
    }
    r.detail = "values, certificates, and feasibility of constructions";
    return r;
}

inline std::vector<CriterionResult> run_acceptance()
{
    return {criterion_three_routes(), criterion_orthogonality(), criterion_valencies(),
            criterion_table1_row(),   criterion_constructions(), criterion_closed_forms(),
            criterion_duality(),      criterion_hamming(),       criterion_nh(),
            criterion_lp()};
}

/// Long-run search: enumerate ALL 8-dimensional subspaces of X(4,3) via their
/// 2-dimensional duals, keep the 2-codes, and collect the distinct inner
/// distributions (expected: exactly four).
struct Table1Search {
    long long candidates = 0;
    long long two_codes = 0;
    std::vector<Distribution> distinct;
    bool pass = false;
};

inline Table1Search exhaustive_table1(const std::function<void(long long)>& progress = {})
{
    const int m = 4;
    const long q = 3;
    const int T = 10; // dim of X(4,3) over F_3
    FieldSpec F(3, 1);

    // class of every packed form, digits most-significant-last
    const long total = 59049;
    std::vector<uint8_t> cls((size_t)total);
    {
        std::vector<int> digit(T, 0);
        for (long idx = 0;; ++idx) {
            SymForm B(&F, m, digit);
            RankType rt = rank_type(B);
            cls[(size_t)idx] = (uint8_t)QNumberTable::index_of(rt.rank, rt.type);
            int i = 0;
            while (i < T && ++digit[i] == 3) digit[i++] = 0;
            if (i == T) break;
        }
    }
    // class of -B: odd rank flips the type when eta(-1) = -1
    QNumberTable labels(m, q);
    std::array<int, 9> neg_cls{};
    for (int idx = 0; idx < 9; ++idx) {
        auto [i, tau] = labels.label(idx);
        neg_cls[idx] = i % 2 == 1 ? QNumberTable::index_of(i, -tau) : idx;
    }
    // 2 * Q-numbers as machine integers (gamma parts vanish against the
    // symmetric class counts of a subspace, checked below)
    QNumberTable Q = q_numbers_explicit(m, q);
    long long Qa2[9][9], Qb2[9][9];
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) {
            Rat a2 = 2 * Q.entries()[r][c].a, b2 = 2 * Q.entries()[r][c].b;
            if (denominator(a2) != 1 || denominator(b2) != 1)
                throw error(errc::internal, "Q-number denominators exceed 2");
            Qa2[r][c] = numerator(a2).convert_to<long long>();
            Qb2[r][c] = numerator(b2).convert_to<long long>();
        }

    auto pack = [&](const std::array<int, T>& v) {
        long idx = 0;
        for (int i = T; i-- > 0;) idx = idx * 3 + v[i];
        return idx;
    };

    Table1Search out;
    std::set<std::array<long long, 9>> seen;
    std::array<int, T> v1{}, v2{}, u{};
    for (int p1 = 0; p1 < T; ++p1)
        for (int p2 = p1 + 1; p2 < T; ++p2) {
            std::vector<int> free1, free2;
            for (int c = p1 + 1; c < T; ++c)
                if (c != p2) free1.push_back(c);
            for (int c = p2 + 1; c < T; ++c) free2.push_back(c);
            std::vector<int> vals(free1.size() + free2.size(), 0);
            while (true) {
                v1.fill(0);
                v2.fill(0);
                v1[p1] = 1;
                v2[p2] = 1;
                for (size_t k = 0; k < free1.size(); ++k) v1[free1[k]] = vals[k];
                for (size_t k = 0; k < free2.size(); ++k)
                    v2[free2[k]] = vals[free1.size() + k];

                ++out.candidates;
                if (progress && out.candidates % 10000000 == 0) progress(out.candidates);
                long long cnt[9] = {1, 0, 0, 0, 0, 0, 0, 0, 0};
                auto add_elem = [&](long idx) {
                    int c = cls[(size_t)idx];
                    ++cnt[c];
                    ++cnt[neg_cls[c]];
                };
                add_elem(pack(v1));
                add_elem(pack(v2));
                for (int i = 0; i < T; ++i) u[i] = (v1[i] + v2[i]) % 3;
                add_elem(pack(u));
                for (int i = 0; i < T; ++i) u[i] = (v1[i] + 2 * v2[i]) % 3;
                add_elem(pack(u));

                // 2-code filter: dual entries at rank 1 must vanish
                long long d1p = 0, d1m = 0;
                for (int c = 0; c < 9; ++c) {
                    d1p += Qa2[1][c] * cnt[c];
                    d1m += Qa2[2][c] * cnt[c];
                }
                if (d1p == 0 && d1m == 0) {
                    ++out.two_codes;
                    std::array<long long, 9> fp{};
                    for (int r = 0; r < 9; ++r) {
                        long long a = 0, b = 0;
                        for (int c = 0; c < 9; ++c) {
                            a += Qa2[r][c] * cnt[c];
                            b += Qb2[r][c] * cnt[c];
                        }
                        if (b != 0)
                            throw error(errc::internal, "dual has a gamma component");
                        fp[r] = a;
                    }
                    if (seen.insert(fp).second) {
                        Distribution d;
                        d.m = m;
                        d.q = q;
                        // fp = 2 * 9 * inner distribution of the 8-dim subspace
                        for (int r = 0; r < 9; ++r) {
                            auto [i, tau] = labels.label(r);
                            d.add(i, tau, Rat(fp[r], 18));
                        }
                        out.distinct.push_back(d);
                    }
                }

                size_t k = 0;
                while (k < vals.size()) {
                    if (++vals[k] < 3) break;
                    vals[k++] = 0;
                }
                if (k == vals.size()) break;
            }
        }
    out.pass = out.distinct.size() == 4;
    return out;
}

} // namespace symscheme
