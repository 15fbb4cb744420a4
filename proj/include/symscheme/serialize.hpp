#pragma once

#include <sstream>

#include <json.hpp>

#include "symscheme/construct.hpp"
#include "symscheme/hamming.hpp"
#include "symscheme/lp.hpp"

namespace symscheme {

using nlohmann::json;

inline std::string int_str(const Int& v) { return v.str(); }
inline std::string num_str(const Rat& v) { return numerator(v).str(); }
inline std::string den_str(const Rat& v) { return denominator(v).str(); }

inline json gauss_to_json(const GaussInt& g)
{
    return json{{"a_num", num_str(g.a)},
                {"a_den", den_str(g.a)},
                {"b_num", num_str(g.b)},
                {"b_den", den_str(g.b)}};
}

inline json field_to_json(const FieldSpec& F)
{
    json j;
    j["p"] = F.p();
    j["e"] = F.e();
    j["modulus"] = F.modulus(); // constant term first
    j["tower_m"] = F.has_tower() ? F.tower_degree() : 0;
    j["tower_modulus"] = F.has_tower() ? F.tower_modulus() : std::vector<int>{};
    return j;
}

inline FieldSpec field_from_json(const json& j)
{
    FieldSpec F(j.at("p").get<long>(), j.at("e").get<int>(),
                j.at("modulus").get<std::vector<long>>());
    int tm = j.value("tower_m", 0);
    if (tm > 0) F.configure_tower(tm, j.at("tower_modulus").get<std::vector<int>>());
    return F;
}

/// Form sets serialize as packed upper-triangle rows; additive sets store
/// their basis with the span implied.
inline json formset_to_json(const FormSet& Y)
{
    json j;
    j["m"] = Y.m();
    j["q"] = Y.field().q();
    j["field"] = field_to_json(Y.field());
    j["additive"] = Y.is_additive();
    json forms = json::array();
    const auto& list = Y.is_additive() ? Y.basis() : Y.forms();
    for (const auto& B : list) forms.push_back(B.packed());
    j["forms"] = forms;
    return j;
}

/// The FieldSpec must outlive the returned set.
inline FormSet formset_from_json(const json& j, const FieldSpec& F)
{
    const int m = j.at("m").get<int>();
    if (F.q() != j.at("q").get<long>())
        throw error(errc::inconsistent_parameters, "field does not match form set");
    std::vector<SymForm> forms;
    for (const auto& row : j.at("forms"))
        forms.push_back(SymForm(&F, m, row.get<std::vector<int>>()));
    if (j.value("additive", false)) return FormSet::additive_set(F, m, forms);
    return FormSet::explicit_set(F, m, std::move(forms));
}

/// Row/column labels are serialized explicitly: rows are (k, eps), columns
/// are (i, tau), both in the canonical class order.
inline json qtable_to_json(const QNumberTable& T)
{
    json j;
    j["m"] = T.m();
    j["q"] = T.q();
    json labels = json::array();
    for (int r = 0; r < T.size(); ++r) {
        auto [k, eps] = T.label(r);
        labels.push_back(json{{"rank", k}, {"type", eps}});
    }
    j["row_labels"] = labels;
    j["col_labels"] = labels;
    json rows = json::array();
    for (int r = 0; r < T.size(); ++r) {
        json row = json::array();
        for (int c = 0; c < T.size(); ++c) row.push_back(gauss_to_json(T.entries()[r][c]));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

inline json distribution_to_json(const Distribution& d)
{
    json j;
    j["m"] = d.m;
    j["q"] = d.q;
    json entries = json::array();
    for (const auto& [k, v] : d.a)
        entries.push_back(json{{"rank", k.first},
                               {"type", k.second},
                               {"num", num_str(v)},
                               {"den", den_str(v)}});
    j["entries"] = entries;
    return j;
}

inline json enumerator_to_json(const Enumerator& E)
{
    json entries = json::array(); // map iteration = ascending weight
    for (const auto& [w, c] : E.coef)
        entries.push_back(json{{"weight", w}, {"count", num_str(c)}, {"den", den_str(c)}});
    return json{{"entries", entries}, {"total", num_str(E.total())}};
}

inline json lp_to_json(const LPInstance& ins, const LPResult& res, bool with_certificate)
{
    json j;
    j["m"] = ins.m;
    j["q"] = ins.q;
    j["d"] = ins.d;
    j["optimum_num"] = num_str(res.optimum);
    j["optimum_den"] = den_str(res.optimum);
    j["distribution"] = distribution_to_json(res.a);
    if (with_certificate) {
        json duals = json::array();
        for (const Rat& y : res.duals)
            duals.push_back(json{{"num", num_str(y)}, {"den", den_str(y)}});
        j["duals"] = duals;
        j["certificate_valid"] = lp_certificate_check(ins, res);
    }
    return j;
}

/// Distribution as one CSV row per class, canonical class order.
inline std::string distribution_to_csv(const Distribution& d)
{
    std::ostringstream os;
    os << "rank,type,value\n";
    for (int i = 0; i <= d.m; ++i)
        for (int tau : {1, -1}) {
            if (i == 0 && tau == -1) continue;
            Rat v = d.get(i, tau);
            os << i << ',' << tau << ',' << num_str(v);
            if (denominator(v) != 1) os << '/' << den_str(v);
            os << '\n';
        }
    return os.str();
}

inline std::string qtable_to_csv(const QNumberTable& T)
{
    std::ostringstream os;
    os << "k,eps,i,tau,a,b\n";
    for (int r = 0; r < T.size(); ++r)
        for (int c = 0; c < T.size(); ++c) {
            auto [k, eps] = T.label(r);
            auto [i, tau] = T.label(c);
            const GaussInt& g = T.entries()[r][c];
            os << k << ',' << eps << ',' << i << ',' << tau << ',' << g.a.str() << ','
               << g.b.str() << '\n';
        }
    return os.str();
}

inline std::string enumerator_to_csv(const Enumerator& E)
{
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [w, c] : E.coef) {
        os << w << ',' << num_str(c);
        if (denominator(c) != 1) os << '/' << den_str(c);
        os << '\n';
    }
    return os.str();
}

inline std::string rat_to_tex(const Rat& v)
{
    if (v < 0) return "-" + rat_to_tex(-v);
    if (denominator(v) == 1) return numerator(v).str();
    return "\\tfrac{" + num_str(v) + "}{" + den_str(v) + "}";
}

/// One TeX row of a_{i,tau} values in the class order (0,+), (1,+), (1,-), ...
inline std::string distribution_to_tex(const Distribution& d)
{
    std::ostringstream os;
    os << "\\begin{tabular}{";
    for (int c = 0; c < 2 * d.m + 1; ++c) os << 'c';
    os << "}\n";
    os << "$a_{0}$";
    for (int i = 1; i <= d.m; ++i)
        os << " & $a_{" << i << ",+}$ & $a_{" << i << ",-}$";
    os << " \\\\\n\\hline\n";
    bool first = true;
    for (int i = 0; i <= d.m; ++i)
        for (int tau : {1, -1}) {
            if (i == 0 && tau == -1) continue;
            if (!first) os << " & ";
            first = false;
            os << '$' << rat_to_tex(d.get(i, tau)) << '$';
        }
    os << " \\\\\n\\end{tabular}\n";
    return os.str();
}

inline std::string gauss_to_tex(const GaussInt& g)
{
    if (g.b == 0) return rat_to_tex(g.a);
    std::ostringstream os;
    if (g.a != 0) os << rat_to_tex(g.a) << (g.b > 0 ? "+" : "");
    if (g.b == 1)
        os << "\\gamma";
    else if (g.b == -1)
        os << "-\\gamma";
    else
        os << rat_to_tex(g.b) << "\\gamma";
    return os.str();
}

inline std::string qtable_to_tex(const QNumberTable& T)
{
    std::ostringstream os;
    os << "\\begin{tabular}{c|";
    for (int c = 0; c < T.size(); ++c) os << 'c';
    os << "}\n";
    for (int c = 0; c < T.size(); ++c) {
        auto [i, tau] = T.label(c);
        os << " & $(" << i << ',' << (tau > 0 ? '+' : '-') << ")$";
    }
    os << " \\\\\n\\hline\n";
    for (int r = 0; r < T.size(); ++r) {
        auto [k, eps] = T.label(r);
        os << "$Q_{" << k << ',' << (eps > 0 ? '+' : '-') << "}$";
        for (int c = 0; c < T.size(); ++c)
            os << " & $" << gauss_to_tex(T.entries()[r][c]) << '$';
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

} // namespace symscheme
