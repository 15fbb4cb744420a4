#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "symscheme/serialize.hpp"
#include "symscheme/verify.hpp"

using namespace symscheme;

namespace {

enum class OutFmt { json_fmt, csv_fmt, tex_fmt };

void add_format_flags(CLI::App* cmd, OutFmt& fmt, bool with_tex = true)
{
    cmd->add_flag_callback("--json", [&fmt] { fmt = OutFmt::json_fmt; },
                           "JSON output (default)");
    cmd->add_flag_callback("--csv", [&fmt] { fmt = OutFmt::csv_fmt; }, "CSV output");
    if (with_tex)
        cmd->add_flag_callback("--tex", [&fmt] { fmt = OutFmt::tex_fmt; }, "TeX table output");
}

FieldSpec make_field(long q)
{
    auto [p, e] = factor_prime_power(q);
    return field_create(p, e);
}

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw error(errc::invalid_params, "cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& path)
{
    if (path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw error(errc::invalid_params, "cannot write " + path);
    out << j.dump(2) << '\n';
}

int run(int argc, char** argv)
{
    CLI::App app{"exact arithmetic for the association scheme of symmetric bilinear forms"};
    app.require_subcommand(1);

    // qnumbers
    int qm = 0;
    long qq = 0;
    std::string method = "explicit";
    OutFmt qfmt = OutFmt::json_fmt;
    auto* qn = app.add_subcommand("qnumbers", "Q-number table of X(m,q)");
    qn->add_option("--m", qm, "matrix dimension")->required();
    qn->add_option("--q", qq, "odd prime power")->required();
    qn->add_option("--method", method, "explicit|recurrence|charsum")
        ->check(CLI::IsMember({"explicit", "recurrence", "charsum"}));
    add_format_flags(qn, qfmt);

    // valencies
    int vm = 0;
    long vq = 0;
    OutFmt vfmt = OutFmt::json_fmt;
    auto* va = app.add_subcommand("valencies", "class sizes of X(m,q)");
    va->add_option("--m", vm, "matrix dimension")->required();
    va->add_option("--q", vq, "odd prime power")->required();
    add_format_flags(va, vfmt, false);

    // construct
    ConstructionParams cp;
    bool c_puncture = false, c_dual = false, c_dist = false;
    std::string c_emit;
    auto* co = app.add_subcommand("construct", "additive trace construction Y_s(t,m,q)");
    co->add_option("--s", cp.s, "Frobenius stride, coprime to m")->required();
    co->add_option("--t", cp.t, "design strength parameter")->required();
    co->add_option("--m", cp.m, "matrix dimension")->required();
    co->add_option("--q", cp.q, "odd prime power")->required();
    co->add_flag("--puncture", c_puncture, "restrict to the first m-1 coordinates");
    co->add_flag("--dual", c_dual, "emit the dual additive set");
    co->add_flag("--dist", c_dist, "emit the inner distribution instead of the set");
    co->add_option("--emit", c_emit, "write the form set to a file");

    // dist
    std::string d_input;
    bool d_dual = false, d_abcd = false;
    int d_design = -1;
    OutFmt dfmt = OutFmt::json_fmt;
    auto* di = app.add_subcommand("dist", "inner distribution of a form-set file");
    di->add_option("--input", d_input, "form-set JSON file")->required();
    di->add_flag("--dual", d_dual, "include the dual distribution");
    di->add_flag("--abcd", d_abcd, "include the A/B/C/D repackaging");
    di->add_option("--check-design", d_design, "report whether the set is a t-design");
    add_format_flags(di, dfmt);

    // dual
    std::string du_input, du_emit;
    auto* du = app.add_subcommand("dual", "dual of an additive form set");
    du->add_option("--input", du_input, "form-set JSON file")->required();
    du->add_option("--emit", du_emit, "write the dual set to a file");

    // bounds
    int bm = 0, bd = 0;
    long bq = 0;
    bool b_all = false;
    auto* bo = app.add_subcommand("bounds", "size bounds for d-codes");
    bo->add_option("--m", bm, "matrix dimension")->required();
    bo->add_option("--q", bq, "odd prime power")->required();
    bo->add_option("--d", bd, "minimum rank distance")->required();
    bo->add_flag("--all-variants", b_all, "include the non-additive variants");

    // lp
    int lm = 0, ld = 0;
    long lq = 0;
    bool l_cert = false, l_json = false;
    auto* lp = app.add_subcommand("lp", "linear programming bound");
    lp->add_option("--m", lm, "matrix dimension")->required();
    lp->add_option("--q", lq, "odd prime power")->required();
    lp->add_option("--d", ld, "minimum rank distance")->required();
    lp->add_flag("--certificate", l_cert, "include and check the dual certificate");
    lp->add_flag("--json", l_json, "full JSON output");

    // code
    std::vector<int> k_params;
    std::string k_which = "c1", k_enum = "formula";
    bool k_zeros = false, k_mindist = false;
    auto* ko = app.add_subcommand("code", "derived length q^m-1 codes");
    ko->add_option("--construct", k_params, "construction parameters s,t,m,q")
        ->required()
        ->delimiter(',')
        ->expected(4);
    ko->add_option("--which", k_which, "c1|c2")->check(CLI::IsMember({"c1", "c2"}));
    ko->add_option("--enumerator", k_enum, "formula|brute|both")
        ->check(CLI::IsMember({"formula", "brute", "both"}));
    ko->add_flag("--zeros", k_zeros, "include the cyclic zero exponents");
    ko->add_flag("--mindist", k_mindist, "include the closed-form minimum distance");

    // verify
    bool x_table1 = false;
    int x_only = 0;
    auto* ve = app.add_subcommand("verify", "run the acceptance checks");
    ve->add_flag("--exhaustive-table1", x_table1,
                 "exhaustive subspace search (long-running)");
    ve->add_option("--only", x_only, "run a single criterion (1-10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e); // prints the message or help text
        return rc == 0 ? 0 : 2;
    }

    if (*qn) {
        if (method == "charsum") {
            FieldSpec F = make_field(qq);
            QNumberOracle O = q_numbers_charsum_oracle(F, qm);
            json j;
            j["m"] = qm;
            j["q"] = qq;
            j["representative_deviation"] = O.representative_deviation;
            json rows = json::array();
            for (const auto& row : O.Q) {
                json r = json::array();
                for (const auto& z : row) r.push_back(json{{"re", z.real()}, {"im", z.imag()}});
                rows.push_back(r);
            }
            j["entries"] = rows;
            emit(j, "");
            return 0;
        }
        QNumberTable T = method == "explicit" ? q_numbers_explicit(qm, qq)
                                              : q_numbers_recurrence(qm, qq);
        if (qfmt == OutFmt::csv_fmt)
            std::cout << qtable_to_csv(T);
        else if (qfmt == OutFmt::tex_fmt)
            std::cout << qtable_to_tex(T);
        else
            emit(qtable_to_json(T), "");
        return 0;
    }

    if (*va) {
        QNumberTable labels(vm, vq);
        if (vfmt == OutFmt::csv_fmt) {
            std::cout << "rank,type,valency\n";
            for (int idx = 0; idx < labels.size(); ++idx) {
                auto [i, tau] = labels.label(idx);
                std::cout << i << ',' << tau << ',' << valency(vm, vq, i, tau).str() << '\n';
            }
        } else {
            json entries = json::array();
            Int sum = 0;
            for (int idx = 0; idx < labels.size(); ++idx) {
                auto [i, tau] = labels.label(idx);
                Int v = valency(vm, vq, i, tau);
                sum += v;
                entries.push_back(
                    json{{"rank", i}, {"type", tau}, {"value", v.str()}});
            }
            emit(json{{"m", vm}, {"q", vq}, {"valencies", entries}, {"total", sum.str()}},
                 "");
        }
        return 0;
    }

    if (*co) {
        FieldSpec F = make_field(cp.q);
        FormSet Y = construct_Y(F, cp);
        if (c_puncture) Y = puncture(Y, coordinate_hyperplane(cp.m));
        if (c_dual) Y = additive_dual(Y);
        if (c_dist) {
            Distribution a = inner_distribution(Y);
            emit(distribution_to_json(a), c_emit);
            return 0;
        }
        emit(formset_to_json(Y), c_emit);
        return 0;
    }

    if (*di) {
        json j = load_json(d_input);
        FieldSpec F = field_from_json(j.at("field"));
        FormSet Y = formset_from_json(j, F);
        Distribution a = inner_distribution(Y);
        if (dfmt == OutFmt::csv_fmt) {
            std::cout << distribution_to_csv(a);
            if (d_dual)
                std::cout << distribution_to_csv(
                    dual_distribution(a, q_numbers_explicit(a.m, a.q)));
            return 0;
        }
        if (dfmt == OutFmt::tex_fmt) {
            std::cout << distribution_to_tex(a);
            return 0;
        }
        json out;
        out["inner"] = distribution_to_json(a);
        if (d_dual || d_design >= 0) {
            Distribution ad = dual_distribution(a, q_numbers_explicit(a.m, a.q));
            if (d_dual) out["dual"] = distribution_to_json(ad);
            if (d_design >= 0) out["is_design"] = is_t_design(ad, d_design);
        }
        if (d_abcd) {
            ABCDProfile P = abcd(a);
            json prof;
            for (auto [key, vec] : {std::pair<const char*, const std::vector<Rat>*>{"A", &P.A},
                                    {"B", &P.B},
                                    {"C", &P.C},
                                    {"D", &P.D}}) {
                json arr = json::array();
                for (const Rat& v : *vec)
                    arr.push_back(json{{"num", num_str(v)}, {"den", den_str(v)}});
                prof[key] = arr;
            }
            out["abcd"] = prof;
        }
        emit(out, "");
        return 0;
    }

    if (*du) {
        json j = load_json(du_input);
        FieldSpec F = field_from_json(j.at("field"));
        FormSet Y = formset_from_json(j, F);
        emit(formset_to_json(additive_dual(Y)), du_emit);
        return 0;
    }

    if (*bo) {
        Int add = bound_additive(bm, bq, bd);
        if (!b_all) {
            std::cout << add.str() << '\n';
            return 0;
        }
        json j{{"m", bm}, {"q", bq}, {"d", bd}, {"additive", add.str()}};
        if (bd % 2 == 1)
            j["odd_nonadditive"] = bound_odd(bm, bq, (bd + 1) / 2).str();
        else {
            Rat e = bound_even_nonadditive(bm, bq, bd / 2);
            j["even_nonadditive_num"] = num_str(e);
            j["even_nonadditive_den"] = den_str(e);
        }
        emit(j, "");
        return 0;
    }

    if (*lp) {
        LPInstance ins = lp_instance(lm, lq, ld);
        LPResult res = lp_bound(lm, lq, ld);
        if (l_cert && !lp_certificate_check(ins, res))
            throw error(errc::internal, "LP certificate check failed");
        if (!l_json) {
            std::cout << res.optimum.str() << '\n';
            return 0;
        }
        emit(lp_to_json(ins, res, l_cert), "");
        return 0;
    }

    if (*ko) {
        ConstructionParams P{k_params[0], k_params[1], k_params[2], (long)k_params[3]};
        P.validate();
        FieldSpec F = make_field(P.q);
        FormSet Y = construct_Y(F, P);
        TowerElem theta = F.tower_primitive();
        Distribution a = inner_distribution(Y);
        DerivedCode which = k_which == "c1" ? DerivedCode::C1 : DerivedCode::C2;
        json j{{"s", P.s}, {"t", P.t}, {"m", P.m}, {"q", P.q}, {"which", k_which}};
        j["length"] = (ipow(P.q, P.m) - 1).str();
        if (k_enum == "formula" || k_enum == "both") {
            Enumerator E = which == DerivedCode::C1 ? enumerator_C1_formula(a)
                                                    : enumerator_C2_formula(a);
            j["enumerator"] = enumerator_to_json(E);
        }
        if (k_enum == "brute" || k_enum == "both") {
            auto C = which == DerivedCode::C1 ? materialize_C1(F, Y, theta)
                                              : materialize_C2(F, Y, theta);
            Enumerator E = brute_force_enumerator(C, F, EnumeratorMode::weight);
            j["enumerator_brute"] = enumerator_to_json(E);
            if (j.contains("enumerator"))
                j["enumerators_agree"] = j["enumerator"] == j["enumerator_brute"];
        }
        if (k_mindist) j["min_distance"] = min_distance_formula(P, which).str();
        if (k_zeros) j["cyclic_zeros"] = cyclic_zeros(P, which);
        emit(j, "");
        return 0;
    }

    if (*ve) {
        if (x_table1) {
            Table1Search s = exhaustive_table1([](long long n) {
                std::cerr << "  ... " << n << " candidates\n";
            });
            std::cout << "candidates: " << s.candidates << "\n2-codes: " << s.two_codes
                      << "\ndistinct inner distributions: " << s.distinct.size() << "\n";
            for (const auto& d : s.distinct) std::cout << distribution_to_csv(d) << "\n";
            std::cout << (s.pass ? "PASS" : "FAIL")
                      << ": exactly four distinct inner distributions\n";
            return s.pass ? 0 : 1;
        }
        bool all = true;
        for (const auto& c : run_acceptance()) {
            if (x_only > 0 && c.id != x_only) continue;
            all = all && c.pass;
            std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << " - "
                      << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
        }
        return all ? 0 : 1;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
        case errc::budget_exceeded:
            return 3;
        case errc::invalid_params:
        case errc::inconsistent_parameters:
        case errc::not_prime:
        case errc::even_characteristic:
            return 2;
        default:
            return 4;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
