// mwgr: Milnor-Witt motivic invariants of Grassmannians and complete flags.
// Subcommands: tableaux, decompose, chow-witt, e-cohomology, flag, verify.
// Reports go to stdout (JSON by default), diagnostics to stderr.
// Exit codes: 0 ok, 1 failed verification, 2 usage.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "mw/chow_witt.hpp"
#include "mw/flag.hpp"
#include "mw/motive.hpp"
#include "mw/schubert.hpp"
#include "mw/symfunc.hpp"
#include "mw/tableau.hpp"
#include "mw/verify.hpp"

using json = nlohmann::ordered_json;
using namespace mw;

namespace {

constexpr const char* kSuiteVersion = "mwgr 1.0.0";

json shape_json(const Shape& s) {
    json a = json::array();
    for (int r : s.rows()) a.push_back(r);
    return a;
}

json cycle_json(const Cycle& c) {
    json terms = json::array();
    for (const auto& [s, v] : c.terms) terms.push_back({{"coef", v.str()}, {"shape", shape_json(s)}});
    return terms;
}

std::string cycle_text(const Cycle& c) { return cycle_str(c); }

json report_header(const std::string& command, json params) {
    json r;
    r["command"] = command;
    r["params"] = std::move(params);
    r["suite_version"] = kSuiteVersion;
    return r;
}

void emit(const json& report, const std::string& format, const std::string& markdown) {
    if (format == "markdown")
        std::cout << markdown;
    else
        std::cout << report.dump(2) << "\n";
}

struct GrArgs {
    int k = 0, n = 0;
    bool twist = false;
    std::string format = "json";
    Twist tw() const { return twist ? Twist::twisted : Twist::untwisted; }
    json params() const {
        return json{{"k", k}, {"n", n}, {"twist", twist ? "twisted" : "untwisted"}};
    }
};

int cmd_tableaux(const GrArgs& args, bool with_matrices) {
    Truncation tr = Truncation::box(args.k, args.n);
    Components comp = irredundant_components(tr, args.tw());
    json degrees = json::array();
    json evens = json::array();
    for (const auto& list : enumerate_tableaux(tr, args.tw())) {
        if (list.empty() && degrees.size() > 0) continue;
        json entry;
        entry["degree"] = list.empty() ? 0 : list.front().shape.degree();
        json shapes = json::array();
        for (const Tableau& t : list) {
            TableauClass cls = classify(t, tr);
            shapes.push_back({{"shape", shape_json(t.shape)},
                              {"irredundant", cls.irredundant},
                              {"full", cls.full},
                              {"even", cls.even},
                              {"component_root", shape_json(comp.root_of.at(t.shape))}});
            if (cls.even) evens.push_back(shape_json(t.shape));
        }
        entry["tableaux"] = std::move(shapes);
        degrees.push_back(std::move(entry));
    }
    json components = json::array();
    for (const auto& [root, members] : comp.members) {
        json m = json::array();
        for (const Shape& s : members) m.push_back(shape_json(s));
        components.push_back({{"root", shape_json(root)}, {"members", std::move(m)}});
    }

    json result;
    result["degrees"] = std::move(degrees);
    result["evens"] = std::move(evens);
    result["components"] = std::move(components);
    if (with_matrices) {
        json mats = json::array();
        for (int d = 0; d < args.k * (args.n - args.k); ++d) {
            Sq2Matrix sm = sq2_matrix(tr, args.tw(), d);
            json rows = json::array();
            for (std::size_t r = 0; r < sm.m.rows(); ++r) {
                std::string bits;
                for (std::size_t cc = 0; cc < sm.m.cols(); ++cc) bits += sm.m.get(r, cc) ? '1' : '0';
                rows.push_back(bits);
            }
            mats.push_back({{"source_degree", d}, {"rows", std::move(rows)}});
        }
        result["sq2_matrices"] = std::move(mats);
    }

    json report = report_header("tableaux", args.params());
    report["result"] = std::move(result);

    std::string md = "# Tableaux of Gr(" + std::to_string(args.k) + "," + std::to_string(args.n) +
                     "), " + twist_name(args.tw()) + "\n\n| degree | shape | class |\n|---|---|---|\n";
    for (const auto& list : enumerate_tableaux(tr, args.tw()))
        for (const Tableau& t : list) {
            TableauClass cls = classify(t, tr);
            std::string tag = cls.even ? "even" : (cls.irredundant ? "irredundant" : "");
            if (cls.full && !cls.even) tag += tag.empty() ? "full" : ", full";
            md += "| " + std::to_string(t.shape.degree()) + " | " + t.shape.str() + " | " + tag +
                  " |\n";
        }
    emit(report, args.format, md);
    return 0;
}

json motive_json(const MotiveDecomposition& d, const std::vector<long>& s) {
    json out;
    out["object"] = d.label;
    out["twist"] = twist_name(d.twist);
    json summands = json::array();
    for (const auto& [sm, count] : d.summands)
        summands.push_back({{"kind", sm.kind == SummandKind::unit ? "unit" : "eta_cone"},
                            {"weight", sm.weight},
                            {"count", count}});
    out["summands"] = std::move(summands);
    json ww = json::array();
    for (int w : witt_weights(d)) ww.push_back(w);
    out["witt_weights"] = std::move(ww);
    if (d.thom_shifted) {
        json un = json::array();
        for (int w : witt_weights(d)) un.push_back(w - 1);
        out["witt_weights_unshifted"] = std::move(un);
    }
    out["counts"] = {{"s", s}, {"w", d.unit_counts()}, {"t", d.cone_counts()}};
    return out;
}

int cmd_decompose(const GrArgs& args, int flag_n) {
    json report;
    std::string md;
    if (flag_n > 0) {
        MotiveDecomposition d = flag_motive(flag_n);
        report = report_header("decompose", json{{"flag", flag_n}});
        json body = motive_json(d, flag_chow_ranks(flag_n));
        body["unit_weights_include_empty_subset"] = true;
        report["result"] = std::move(body);
        md = "# Motive of Fl(" + std::to_string(flag_n) + ")\n";
    } else {
        MotiveDecomposition d = decompose_grassmannian(args.k, args.n, args.tw());
        int shift = args.tw() == Twist::twisted ? 1 : 0;
        std::vector<long> counts = degree_counts(Truncation::box(args.k, args.n), args.tw());
        std::vector<long> s(counts.size() + shift, 0);
        for (std::size_t i = 0; i < counts.size(); ++i) s[i + shift] = counts[i];
        report = report_header("decompose", args.params());
        report["result"] = motive_json(d, s);
        if (args.tw() == Twist::untwisted) {
            json rt = json::array();
            for (const RealizationRow& row : realization_report(args.k, args.n))
                rt.push_back({{"degree", row.degree},
                              {"free_rank", row.free_rank},
                              {"torsion_rank", row.torsion_rank},
                              {"chow_rank", row.chow_rank}});
            report["result"]["realization"] = std::move(rt);
        }
        md = "# Motive of " + d.label + "\n";
    }
    md += "\n| kind | weight | count |\n|---|---|---|\n";
    for (const auto& sm : report["result"]["summands"])
        md += "| " + sm["kind"].get<std::string>() + " | " + std::to_string(sm["weight"].get<int>()) +
              " | " + std::to_string(sm["count"].get<long>()) + " |\n";
    emit(report, args.format, md);
    return 0;
}

int cmd_chow_witt(const GrArgs& args) {
    BasisTable table = chow_witt_basis(args.k, args.n, args.tw());
    json degrees = json::array();
    std::string md = "# Chow-Witt basis of Gr(" + std::to_string(args.k) + "," +
                     std::to_string(args.n) + "), " + twist_name(args.tw()) +
                     "\n\n| degree | GW | Z |\n|---|---|---|\n";
    for (const auto& [d, tags] : table.by_degree) {
        json gw = json::array(), z = json::array();
        std::string gw_md, z_md;
        for (const GeneratorTag& tag : tags) {
            if (tag.kind == GenKind::gw_even) {
                gw.push_back({{"shape", shape_json(tag.shape)}, {"witt_symbol", tag.witt_symbol}});
                if (!gw_md.empty()) gw_md += ", ";
                gw_md += "s" + tag.shape.str();
            } else {
                z.push_back({{"tag", tag.kind == GenKind::z_h ? "h" : "partial"},
                             {"eta_index", shape_json(tag.shape)},
                             {"gamma_image", cycle_json(tag.gamma_image)}});
                if (!z_md.empty()) z_md += ", ";
                z_md += cycle_text(tag.gamma_image);
            }
        }
        degrees.push_back({{"d", d}, {"gw", std::move(gw)}, {"z", std::move(z)}});
        md += "| " + std::to_string(d) + " | " + gw_md + " | " + z_md + " |\n";
    }
    json report = report_header("chow-witt", args.params());
    report["result"] = {{"k", args.k},
                        {"n", args.n},
                        {"twist", twist_name(args.tw())},
                        {"degrees", std::move(degrees)}};
    emit(report, args.format, md);
    return 0;
}

int cmd_e_cohomology(const GrArgs& args) {
    json rows = json::array();
    std::string md = "# E-cohomology of Gr(" + std::to_string(args.k) + "," +
                     std::to_string(args.n) + "), " + twist_name(args.tw()) +
                     "\n\n| degree | e_dim | ker | im | evens |\n|---|---|---|---|---|\n";
    for (const RankRow& r : rank_report(args.k, args.n, args.tw())) {
        rows.push_back({{"degree", r.degree},
                        {"e_dim", r.e_dim},
                        {"ker_dim", r.ker_dim},
                        {"im_dim", r.im_dim},
                        {"gw_rank", r.gw_rank},
                        {"z_rank", r.z_rank},
                        {"consistent", r.consistent}});
        md += "| " + std::to_string(r.degree) + " | " + std::to_string(r.e_dim) + " | " +
              std::to_string(r.ker_dim) + " | " + std::to_string(r.im_dim) + " | " +
              std::to_string(r.gw_rank) + " |\n";
    }
    json report = report_header("e-cohomology", args.params());
    report["result"] = {{"degrees", std::move(rows)}};
    emit(report, args.format, md);
    return 0;
}

int cmd_flag(int n, const std::string& format) {
    json result;
    result["n"] = n;
    result["coinvariant_dims"] = coinvariant_dims(n);
    result["e_dims"] = e_flag_dims(n);
    json ts = json::array();
    for (int a = 1; a <= n / 2; ++a) {
        FlagClass t = t_class(n, a);
        ts.push_back({{"a", a}, {"degree", flag_degree(t)}, {"class", flag_str(t)}});
    }
    result["t_classes"] = std::move(ts);
    result["exterior_check"] = exterior_check(n);

    json report = report_header("flag", json{{"n", n}});
    report["result"] = std::move(result);
    std::string md = "# Flag variety Fl(" + std::to_string(n) + ")\n";
    emit(report, format, md);
    return 0;
}

int cmd_verify(const std::string& scope, const VerifyOptions& opts, const std::string& format) {
    std::vector<CheckResult> results = run_verify(scope, opts);
    json checks = json::array();
    std::string md = "# Verification (" + scope + ")\n\n| check | cases | status |\n|---|---|---|\n";
    for (const CheckResult& r : results) {
        checks.push_back({{"scope", r.scope},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"cases", r.cases},
                          {"detail", r.detail}});
        md += "| " + r.scope + "/" + r.name + " | " + std::to_string(r.cases) + " | " +
              (r.pass ? "pass" : "FAIL: " + r.detail) + " |\n";
    }
    bool ok = all_passed(results);
    json report = report_header("verify", json{{"scope", scope},
                                               {"max_n", opts.max_n},
                                               {"max_degree", opts.max_degree},
                                               {"seed", opts.seed}});
    report["result"] = {{"pass", ok}, {"checks", std::move(checks)}};
    emit(report, format, md);
    if (!ok) {
        for (const CheckResult& r : results)
            if (!r.pass)
                std::cerr << "FAIL " << r.scope << "/" << r.name << ": " << r.detail << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Milnor-Witt motivic decompositions of Grassmannians and complete flags"};
    app.require_subcommand(1);

    GrArgs gr;
    bool with_matrices = false;
    int flag_n = 0;
    std::string scope = "all";
    VerifyOptions vopts;
    std::string vformat = "json";
    int flag_only_n = 3;

    auto add_gr_opts = [&](CLI::App* sub, bool need_kn) {
        sub->add_option("-k,--k", gr.k, "subspace rank")->required(need_kn);
        sub->add_option("-n,--n", gr.n, "ambient dimension")->required(need_kn);
        sub->add_flag("--twist", gr.twist, "use the O(1) twist");
        sub->add_option("--format", gr.format, "json|markdown")
            ->check(CLI::IsMember({"json", "markdown"}));
    };

    CLI::App* tab = app.add_subcommand("tableaux", "enumerate and classify tableaux");
    add_gr_opts(tab, true);
    tab->add_flag("--sq2-matrices", with_matrices, "include the Sq2 matrices");

    CLI::App* dec = app.add_subcommand("decompose", "motivic decomposition");
    add_gr_opts(dec, false);
    dec->add_option("--flag", flag_n, "decompose the complete flag Fl(N) instead");

    CLI::App* cw = app.add_subcommand("chow-witt", "Chow-Witt additive basis table");
    add_gr_opts(cw, true);

    CLI::App* ec = app.add_subcommand("e-cohomology", "kernel/image/E dimension table");
    add_gr_opts(ec, true);

    CLI::App* fl = app.add_subcommand("flag", "coinvariant algebra and T-classes of Fl(n)");
    fl->add_option("-n,--n", flag_only_n, "number of variables")->required();
    fl->add_option("--format", gr.format, "json|markdown")
        ->check(CLI::IsMember({"json", "markdown"}));

    CLI::App* ver = app.add_subcommand("verify", "run the invariant suites");
    ver->add_option("--scope", scope, "tableau|schubert|symfunc|motive|chow-witt|flag|all")
        ->check(CLI::IsMember({"tableau", "schubert", "symfunc", "motive", "chow-witt", "flag", "all"}));
    ver->add_option("--max-n", vopts.max_n, "Grassmannian size bound");
    ver->add_option("--max-degree", vopts.max_degree, "polynomial degree bound");
    ver->add_option("--seed", vopts.seed, "seed for randomized suites");
    ver->add_option("--format", vformat, "json|markdown")
        ->check(CLI::IsMember({"json", "markdown"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tab->parsed()) return cmd_tableaux(gr, with_matrices);
        if (dec->parsed()) {
            if (flag_n <= 0 && !(dec->count("-k") && dec->count("-n"))) {
                std::cerr << "decompose needs -k and -n, or --flag N\n";
                return 2;
            }
            return cmd_decompose(gr, flag_n);
        }
        if (cw->parsed()) return cmd_chow_witt(gr);
        if (ec->parsed()) return cmd_e_cohomology(gr);
        if (fl->parsed()) return cmd_flag(flag_only_n, gr.format);
        if (ver->parsed()) return cmd_verify(scope, vopts, vformat);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
