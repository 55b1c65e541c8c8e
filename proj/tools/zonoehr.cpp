// zonoehr: Ehrhart polynomials, h*-vectors, widths, and degree-2
// classification of lattice zonotopes in dimensions 1-3, with an exhaustive
// verification census. All computation is exact.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zonoehr/census.hpp"
#include "zonoehr/classify.hpp"
#include "zonoehr/document.hpp"

using namespace zonoehr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReportSink {
    bool json = false;
    bool no_timings = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(ordered_json report) const {
        if (!no_timings) {
            auto ms = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            report["timings"] = ordered_json{{"total_us", ms}};
        }
        if (json) {
            std::cout << report.dump(2) << "\n";
            return;
        }
        render_text(report, "");
    }

    static void render_text(const ordered_json& j, const std::string& prefix) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object()) {
                std::cout << prefix << key << ":\n";
                render_text(value, prefix + "  ");
            } else {
                std::cout << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                          << "\n";
            }
        }
    }
};

std::string format_poly(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        Rat c = p.coeff(k);
        if (c == 0) continue;
        std::string term;
        Rat a = c < 0 ? -c : c;
        if (k == 0)
            term = rational_string(a);
        else {
            if (a != 1) term = rational_string(a) + "*";
            term += var;
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

ZonotopeDocument load_document(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw input_error("cannot open document file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return parse_document(text);
    } catch (const std::invalid_argument& e) {
        throw input_error(e.what());
    }
}

Rat parse_rat_arg(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument& e) {
        throw input_error(e.what());
    }
}

Int parse_int_arg(const std::string& s) {
    Rat r = parse_rat_arg(s);
    if (!is_integer(r)) throw input_error("expected an integer, got " + s);
    return to_integer(r);
}

ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    j["accepted"] = v.accepted;
    if (v.accepted)
        j["case"] = v.case_label;
    else
        j["reason"] = v.reason;
    return j;
}

ordered_json map_json(const AffineMap& m) {
    ordered_json rows = ordered_json::array();
    // row-major for readability
    for (int i = 0; i < m.transform.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.transform.ncols(); ++j)
            row.push_back(static_cast<long long>(m.transform.at(i, j)));
        rows.push_back(row);
    }
    ordered_json shift = ordered_json::array();
    for (const auto& x : m.shift) shift.push_back(static_cast<long long>(x));
    return ordered_json{{"transform_rows", rows}, {"shift", shift}};
}

int cmd_ehrhart(const std::string& doc_path, bool verify, bool merge_parallel, const Int& budget,
                const ReportSink& sink) {
    ZonotopeDocument doc = load_document(doc_path);
    if (merge_parallel) doc.merge_parallel = true;
    Zonotope Z = zonotope_from_document(doc);
    if (!Z.integer_translate())
        throw input_error("ehrhart: the document must describe a lattice zonotope (integer translate)");

    int r = Z.rank();
    Poly p = ehrhart_stanley(Z);
    CVector c = to_cbasis(p, r);
    HStarVector hs = hstar_from_poly(p, r);
    HStarVector hs_eu = hstar_via_eulerian(c);

    ordered_json report;
    report["command"] = "ehrhart";
    report["inputs"] = serialize_document(doc);
    ordered_json out;
    out["rank"] = r;
    out["ehr"] = poly_strings(p);
    out["ehr_display"] = format_poly(p, "n");
    out["c"] = rat_strings(c.c);
    out["c_integral_nonnegative"] = c.integral_nonnegative;
    out["hstar"] = rat_strings(hs.h);
    out["hstar_via_eulerian"] = rat_strings(hs_eu.h);
    out["degree"] = degree_of(hs);
    out["interior_count"] = interior_count_reciprocity(p, r).str();
    report["outputs"] = out;

    int exit_code = kExitOk;
    if (verify) {
        OracleOptions opts;
        opts.cell_budget = budget;
        opts.verify_fit = true;
        Poly q = ehrhart_oracle(Z, opts);
        bool equal = p == q;
        bool routes_equal = hs.h == hs_eu.h;
        report["verdicts"] = ordered_json{{"stanley_equals_oracle", equal},
                                          {"oracle", poly_strings(q)},
                                          {"hstar_routes_equal", routes_equal}};
        if (!equal || !routes_equal) exit_code = kExitMismatch;
    }
    sink.emit(report);
    return exit_code;
}

int cmd_classify(const std::string& scheme, const std::vector<std::string>& coeffs,
                 bool dim2_bound, const ReportSink& sink) {
    std::vector<Rat> a;
    for (const auto& s : coeffs) a.push_back(parse_rat_arg(s));
    auto need = [&](size_t n) {
        if (a.size() != n)
            throw input_error("scheme " + scheme + " takes " + std::to_string(n) + " coefficients");
    };

    Verdict v;
    std::optional<Zonotope> witness;
    if (scheme == "scott") {
        need(2);
        v = check_scott(a[0], a[1]);
        if (v.accepted && is_integer(a[0]) && is_integer(a[1])) {
            Rat c1 = a[0] - 2, c2 = a[1] - a[0] + 1;
            if (c1 >= 0 && c2 >= 0 && check_zono2d(c1, c2).accepted)
                witness = realize_2d(to_integer(c1), to_integer(c2));
        }
    } else if (scheme == "treutlein") {
        need(2);
        v = check_treutlein(a[0], a[1], dim2_bound);
    } else if (scheme == "zono2d") {
        need(2);
        v = check_zono2d(a[0], a[1]);
        if (v.accepted) witness = realize_2d(to_integer(a[0]), to_integer(a[1]));
    } else if (scheme == "zono3d-deg2") {
        need(3);
        v = check_zono3d_deg2(a[0], a[1], a[2]);
        if (v.accepted) witness = realize_3d_deg2(to_integer(a[0]), to_integer(a[1]));
    } else if (scheme == "hstar2d") {
        need(2);
        v = check_hstar_zono2d(a[0], a[1]);
        if (v.accepted) {
            auto [c1, c2] = inverse_map_hstar_to_c(a[0], a[1], 2);
            witness = realize_2d(to_integer(c1), to_integer(c2));
        }
    } else if (scheme == "hstar3d-deg2") {
        need(2);
        v = check_hstar_zono3d_deg2(a[0], a[1]);
        if (v.accepted) {
            auto [c1, c2] = inverse_map_hstar_to_c(a[0], a[1], 3);
            witness = realize_3d_deg2(to_integer(c1), to_integer(c2));
        }
    } else {
        throw input_error("unknown scheme: " + scheme +
                          " (expected scott, treutlein, zono2d, zono3d-deg2, hstar2d, hstar3d-deg2)");
    }

    ordered_json report;
    report["command"] = "classify";
    report["inputs"] = ordered_json{{"scheme", scheme}, {"coefficients", coeffs}};
    report["verdicts"] = verdict_json(v);
    if (witness) {
        ordered_json w;
        w["document"] = serialize_document(document_from_zonotope(*witness));
        w["ehr"] = poly_strings(ehrhart_stanley(*witness));
        report["witness"] = w;
    }
    sink.emit(report);
    return kExitOk;
}

int cmd_width(const std::string& doc_path, bool merge_parallel, const ReportSink& sink) {
    ZonotopeDocument doc = load_document(doc_path);
    if (merge_parallel) doc.merge_parallel = true;
    Zonotope Z = zonotope_from_document(doc);

    WidthResult w = lattice_width(Z);
    ordered_json report;
    report["command"] = "width";
    report["inputs"] = serialize_document(doc);
    ordered_json out;
    out["lattice_width"] = w.width.str();
    ordered_json wit = ordered_json::array();
    for (const auto& x : w.witness) wit.push_back(static_cast<long long>(x));
    out["witness"] = wit;
    if (Z.full_dimensional()) {
        ordered_json fw = ordered_json::array();
        for (const auto& f : facet_directions(Z)) {
            ordered_json n = ordered_json::array();
            for (const auto& x : f.normal) n.push_back(static_cast<long long>(x));
            fw.push_back(ordered_json{{"normal", n},
                                      {"width", width_in_direction(Z, f.normal).str()}});
        }
        out["facet_widths"] = fw;
        if (Z.integer_translate()) {
            if (auto dec = width1_decomposition(Z)) {
                ordered_json d;
                d["factor"] = serialize_document(document_from_zonotope(dec->factor));
                d["map"] = map_json({dec->transform, dec->shift});
                out["width1_decomposition"] = d;
            } else {
                out["width1_decomposition"] = nullptr;
            }
        }
    }
    report["outputs"] = out;
    sink.emit(report);
    return kExitOk;
}

int cmd_census(const CensusConfig& config, const std::string& out_path, const ReportSink& sink) {
    std::ofstream file;
    std::ostream* jsonl = nullptr;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw input_error("cannot open output file: " + out_path);
        jsonl = &file;
    }
    CensusSummary summary = run_census(config, jsonl);

    ordered_json report;
    report["command"] = "census";
    report["inputs"] = ordered_json{{"dim", config.dim},
                                    {"max_entry", config.max_entry},
                                    {"max_generators", config.max_generators},
                                    {"random", config.random_count},
                                    {"seed", config.seed},
                                    {"out", out_path}};
    report["outputs"] = summary.to_json();
    sink.emit(report);
    return summary.violations == 0 ? kExitOk : kExitMismatch;
}

int cmd_eulerian(int d, int j, const ReportSink& sink) {
    if (d < 1 || d > 9) throw input_error("eulerian: d must be in 1..9 (d! permutations are enumerated)");
    if (j != 0 && (j < 1 || j > d)) throw input_error("eulerian: j must be in 1..d");
    ordered_json report;
    report["command"] = "eulerian";
    report["inputs"] = ordered_json{{"d", d}, {"j", j == 0 ? ordered_json(nullptr) : ordered_json(j)}};
    ordered_json polys = ordered_json::array();
    auto table = eulerian_table(d);
    for (int jj = 1; jj <= d; ++jj) {
        if (j != 0 && jj != j) continue;
        polys.push_back(ordered_json{{"j", jj},
                                     {"coeffs", poly_strings(table[jj - 1])},
                                     {"display", format_poly(table[jj - 1], "t")}});
    }
    report["outputs"] = ordered_json{{"polynomials", polys}};
    sink.emit(report);
    return kExitOk;
}

int cmd_realize(const std::string& kind, const std::string& c1s, const std::string& c2s,
                bool exceptional, const ReportSink& sink) {
    Int c1 = parse_int_arg(c1s), c2 = parse_int_arg(c2s);
    Zonotope Z;
    try {
        if (kind == "2d")
            Z = realize_2d(c1, c2);
        else if (kind == "3d")
            Z = realize_3d_deg2(c1, c2, exceptional);
        else
            throw input_error("realize: kind must be 2d or 3d");
    } catch (const std::invalid_argument& e) {
        throw input_error(e.what());
    }
    ordered_json report;
    report["command"] = "realize";
    report["inputs"] = ordered_json{{"kind", kind}, {"c1", c1s}, {"c2", c2s}};
    ordered_json out;
    out["document"] = serialize_document(document_from_zonotope(Z));
    Poly p = ehrhart_stanley(Z);
    out["ehr"] = poly_strings(p);
    out["ehr_display"] = format_poly(p, "n");
    report["outputs"] = out;
    sink.emit(report);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ehrhart polynomials and degree-2 classification of lattice zonotopes"};
    app.require_subcommand(1);

    ReportSink sink;
    app.add_flag("--json", sink.json, "emit the report as JSON");
    app.add_flag("--no-timings", sink.no_timings, "omit timings from the report");

    std::string doc_path;
    bool verify = false, merge_parallel = false, dim2_bound = false, exceptional = false;
    std::string budget_str = "100000000";

    auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial, c-vector, h* and degree of a zonotope document");
    ehr->add_option("--doc", doc_path, "zonotope document JSON (default: stdin)");
    ehr->add_flag("--verify", verify, "also run the counting oracle and compare");
    ehr->add_flag("--merge-parallel", merge_parallel, "merge parallel generators first");
    ehr->add_option("--budget", budget_str, "oracle bounding-box cell budget");

    std::string scheme;
    std::vector<std::string> coeffs;
    auto* cls = app.add_subcommand("classify", "run a classification checker on coefficients");
    cls->add_option("scheme", scheme, "scott | treutlein | zono2d | zono3d-deg2 | hstar2d | hstar3d-deg2")
        ->required();
    cls->add_option("coefficients", coeffs, "coefficients, integers or p/q")->expected(-1);
    cls->add_flag("--dim2-bound", dim2_bound, "treutlein: also enforce h2* <= h1*");

    auto* wid = app.add_subcommand("width", "lattice width, facet widths, width-1 decomposition");
    wid->add_option("--doc", doc_path, "zonotope document JSON (default: stdin)");
    wid->add_flag("--merge-parallel", merge_parallel, "merge parallel generators first");

    CensusConfig census_cfg;
    std::string out_path;
    std::string max_instances_str = "1000000";
    auto* cen = app.add_subcommand("census", "exhaustively verify a family of zonotopes");
    cen->add_option("--dim", census_cfg.dim, "ambient dimension (1..3)")->required();
    cen->add_option("--max-entry", census_cfg.max_entry, "generator entry bound");
    cen->add_option("--max-generators", census_cfg.max_generators, "maximum number of generators");
    cen->add_option("--out", out_path, "JSON-lines output path (omit to skip records)");
    cen->add_option("--budget", budget_str, "oracle bounding-box cell budget");
    cen->add_option("--max-instances", max_instances_str, "instance-count budget");
    cen->add_option("--jobs", census_cfg.jobs, "worker threads (0 = hardware)");
    cen->add_option("--random", census_cfg.random_count, "append seeded random instances");
    cen->add_option("--seed", census_cfg.seed, "seed for the random instances");

    int eul_d = 0, eul_j = 0;
    auto* eul = app.add_subcommand("eulerian", "refined Eulerian polynomials A^d_j");
    eul->add_option("d", eul_d, "number of letters (1..9)")->required();
    eul->add_option("j", eul_j, "restrict to a single j");

    std::string realize_kind, realize_c1, realize_c2;
    auto* rea = app.add_subcommand("realize", "construct a zonotope with the given c-vector");
    rea->add_option("kind", realize_kind, "2d | 3d")->required();
    rea->add_option("c1", realize_c1)->required();
    rea->add_option("c2", realize_c2)->required();
    rea->add_flag("--exceptional", exceptional, "3d (0,3): return the exceptional parallelepiped");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (ehr->parsed())
            return cmd_ehrhart(doc_path, verify, merge_parallel, Int(budget_str), sink);
        if (cls->parsed()) return cmd_classify(scheme, coeffs, dim2_bound, sink);
        if (wid->parsed()) return cmd_width(doc_path, merge_parallel, sink);
        if (cen->parsed()) {
            census_cfg.cell_budget = Int(budget_str);
            census_cfg.max_instances = Int(max_instances_str);
            return cmd_census(census_cfg, out_path, sink);
        }
        if (eul->parsed()) return cmd_eulerian(eul_d, eul_j, sink);
        if (rea->parsed()) return cmd_realize(realize_kind, realize_c1, realize_c2, exceptional, sink);
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const classification_contradiction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
