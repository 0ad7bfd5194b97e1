#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "facet/binrep.hpp"
#include "facet/complex.hpp"
#include "facet/decomposition.hpp"
#include "facet/fvector.hpp"
#include "facet/harness.hpp"
#include "facet/polynomial.hpp"
#include "facet/triangle.hpp"

namespace {

using namespace facet;

int report_pressure(const PressureReport& rep) {
    for (const auto& c : rep.checks) {
        std::cout << "  i=" << c.i << ": pressure " << c.pressure.get_str() << " <= "
                  << c.bound.get_str() << (c.ok ? "  ok" : "  VIOLATED") << "\n";
    }
    std::cout << (rep.ok ? "PASS" : "FAIL") << "\n";
    return rep.ok ? 0 : 1;
}

std::string render_entry(const BinRepEntry& e) {
    std::ostringstream out;
    out << "x_" << e.k << " = ";
    if (e.exact) {
        out << e.lo.get_num().get_str();
        if (e.lo.get_den() != 1) out << "/" << e.lo.get_den().get_str();
        out << " (exact)";
    } else {
        Rat mid = (e.lo + e.hi) / 2;
        out << to_decimal(mid, 12) << " +/- " << to_decimal(e.width() / 2, 12);
    }
    out << ", ceil " << e.ceil_x.get_str();
    return out.str();
}

int cmd_triangle(const std::string& which, unsigned D, bool do_check) {
    std::vector<TriangleSpec> specs;
    try {
        specs.push_back(builtin_spec(which));
    } catch (const std::invalid_argument&) {
        std::ifstream in(which);
        if (!in) throw std::invalid_argument("no builtin triangle or spec file '" + which + "'");
        specs = parse_spec_file(in);
    }
    bool all_ok = true;
    for (const auto& spec : specs) {
        SpecReport v = validate_spec(spec);
        std::cout << "triangle " << spec.name << ": spec "
                  << (v.ok ? "valid" : "INVALID") << "\n";
        for (const auto& msg : v.violations) std::cout << "  " << msg << "\n";
        if (!v.ok) {
            all_ok = false;
            continue;
        }
        TriangleRows t = rows(spec, D);
        for (std::size_t d = 0; d < t.size(); ++d) {
            std::cout << "  d=" << d + 1 << ":";
            for (const auto& v2 : t[d]) std::cout << " " << v2.get_str();
            std::cout << "\n";
        }
        if (do_check) {
            for (const auto& rc : check_rows_kk(spec, D)) {
                bool ok = rc.kk_ok && rc.claims_ok;
                if (!ok) all_ok = false;
                std::cout << "  d=" << rc.d << ": kk " << (rc.kk_ok ? "pass" : "FAIL")
                          << ", claims " << (rc.claims_ok ? "pass" : "FAIL") << "\n";
            }
        }
    }
    return all_ok ? 0 : 1;
}

void print_complex(const SimplicialComplex& c) {
    std::cout << "f-vector: " << to_string(c.f_vector()) << "\n";
    std::cout << "facets: " << format_facets(c) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact f-vector / real-rooted polynomial toolkit"};
    app.require_subcommand(1);

    std::string vec_arg, poly_arg, tri_arg, kind_arg, out_file;
    std::string arg1, arg2;
    std::string gen_name = "grid";
    std::string campaign_name;
    unsigned rows_d = 8, jobs = 1, max_degree = 4;
    long max_coeff = 20;
    unsigned long scale = 1;
    unsigned tol_exp = 9;
    bool tri_check = false;

    auto* kk = app.add_subcommand("check-kk", "Kruskal-Katona feasibility of a vector");
    kk->add_option("vector", vec_arg)->required();
    auto* mac = app.add_subcommand("check-macaulay", "Macaulay feasibility of a vector");
    mac->add_option("vector", vec_arg)->required();
    auto* st = app.add_subcommand("sturm", "real-rootedness via Sturm chain");
    st->add_option("poly", poly_arg)->required();
    auto* ulc = app.add_subcommand("ulc", "ultra-log-concavity check");
    ulc->add_option("poly", poly_arg)->required();
    auto* br = app.add_subcommand("binrep", "binomial representation with enclosures");
    br->add_option("poly", poly_arg)->required();
    br->add_option("--tol", tol_exp, "enclosure width 10^-TOL");
    auto* dec = app.add_subcommand("decompose", "recursive decomposition f = g + t h");
    dec->add_option("poly", poly_arg)->required();
    auto* tri = app.add_subcommand("triangle", "triangle recurrence rows");
    tri->add_option("name", tri_arg, "builtin name or spec file")->required();
    tri->add_option("--rows", rows_d)->required();
    tri->add_flag("--check-kk", tri_check);
    auto* con = app.add_subcommand("construct", "f-vector preserving constructions");
    con->add_option("kind", kind_arg, "join|hadamard|dilate|ftf|veronese")->required();
    con->add_option("arg1", arg1)->required();
    con->add_option("arg2", arg2, "second facet list, or integer parameter");
    auto* rz = app.add_subcommand("realize", "compressed realization of a KK vector");
    rz->add_option("vector", vec_arg)->required();
    auto* cam = app.add_subcommand("campaign", "run a verification campaign");
    cam->add_option("name", campaign_name)->required();
    cam->add_option("--max-degree", max_degree);
    cam->add_option("--max-coeff", max_coeff);
    cam->add_option("--generator", gen_name)
        ->check(CLI::IsMember({"grid", "root-product", "both"}));
    cam->add_option("--jobs", jobs);
    cam->add_option("--out", out_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    try {
        if (kk->parsed()) return report_pressure(check_kk(parse_fvector(vec_arg)));
        if (mac->parsed()) return report_pressure(check_macaulay(parse_fvector(vec_arg)));
        if (st->parsed()) {
            bool rr = is_real_rooted(parse_poly(poly_arg));
            std::cout << "real-rooted: " << (rr ? "true" : "false") << "\n";
            return rr ? 0 : 1;
        }
        if (ulc->parsed()) {
            bool ok = is_ultra_log_concave(parse_poly(poly_arg));
            std::cout << "ultra-log-concave: " << (ok ? "true" : "false") << "\n";
            return ok ? 0 : 1;
        }
        if (br->parsed()) {
            Rat tol(1);
            for (unsigned i = 0; i < tol_exp; ++i) tol /= 10;
            IntPolynomial p = parse_poly(poly_arg);
            RealBinRep rep = binrep(p, tol);
            for (const auto& e : rep.entries) std::cout << render_entry(e) << "\n";
            Tri mono = check_monotone(rep);
            std::cout << "monotone: "
                      << (mono == Tri::True    ? "true"
                          : mono == Tri::False ? "false"
                                               : "indeterminate")
                      << "\n";
            std::cout << "ceiling-condition: "
                      << (check_ceiling_condition(p) ? "true" : "false") << "\n";
            return 0;
        }
        if (dec->parsed()) {
            IntPolynomial p = parse_poly(poly_arg);
            Decomposition d = recursive_decompose(p);
            std::cout << "g: " << to_string(d.g) << "\n";
            std::cout << "h: " << to_string(d.h) << "\n";
            std::cout << "conjecture-second (h_i <= g_i): "
                      << (check_conjecture_second(p) ? "true" : "false") << "\n";
            auto [grr, hrr] = check_question_second(p);
            std::cout << "question-second (g, h real rooted): " << (grr ? "true" : "false")
                      << ", " << (hrr ? "true" : "false") << "\n";
            return 0;
        }
        if (tri->parsed()) return cmd_triangle(tri_arg, rows_d, tri_check);
        if (con->parsed()) {
            if (kind_arg == "join" || kind_arg == "hadamard") {
                if (arg2.empty())
                    throw std::invalid_argument(kind_arg + " needs two facet lists");
                SimplicialComplex a = parse_facets(arg1);
                SimplicialComplex b = parse_facets(arg2);
                print_complex(kind_arg == "join" ? join(a, b) : hadamard_complex(a, b));
            } else if (kind_arg == "dilate") {
                scale = std::stoul(arg2.empty() ? "1" : arg2);
                print_complex(dilate_complex(parse_facets(arg1),
                                             static_cast<unsigned>(scale)));
            } else if (kind_arg == "ftf") {
                std::cout << to_string(f_plus_tfprime_vector(parse_fvector(arg1))) << "\n";
            } else if (kind_arg == "veronese") {
                scale = std::stoul(arg2.empty() ? "1" : arg2);
                std::cout << to_string(veronese_subsequence(
                                 parse_fvector(arg1), static_cast<unsigned>(scale)))
                          << "\n";
            } else {
                throw std::invalid_argument("unknown construction '" + kind_arg + "'");
            }
            return 0;
        }
        if (rz->parsed()) {
            print_complex(compressed_realize(parse_fvector(vec_arg)));
            return 0;
        }
        if (cam->parsed()) {
            CorpusSpec spec;
            spec.max_degree = max_degree;
            spec.max_coeff = max_coeff;
            spec.generator = gen_name == "grid"         ? Generator::Grid
                             : gen_name == "root-product" ? Generator::RootProduct
                                                          : Generator::Both;
            auto corpus = generate_corpus(spec);
            CampaignReport rep = run_campaign(campaign_name, corpus, jobs);
            if (out_file.empty()) {
                write_report(std::cout, rep);
            } else {
                std::ofstream out(out_file);
                if (!out) throw std::invalid_argument("cannot open '" + out_file + "'");
                write_report(out, rep);
            }
            return rep.findings.empty() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
