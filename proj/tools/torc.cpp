#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "torc/combinatorics.hpp"
#include "torc/complexes.hpp"
#include "torc/cover.hpp"
#include "torc/euler.hpp"
#include "torc/json_io.hpp"
#include "torc/reproduce.hpp"
#include "torc/spectral.hpp"

namespace {

using namespace torc;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void emit(const OutputOptions& opts, const json& payload, const std::string& table) {
    std::string text = opts.format == "table" && !table.empty() ? table : payload.dump(2) + "\n";
    if (opts.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(opts.out_path);
        if (!os) throw BadParameter("cannot write " + opts.out_path);
        os << text;
    }
}

SimplePolytope load_polytope(const std::string& builtin, const std::string& file) {
    if (!builtin.empty() && !file.empty()) throw BadParameter("give either --builtin or --polytope");
    if (!builtin.empty()) {
        auto colon = builtin.find(':');
        if (colon == std::string::npos) throw BadParameter("builtin syntax is kind:N");
        std::string kind = builtin.substr(0, colon);
        int param = std::stoi(builtin.substr(colon + 1));
        if (kind == "ngon") return ngon(param);
        if (kind == "simplex") return simplex(param);
        if (kind == "cube") return cube(param);
        throw BadParameter("unknown builtin kind: " + kind);
    }
    if (file.empty()) throw BadParameter("a polytope is required (--builtin or --polytope)");
    std::ifstream is(file);
    if (!is) throw BadParameter("cannot read " + file);
    json j;
    is >> j;
    return polytope_from_json(j);
}

Coeff parse_coeff(const std::string& s) {
    if (s == "z" || s == "Z") return Coeff::Z;
    if (s == "q" || s == "Q") return Coeff::Q;
    if (s == "z2" || s == "Z2") return Coeff::Z2;
    throw BadParameter("coefficients must be one of z, q, z2");
}

json homology_with_chi(const HomologyResult& h) {
    json j;
    j["homology"] = homology_to_json(h);
    j["euler_characteristic"] = int_to_string(h.euler_characteristic());
    return j;
}

int run_reproduce(const std::vector<CheckRow>& rows, const OutputOptions& opts) {
    json j;
    j["rows"] = check_rows_to_json(rows);
    j["all_pass"] = all_pass(rows);
    emit(opts, j, check_rows_table(rows));
    return all_pass(rows) ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Combinatorial invariants of orbit configuration spaces over simple polytopes"};
    app.require_subcommand(1);

    OutputOptions opts;
    app.add_option("--format", opts.format, "Output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", opts.out_path, "Write output to a file instead of stdout");

    std::string builtin, polytope_file, coeff_str;
    int d = 1, k = 2, m = 3, n = 2, ii = 0, jj = 0;

    // hvector
    auto* cmd_hvector = app.add_subcommand("hvector", "Face and h-vectors of a simple polytope");
    cmd_hvector->add_option("--builtin", builtin, "ngon:M | simplex:N | cube:N");
    cmd_hvector->add_option("--polytope", polytope_file, "Polytope JSON file");
    bool with_faces = false;
    cmd_hvector->add_flag("--faces", with_faces, "Include the full face lattice");

    // euler
    auto* cmd_euler = app.add_subcommand("euler", "Euler characteristics");
    cmd_euler->require_subcommand(1);
    auto* cmd_orbit = cmd_euler->add_subcommand("orbit", "Orbit configuration space over a polytope");
    cmd_orbit->add_option("--builtin", builtin);
    cmd_orbit->add_option("--polytope", polytope_file);
    cmd_orbit->add_option("--d", d, "1 (real) or 2 (complex)")->required();
    cmd_orbit->add_option("--k", k, "number of points")->required();

    std::string chi_str = "0";
    std::string method = "closed";
    auto* cmd_classical = cmd_euler->add_subcommand("classical", "Configuration space of a closed manifold");
    cmd_classical->add_option("--chi", chi_str, "Euler characteristic of M")->required();
    cmd_classical->add_option("--n", n, "dimension of M")->required();
    cmd_classical->add_option("--k", k)->required();
    cmd_classical->add_option("--method", method)->check(CLI::IsMember({"closed", "partition", "both"}));

    bool assume_small_cover = false;
    auto* cmd_ma = cmd_euler->add_subcommand("moment-angle", "Moment-angle manifold over a polytope");
    cmd_ma->add_option("--builtin", builtin);
    cmd_ma->add_option("--polytope", polytope_file);
    cmd_ma->add_option("--d", d)->required();
    cmd_ma->add_option("--k", k)->required();
    cmd_ma->add_flag("--assume-small-cover", assume_small_cover,
                     "Assert that a small cover over P exists (required for d=1)");

    // coeff
    bool verify = false;
    auto* cmd_coeff = app.add_subcommand("coeff", "Partition coefficients");
    cmd_coeff->add_option("--k", k)->required();
    cmd_coeff->add_flag("--verify", verify, "Cross-check against subgraph enumeration (k <= 6)");

    // complex
    auto* cmd_complex = app.add_subcommand("complex", "Simplicial complex constructions");
    cmd_complex->require_subcommand(1);
    auto* cmd_kp = cmd_complex->add_subcommand("kp", "Disjoint-pair nerve of a polytope");
    cmd_kp->add_option("--builtin", builtin);
    cmd_kp->add_option("--polytope", polytope_file);
    auto* cmd_kpm = cmd_complex->add_subcommand("kpm", "Explicit polygon nerve");
    cmd_kpm->add_option("--m", m)->required();
    auto* cmd_lpm = cmd_complex->add_subcommand("lpm", "Locally nice polygon subcomplex");
    cmd_lpm->add_option("--m", m)->required();
    auto* cmd_sdbd = cmd_complex->add_subcommand("sdbd", "Barycentric subdivision of the simplex boundary");
    cmd_sdbd->add_option("--n", n)->required();
    auto* cmd_kij = cmd_complex->add_subcommand("kij", "Chain band subcomplex of the subdivision");
    cmd_kij->add_option("--n", n)->required();
    cmd_kij->add_option("--i", ii)->required();
    cmd_kij->add_option("--j", jj)->required();

    // homology
    std::string in_file;
    bool reduced = false;
    auto* cmd_homology = app.add_subcommand("homology", "Homology of a simplicial complex");
    cmd_homology->add_option("--in", in_file, "SimplicialComplex JSON file (- for stdin)")->required();
    cmd_homology->add_option("--coeff", coeff_str, "z | q | z2 (default z)");
    cmd_homology->add_flag("--reduced", reduced);

    // ss
    std::string dump_model;
    auto* cmd_ss = app.add_subcommand("ss", "Double complex and spectral pages of a cover model");
    cmd_ss->require_subcommand(1);
    auto* cmd_ss_poly = cmd_ss->add_subcommand("polygon", "Model over an m-gon");
    cmd_ss_poly->add_option("--m", m)->required();
    cmd_ss_poly->add_option("--d", d)->required();
    cmd_ss_poly->add_option("--coeff", coeff_str, "z | q | z2 (default z)");
    cmd_ss_poly->add_option("--dump-model", dump_model, "Write the cover model JSON to a file");
    auto* cmd_ss_simplex = cmd_ss->add_subcommand("simplex", "Model over an n-simplex");
    cmd_ss_simplex->add_option("--n", n)->required();
    cmd_ss_simplex->add_option("--d", d)->required();
    cmd_ss_simplex->add_option("--coeff", coeff_str, "z | q | z2 (default: z2 for d=1, z for d=2)");
    cmd_ss_simplex->add_option("--dump-model", dump_model);

    // reproduce
    int m_max = 8, n_max = 5;
    auto* cmd_rep = app.add_subcommand("reproduce", "Regenerate reference tables with PASS/FAIL verdicts");
    cmd_rep->require_subcommand(1);
    auto* rep_b1 = cmd_rep->add_subcommand("prop-b1", "Polygon model homology tables");
    rep_b1->add_option("--m-max", m_max)->capture_default_str();
    auto* rep_b2 = cmd_rep->add_subcommand("prop-b2", "Simplex model homology tables");
    rep_b2->add_option("--n-max", n_max)->capture_default_str();
    int hom_n_max = 6;
    auto* rep_hom = cmd_rep->add_subcommand("prop-hom", "Chain band subcomplex homology tables");
    rep_hom->add_option("--n-max", hom_n_max)->capture_default_str();
    int t15_m_max = 6, t15_n_max = 4;
    auto* rep_t15 = cmd_rep->add_subcommand("thm15", "Page comparison between d=1 and d=2 models");
    rep_t15->add_option("--m-max", t15_m_max)->capture_default_str();
    rep_t15->add_option("--n-max", t15_n_max)->capture_default_str();
    int ann_m_max = 12;
    auto* rep_ann = cmd_rep->add_subcommand("lemma-annulus", "Polygon nerve face counts");
    rep_ann->add_option("--m-max", ann_m_max)->capture_default_str();

    // let the global --format/--out options appear after subcommand flags
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough(true);
        for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; })) enable_fallthrough(s);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the error message
        return code == 0 ? 0 : 2;
    }

    if (*cmd_hvector) {
        SimplePolytope p = load_polytope(builtin, polytope_file);
        json j = polytope_to_json(p, with_faces);
        FVector f = f_vector(p);
        HPolynomial h = h_polynomial(p);
        json jf = json::array(), jh = json::array();
        for (const Int& v : f.entries) jf.push_back(int_to_string(v));
        for (const Int& v : h.coeffs) jh.push_back(int_to_string(v));
        j["f_vector"] = jf;
        j["h_vector"] = jh;
        emit(opts, j, "");
        return 0;
    }

    if (*cmd_euler) {
        json j;
        if (*cmd_orbit) {
            SimplePolytope p = load_polytope(builtin, polytope_file);
            j["chi"] = int_to_string(chi_orbit_config(p, d, k));
        } else if (*cmd_classical) {
            Int chi_m = int_from_string(chi_str);
            if (method == "closed" || method == "both")
                j["chi"] = int_to_string(chi_classical_closed(chi_m, n, k));
            if (method == "partition")
                j["chi"] = int_to_string(chi_classical_partition(chi_m, n, k));
            if (method == "both") {
                j["chi_partition"] = int_to_string(chi_classical_partition(chi_m, n, k));
                j["match"] = j["chi"] == j["chi_partition"];
            }
        } else {
            SimplePolytope p = load_polytope(builtin, polytope_file);
            if (d == 1) {
                if (!assume_small_cover)
                    throw BadParameter("d=1 moment-angle values assume a small cover exists; "
                                       "pass --assume-small-cover to assert it");
                j["chi"] = int_to_string(chi_real_moment_angle(p, k));
            } else {
                j["chi"] = int_to_string(chi_moment_angle_torus(p, k));
            }
        }
        emit(opts, j, "");
        return 0;
    }

    if (*cmd_coeff) {
        std::map<Partition, Int> brute;
        if (verify) brute = coeff_bruteforce(k);
        std::vector<CheckRow> rows;
        json arr = json::array();
        for (const Partition& part : partitions(k)) {
            Int closed = coeff_closed(part);
            json entry;
            entry["partition"] = part.parts;
            entry["closed"] = int_to_string(closed);
            CheckRow row;
            row.label = part.to_string();
            row.computed = int_to_string(closed);
            row.expected = "-";
            row.pass = true;
            if (verify) {
                Int bf = brute.at(part);
                entry["bruteforce"] = int_to_string(bf);
                entry["match"] = (bf == closed);
                row.expected = int_to_string(bf);
                row.pass = bf == closed;
            }
            arr.push_back(entry);
            rows.push_back(row);
        }
        json j;
        j["k"] = k;
        j["coefficients"] = arr;
        if (verify) j["all_match"] = all_pass(rows);
        emit(opts, j, check_rows_table(rows));
        return verify && !all_pass(rows) ? 1 : 0;
    }

    if (*cmd_complex) {
        SimplicialComplex out;
        if (*cmd_kp) {
            out = k_p(load_polytope(builtin, polytope_file)).complex;
        } else if (*cmd_kpm) {
            out = k_pm(m).complex;
        } else if (*cmd_lpm) {
            out = l_pm(m).complex;
        } else if (*cmd_sdbd) {
            out = sd_boundary_simplex(n).complex;
        } else {
            out = k_ij(n, ii, jj).complex;
        }
        emit(opts, complex_to_json(out), "");
        return 0;
    }

    if (*cmd_homology) {
        json j;
        if (in_file == "-") {
            std::cin >> j;
        } else {
            std::ifstream is(in_file);
            if (!is) throw BadParameter("cannot read " + in_file);
            is >> j;
        }
        SimplicialComplex kx = complex_from_json(j);
        Coeff coeff = coeff_str.empty() ? Coeff::Z : parse_coeff(coeff_str);
        HomologyResult h = homology(oriented_chain_complex(kx, coeff));
        if (reduced && !h.betti.empty()) h.betti[0] -= 1;
        emit(opts, homology_with_chi(h), "");
        return 0;
    }

    if (*cmd_ss) {
        CoverModel cm;
        json meta;
        if (*cmd_ss_poly) {
            Coeff coeff = coeff_str.empty() ? Coeff::Z : parse_coeff(coeff_str);
            cm = polygon_cover_model(m, d, coeff);
            meta = {{"kind", "polygon"}, {"m", m}, {"d", d}};
        } else {
            std::optional<Coeff> coeff;
            if (!coeff_str.empty()) coeff = parse_coeff(coeff_str);
            cm = simplex_cover_model(n, d, coeff);
            meta = {{"kind", "simplex"}, {"n", n}, {"d", d}};
        }
        DoubleComplex dc = double_complex(cm);
        if (!dump_model.empty()) {
            std::ofstream os(dump_model);
            if (!os) throw BadParameter("cannot write " + dump_model);
            os << cover_model_to_json(cm).dump(2) << "\n";
        }
        HomologyResult total = total_homology(dc, cm.coeff);
        Coeff page_field = cm.coeff == Coeff::Z ? Coeff::Q : cm.coeff;
        SpectralPages pg = pages(dc, page_field);
        ConvergenceReport conv = convergence_report(pg, total);

        json j = pages_to_json(pg);
        j["model"] = meta;
        j["coeff"] = coeff_name(cm.coeff);
        j["pages_coeff"] = coeff_name(page_field);
        j["total"] = homology_to_json(total);
        j["collapse_page"] = conv.collapse_page;
        j["converged"] = conv.pass;
        emit(opts, j, "");
        return 0;
    }

    if (*cmd_rep) {
        if (*rep_b1) return run_reproduce(reproduce_prop_b1(m_max), opts);
        if (*rep_b2) return run_reproduce(reproduce_prop_b2(n_max), opts);
        if (*rep_hom) return run_reproduce(reproduce_prop_hom(hom_n_max), opts);
        if (*rep_t15) return run_reproduce(reproduce_thm15(t15_m_max, t15_n_max), opts);
        return run_reproduce(reproduce_lemma_annulus(ann_m_max), opts);
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const torc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
