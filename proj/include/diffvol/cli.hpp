// Command-line front end: parse inputs, dispatch to the engines, emit
// deterministic text or JSON reports.
//
// Exit codes: 0 success, 1 input/parse error, 2 violated bound hypothesis.

#ifndef DIFFVOL_CLI_HPP
#define DIFFVOL_CLI_HPP

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "applications.hpp"
#include "bounds.hpp"
#include "json_io.hpp"
#include "mixedvol.hpp"
#include "parse.hpp"

namespace diffvol {
namespace cli {

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

inline void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", opts.out_path, "Write the report to this file");
}

inline void add_config_flags(CLI::App* cmd, std::string& gamma, std::string& evar) {
    cmd->add_option("--gamma-variant", gamma, "Gamma variant")
        ->check(CLI::IsMember({"wide", "standard", "refined"}));
    cmd->add_option("--e-variant", evar, "E constant variant")
        ->check(CLI::IsMember({"printed", "per-j"}));
}

inline BoundConfig make_config(const std::string& gamma, const std::string& evar) {
    BoundConfig c;
    if (gamma == "wide") c.gamma_variant = GammaVariant::Wide;
    else if (gamma == "standard") c.gamma_variant = GammaVariant::Standard;
    else if (gamma == "refined") c.gamma_variant = GammaVariant::Refined;
    else throw std::invalid_argument("unknown gamma variant: " + gamma);
    if (evar == "printed") c.e_variant = EVariant::Printed;
    else if (evar == "per-j") c.e_variant = EVariant::PerJ;
    else throw std::invalid_argument("unknown E variant: " + evar);
    return c;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline LatticePolytope load_polytope(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return polytope_from_json(j);
}

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline Int parse_int_arg(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad integer: " + s);
    }
}

/// Writes either to stdout or to --out; never both.
inline void emit(const Json& j, const std::string& text, const OutputOptions& opts,
                 std::ostream& out) {
    std::string payload = opts.format == "json" ? j.dump(2) + "\n" : text;
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write file: " + opts.out_path);
        f << payload;
    } else {
        out << payload;
    }
}

inline std::string report_text(const BoundReport& r) {
    std::ostringstream ss;
    ss << "statement: " << r.statement << "\n";
    ss << "config: gamma=" << to_string(r.config.gamma_variant)
       << " e=" << to_string(r.config.e_variant) << "\n";
    ss << "s: " << r.s << "  k: " << r.k << "\n";
    if (r.c_value) ss << "C: " << r.c_value->get_str() << "\n";
    if (r.e_value) ss << "E: " << r.e_value->get_str() << "\n";
    for (const auto& t : r.terms) ss << "term: " << t << "\n";
    ss << "bound: " << rat_string(r.bound) << "\n";
    if (r.summed_bound) ss << "summed_bound: " << rat_string(*r.summed_bound) << "\n";
    if (r.hp_comparison) ss << "hp_comparison: " << r.hp_comparison->get_str() << "\n";
    for (const auto& n : r.notes) ss << "note: " << n << "\n";
    return ss.str();
}

inline std::string isogeny_text(const IsogenyReport& r) {
    std::ostringstream ss;
    ss << "statement: isogeny\n";
    ss << "variant: " << to_string(r.variant) << "\n";
    for (std::size_t i = 0; i < r.system.polys.size(); ++i)
        ss << "P" << (i + 1) << ": " << to_text(r.system.polys[i]) << "\n";
    ss << "envelope_multiple: " << r.envelope_multiple.get_str() << "\n";
    ss << "engine_value: " << r.engine_value.get_str() << "\n";
    ss << "chain_reference: " << r.chain_reference.get_str() << "\n";
    ss << "stated_reference: " << r.stated_reference.get_str() << "\n";
    ss << "discrepancy: " << (r.discrepancy ? "yes" : "no") << "\n";
    if (r.exact_gamma_value)
        ss << "exact_gamma_value: " << r.exact_gamma_value->get_str() << "\n";
    for (const auto& n : r.notes) ss << "note: " << n << "\n";
    return ss.str();
}

/// Block-structure description for `mixedvol --algorithm blocks`:
/// {"dim": s, "basis": [{"name": ..., "block": [...], "dilation": "d"}, ...],
///  "entries": [["c1", "c2", ...], ...]}.
inline Rat blocks_from_json(const Json& j) {
    int dim = static_cast<int>(json_int(j.at("dim")).get_si());
    std::vector<BlockBasis::Element> elems;
    for (const Json& e : j.at("basis")) {
        BlockBasis::Element el;
        el.name = e.at("name").get<std::string>();
        for (const Json& c : e.at("block"))
            el.block.push_back(static_cast<int>(json_int(c).get_si()));
        el.dilation = json_int(e.at("dilation"));
        elems.push_back(std::move(el));
    }
    BlockBasis basis(dim, std::move(elems));
    std::vector<FormalCombination> entries;
    for (const Json& row : j.at("entries")) {
        FormalCombination fc;
        for (const Json& c : row) fc.coefficients.push_back(json_int(c));
        entries.push_back(std::move(fc));
    }
    return mixed_volume_blocks(basis, entries);
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact mixed-volume bounds for algebraic-differential systems"};
    app.require_subcommand(1);

    OutputOptions opts;
    std::string gamma = "wide", evar = "printed";

    // polytope
    auto* polytope_cmd = app.add_subcommand("polytope", "Lattice polytope operations");
    polytope_cmd->require_subcommand(1);
    std::vector<std::string> poly_files;
    Int dilate_factor = 1;
    auto* p_hull = polytope_cmd->add_subcommand("hull", "Canonical hull of a point set");
    p_hull->add_option("files", poly_files)->required();
    add_output_flags(p_hull, opts);
    auto* p_sum = polytope_cmd->add_subcommand("sum", "Minkowski sum");
    p_sum->add_option("files", poly_files)->required()->expected(-2);
    add_output_flags(p_sum, opts);
    auto* p_dilate = polytope_cmd->add_subcommand("dilate", "Integer dilation");
    p_dilate->add_option("files", poly_files)->required();
    std::string factor_str = "1";
    p_dilate->add_option("--factor", factor_str, "Dilation factor")->required();
    add_output_flags(p_dilate, opts);
    auto* p_volume = polytope_cmd->add_subcommand("volume", "Euclidean volume");
    p_volume->add_option("files", poly_files)->required();
    add_output_flags(p_volume, opts);
    auto* p_coideal = polytope_cmd->add_subcommand("coideal", "Downward-closure test");
    p_coideal->add_option("files", poly_files)->required();
    add_output_flags(p_coideal, opts);

    // mixedvol / bkk
    auto* mv_cmd = app.add_subcommand("mixedvol", "Mixed volume of s polytopes");
    std::vector<std::string> mv_files;
    std::string algorithm = "auto";
    mv_cmd->add_option("files", mv_files)->required();
    mv_cmd->add_option("--algorithm", algorithm, "Evaluation algorithm")
        ->check(CLI::IsMember({"polarization", "interpolation", "blocks", "auto"}));
    add_output_flags(mv_cmd, opts);
    auto* bkk_cmd = app.add_subcommand("bkk", "Solution-count bound s! V");
    bkk_cmd->add_option("files", mv_files)->required();
    add_output_flags(bkk_cmd, opts);

    // tau
    auto* tau_cmd = app.add_subcommand("tau", "Linearization system of a polynomial system");
    std::string system_file;
    tau_cmd->add_option("file", system_file)->required();
    add_output_flags(tau_cmd, opts);

    // eliminate
    auto* elim_cmd =
        app.add_subcommand("eliminate", "Linear elimination determinant of n+1 polynomials");
    elim_cmd->add_option("file", system_file)->required();
    add_output_flags(elim_cmd, opts);

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "Solution-count bounds");
    bound_cmd->require_subcommand(1);
    std::vector<std::string> delta_files;
    std::string delta_file;
    int k_arg = 0, n_arg = 1, l_arg = 1, m_arg = 1;
    std::string dx_str = "1", ds_str = "1";
    auto* b_ci = bound_cmd->add_subcommand("ci", "Complete-intersection bound");
    b_ci->add_option("--deltas", delta_files)->required();
    add_config_flags(b_ci, gamma, evar);
    add_output_flags(b_ci, opts);
    auto* b_gen = bound_cmd->add_subcommand("general", "General-variety bound");
    b_gen->add_option("--deltas", delta_files);
    b_gen->add_option("--delta", delta_file)->required();
    add_config_flags(b_gen, gamma, evar);
    add_output_flags(b_gen, opts);
    auto* b_kush = bound_cmd->add_subcommand("kushnirenko", "Volume-only bound");
    b_kush->add_option("--delta", delta_file)->required();
    b_kush->add_option("--k", k_arg)->required();
    add_config_flags(b_kush, gamma, evar);
    add_output_flags(b_kush, opts);
    auto* b_deg = bound_cmd->add_subcommand("degree", "Reduction-degree bound");
    b_deg->add_option("--deltas", delta_files);
    b_deg->add_option("--delta", delta_file)->required();
    add_config_flags(b_deg, gamma, evar);
    add_output_flags(b_deg, opts);
    auto* b_simple = bound_cmd->add_subcommand("simple", "Degree-only bound");
    b_simple->add_option("--n", n_arg)->required();
    b_simple->add_option("--l", l_arg)->required();
    b_simple->add_option("--k", k_arg)->required();
    b_simple->add_option("--dx", dx_str)->required();
    b_simple->add_option("--ds", ds_str)->required();
    add_config_flags(b_simple, gamma, evar);
    add_output_flags(b_simple, opts);
    auto* b_hp = bound_cmd->add_subcommand("hp", "Prior doubly-exponential value");
    b_hp->add_option("--degx", dx_str)->required();
    b_hp->add_option("--degs", ds_str)->required();
    b_hp->add_option("--m", m_arg)->required();
    b_hp->add_option("--l", l_arg)->required();
    add_output_flags(b_hp, opts);

    // app
    auto* app_cmd = app.add_subcommand("app", "Diophantine applications");
    app_cmd->require_subcommand(1);
    int N_arg = 1, r_arg = 0, t_arg = 1;
    std::string da_str = "1", dw_str = "1", vol_str = "0", d_str = "1", degv_str = "1";
    std::string alpha_str;
    bool exact_gamma = false;
    auto* a_semi = app_cmd->add_subcommand("semiabelian", "Lattice-point bound");
    a_semi->add_option("--N", N_arg)->required();
    a_semi->add_option("--n", n_arg)->required();
    a_semi->add_option("--r", r_arg)->required();
    a_semi->add_option("--t", t_arg);
    a_semi->add_option("--da", da_str)->required();
    a_semi->add_option("--domega", dw_str)->required();
    a_semi->add_option("--dx", dx_str)->required();
    add_config_flags(a_semi, gamma, evar);
    add_output_flags(a_semi, opts);
    auto* a_torus = app_cmd->add_subcommand("torus", "Torus specialization");
    a_torus->add_option("--n", n_arg)->required();
    a_torus->add_option("--r", r_arg)->required();
    a_torus->add_option("--vol", vol_str)->required();
    add_config_flags(a_torus, gamma, evar);
    add_output_flags(a_torus, opts);
    auto* a_torus2 = app_cmd->add_subcommand("torus2", "Two-dimensional torus bounds");
    a_torus2->add_option("--r", r_arg)->required();
    a_torus2->add_option("--d", d_str);
    a_torus2->add_option("--delta", delta_file);
    add_config_flags(a_torus2, gamma, evar);
    add_output_flags(a_torus2, opts);
    auto* a_iso = app_cmd->add_subcommand("isogeny", "Isogeny solution-count computation");
    a_iso->add_option("--alpha", alpha_str, "a,b,c,d of the Mobius map")->required();
    a_iso->add_flag("--exact-gamma", exact_gamma, "Also evaluate the exact Gamma");
    // the isogeny computation defaults to the refined variant
    std::string iso_gamma = "refined";
    add_config_flags(a_iso, iso_gamma, evar);
    add_output_flags(a_iso, opts);
    auto* a_isod = app_cmd->add_subcommand("isogeny-degree", "Isogeny reduction-degree bound");
    a_isod->add_option("--n", n_arg)->required();
    a_isod->add_option("--d", d_str)->required();
    add_config_flags(a_isod, gamma, evar);
    add_output_flags(a_isod, opts);
    auto* a_fs = app_cmd->add_subcommand("fs-baseline", "Prior isogeny baselines");
    a_fs->add_option("--n", n_arg)->required();
    a_fs->add_option("--m", m_arg)->required();
    a_fs->add_option("--degv", degv_str)->required();
    add_output_flags(a_fs, opts);

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "New bound vs prior bound over a degree sweep");
    int dmax_arg = 10;
    cmp_cmd->add_option("--n", n_arg)->required();
    cmp_cmd->add_option("--l", l_arg)->required();
    cmp_cmd->add_option("--k", k_arg)->required();
    cmp_cmd->add_option("--m", m_arg)->required();
    cmp_cmd->add_option("--dmax", dmax_arg);
    add_config_flags(cmp_cmd, gamma, evar);
    add_output_flags(cmp_cmd, opts);

    std::vector<const char*> argv;
    argv.push_back("diffvol");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        BoundConfig config = make_config(gamma, evar);

        if (p_hull->parsed() || p_sum->parsed() || p_dilate->parsed() || p_volume->parsed() ||
            p_coideal->parsed()) {
            std::vector<LatticePolytope> ps;
            for (const auto& f : poly_files) ps.push_back(load_polytope(f));
            if (p_hull->parsed() || p_sum->parsed() || p_dilate->parsed()) {
                LatticePolytope result = ps.front();
                if (p_sum->parsed())
                    for (std::size_t i = 1; i < ps.size(); ++i)
                        result = minkowski_sum(result, ps[i]);
                if (p_dilate->parsed()) {
                    Int f = parse_int_arg(factor_str);
                    if (f < 0) throw std::invalid_argument("negative dilation factor");
                    result = result.dilate(f);
                }
                // canonical form: generators reduced to the vertex set
                result = LatticePolytope::hull(result.vertices());
                std::ostringstream txt;
                txt << "dim: " << result.ambient_dim() << "\n";
                for (const auto& v : result.vertices()) {
                    txt << "vertex:";
                    for (const Int& c : v) txt << " " << c.get_str();
                    txt << "\n";
                }
                emit(polytope_to_json(result), txt.str(), opts, out);
            } else if (p_volume->parsed()) {
                Json j;
                j["volume"] = rat_string(ps.front().volume());
                emit(j, "volume: " + rat_string(ps.front().volume()) + "\n", opts, out);
            } else {
                bool c = ps.front().is_coideal();
                Json j;
                j["coideal"] = c;
                emit(j, std::string("coideal: ") + (c ? "yes" : "no") + "\n", opts, out);
            }
            return 0;
        }

        if (mv_cmd->parsed() || bkk_cmd->parsed()) {
            Rat v;
            std::string algo_used = "polarization";
            if (mv_cmd->parsed() && algorithm == "blocks") {
                if (mv_files.size() != 1)
                    throw std::invalid_argument(
                        "blocks algorithm expects one block-structure file");
                v = blocks_from_json(Json::parse(read_file(mv_files.front())));
                algo_used = "blocks";
            } else {
                std::vector<LatticePolytope> ps;
                for (const auto& f : mv_files) ps.push_back(load_polytope(f));
                if (mv_cmd->parsed() && algorithm == "interpolation") {
                    v = mixed_volume_interp(ps);
                    algo_used = "interpolation";
                } else {
                    v = mixed_volume(ps);
                }
            }
            Json j;
            std::ostringstream txt;
            j["mixed_volume"] = rat_string(v);
            txt << "mixed_volume: " << rat_string(v) << "\n";
            if (algo_used != "blocks") {
                Rat sv = v * Rat(factorial(static_cast<int>(mv_files.size())));
                sv.canonicalize();
                j["bkk"] = sv.get_str();
                txt << "bkk: " << sv.get_str() << "\n";
            }
            j["algorithm"] = algo_used;
            txt << "algorithm: " << algo_used << "\n";
            emit(j, txt.str(), opts, out);
            return 0;
        }

        if (tau_cmd->parsed()) {
            PolySystem sys = parse_system(read_file(system_file));
            TauSystem tau = tau_system(sys.polys);
            Json j;
            JetLayout ext = tau.pairs.front().layout();
            j["vars"] = ext.var_names();
            j["order"] = ext.l();
            Json pairs = Json::array();
            for (const auto& p : tau.pairs) pairs.push_back(to_text(p));
            j["pairs"] = std::move(pairs);
            std::ostringstream txt;
            for (const auto& p : tau.pairs) txt << to_text(p) << "\n";
            emit(j, txt.str(), opts, out);
            return 0;
        }

        if (elim_cmd->parsed()) {
            PolySystem sys = parse_system(read_file(system_file));
            DiffPolynomial r = eliminate_linear(sys.polys);
            Json j;
            j["resultant"] = to_text(r);
            if (!r.is_zero()) j["newton"] = polytope_to_json(newton_polytope(r));
            emit(j, "resultant: " + to_text(r) + "\n", opts, out);
            return 0;
        }

        if (bound_cmd->parsed()) {
            BoundReport rep;
            if (b_ci->parsed()) {
                std::vector<LatticePolytope> ds;
                for (const auto& f : delta_files) ds.push_back(load_polytope(f));
                rep = bound_ci(ds, config);
            } else if (b_gen->parsed() || b_deg->parsed()) {
                std::vector<LatticePolytope> ds;
                for (const auto& f : delta_files) ds.push_back(load_polytope(f));
                LatticePolytope delta = load_polytope(delta_file);
                rep = b_gen->parsed() ? bound_general(ds, delta, config)
                                      : bound_reduction_degree(ds, delta, config);
            } else if (b_kush->parsed()) {
                rep = bound_kushnirenko(load_polytope(delta_file), k_arg, config);
            } else if (b_simple->parsed()) {
                rep = bound_degree_simple(n_arg, l_arg, k_arg, parse_int_arg(dx_str),
                                          parse_int_arg(ds_str), config);
            } else {  // hp
                Int v = bound_hp(parse_int_arg(dx_str), parse_int_arg(ds_str), m_arg, l_arg);
                Json j;
                j["hp"] = v.get_str();
                emit(j, "hp: " + v.get_str() + "\n", opts, out);
                return 0;
            }
            emit(report_to_json(rep), report_text(rep), opts, out);
            return 0;
        }

        if (app_cmd->parsed()) {
            if (a_semi->parsed()) {
                SemiAbelianParams p;
                p.N = N_arg;
                p.n = n_arg;
                p.r = r_arg;
                p.t = t_arg;
                p.d_a = parse_int_arg(da_str);
                p.d_omega = parse_int_arg(dw_str);
                p.d_x = parse_int_arg(dx_str);
                Rat f = f_const(p, config);
                Int b = semiabelian_bound(p, config);
                Json j;
                j["statement"] = "semiabelian";
                j["F"] = rat_string(f);
                j["bound"] = b.get_str();
                emit(j, "F: " + rat_string(f) + "\nbound: " + b.get_str() + "\n", opts, out);
            } else if (a_torus->parsed()) {
                Rat v = torus_bound(n_arg, r_arg, parse_rat(vol_str), config);
                Rat lv = torus_lattice_bound(n_arg, r_arg, parse_rat(vol_str), config);
                Json j;
                j["statement"] = "torus";
                j["bound"] = rat_string(v);
                j["lattice_bound"] = rat_string(lv);
                emit(j, "bound: " + rat_string(v) + "\nlattice_bound: " + rat_string(lv) + "\n",
                     opts, out);
            } else if (a_torus2->parsed()) {
                TorusDim2Bounds b = delta_file.empty()
                                        ? torus_dim2_bounds(r_arg, parse_int_arg(d_str), config)
                                        : torus_dim2_bounds(r_arg, load_polytope(delta_file),
                                                            config);
                Json j;
                j["statement"] = "torus-dim2";
                j["baseline"] = b.baseline.get_str();
                j["improved"] = rat_string(b.improved);
                j["vol"] = rat_string(b.vol);
                emit(j,
                     "baseline: " + b.baseline.get_str() + "\nimproved: " +
                         rat_string(b.improved) + "\nvol: " + rat_string(b.vol) + "\n",
                     opts, out);
            } else if (a_iso->parsed()) {
                std::vector<Rat> entries;
                std::istringstream ss(alpha_str);
                std::string item;
                while (std::getline(ss, item, ',')) entries.push_back(parse_rat(item));
                if (entries.size() != 4)
                    throw std::invalid_argument("--alpha needs four comma-separated values");
                MobiusMap alpha{entries[0], entries[1], entries[2], entries[3]};
                IsogenyReport rep =
                    isogeny_bound(alpha, make_config(iso_gamma, evar), exact_gamma);
                emit(isogeny_report_to_json(rep), isogeny_text(rep), opts, out);
            } else if (a_isod->parsed()) {
                BoundReport rep = isogeny_degree_bound(n_arg, parse_int_arg(d_str), config);
                emit(report_to_json(rep), report_text(rep), opts, out);
            } else {  // fs-baseline
                FsBaselines b = fs_baselines(n_arg, m_arg, parse_int_arg(degv_str));
                Json j;
                j["statement"] = "fs-baseline";
                j["point_count"] = b.point_count.get_str();
                j["corollary"] = b.corollary.get_str();
                emit(j,
                     "point_count: " + b.point_count.get_str() + "\ncorollary: " +
                         b.corollary.get_str() + "\n",
                     opts, out);
            }
            return 0;
        }

        if (cmp_cmd->parsed()) {
            Json rows = Json::array();
            std::ostringstream txt;
            txt << "d new_bound hp_bound\n";
            for (int d = 1; d <= dmax_arg; ++d) {
                Rat full = bound_degree_simple(n_arg, l_arg, k_arg, Int(d), Int(d), config).bound;
                full.canonicalize();
                Int hp = bound_hp(Int(d), Int(d), m_arg, l_arg);
                Json row;
                row["d"] = d;
                row["new_bound"] = full.get_str();
                row["hp_bound"] = hp.get_str();
                rows.push_back(std::move(row));
                txt << d << " " << full.get_str() << " " << hp.get_str() << "\n";
            }
            // crossover: first degree where the new bound drops below the prior one
            int crossover = -1;
            for (int d = 1; d <= 1000000; ++d) {
                Rat full = bound_degree_simple(n_arg, l_arg, k_arg, Int(d), Int(d), config).bound;
                full.canonicalize();
                if (Rat(full) < Rat(bound_hp(Int(d), Int(d), m_arg, l_arg))) {
                    crossover = d;
                    break;
                }
            }
            Json j;
            j["statement"] = "compare";
            j["rows"] = std::move(rows);
            j["crossover"] = crossover >= 0 ? Json(crossover) : Json(nullptr);
            if (crossover >= 0)
                txt << "crossover: " << crossover << "\n";
            else
                txt << "crossover: none\n";
            emit(j, txt.str(), opts, out);
            return 0;
        }

        err << "error: no subcommand\n";
        return 1;
    } catch (const HypothesisError& e) {
        err << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cli
}  // namespace diffvol

#endif
