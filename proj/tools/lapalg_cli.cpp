// Command-line front end: every subcommand assembles a JSON job and runs it
// through the shared dispatcher, so `lapalg run job.json` and the direct
// subcommands produce identical reports.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lapalg/errors.hpp"
#include "lapalg/jobs.hpp"
#include "lapalg/version.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string json_out;
    long seed = 0;
    bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--json-out", opts.json_out, "also write the JSON report to this file");
    cmd->add_option("--seed", opts.seed, "random seed recorded in the report")->default_val(0);
    cmd->add_flag("--no-timing", opts.no_timing, "omit the timing_ms field (golden-file runs)");
}

int emit(json report, const CommonOpts& opts, int exit_code, double ms) {
    if (!opts.no_timing) report["timing_ms"] = static_cast<long>(ms);
    std::string text = report.dump(2);
    std::cout << text << std::endl;
    if (!opts.json_out.empty()) {
        std::ofstream out(opts.json_out);
        if (!out) {
            std::cerr << "error: cannot write " << opts.json_out << std::endl;
            return 2;
        }
        out << text << "\n";
    }
    return exit_code;
}

int run(json job, const CommonOpts& opts) {
    job["seed"] = opts.seed;
    auto start = std::chrono::steady_clock::now();
    try {
        lapalg::JobOutcome outcome = lapalg::run_job(job);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                        .count();
        return emit(std::move(outcome.report), opts, outcome.exit_code, ms);
    } catch (const lapalg::budget_error& e) {
        json report{{"error", e.what()}, {"kind", "budget"}, {"exit_code", 3}};
        return emit(std::move(report), opts, 3, 0);
    } catch (const lapalg::input_error& e) {
        json report{{"error", e.what()}, {"kind", "input"}, {"exit_code", 2}};
        return emit(std::move(report), opts, 2, 0);
    } catch (const json::exception& e) {
        json report{{"error", e.what()}, {"kind", "input"}, {"exit_code", 2}};
        return emit(std::move(report), opts, 2, 0);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lapalg - exact computational toolkit for Laplacian algebras,"
                 " harmonic decompositions, polarizations, and finite-group invariants"};
    app.set_version_flag("--version", lapalg::kVersion);
    app.require_subcommand(1);

    struct Sub {
        CLI::App* cmd = nullptr;
        CommonOpts common;
        json job;
        long n = -1;
        std::vector<std::string> polys;
        std::vector<std::string> gens;
        std::string poly;
        std::string file;
        long k = 2, degree_bound = 0, stage_budget = 16, trials = 5, m = 1, l = 0, degree = 2,
             cap = 10000;
        bool separating_asserted = false;
    };
    std::vector<std::unique_ptr<Sub>> subs;

    auto make = [&](const std::string& name, const std::string& desc) -> Sub& {
        subs.push_back(std::make_unique<Sub>());
        Sub& s = *subs.back();
        s.cmd = app.add_subcommand(name, desc);
        add_common(s.cmd, s.common);
        return s;
    };

    // run: job file straight through the dispatcher
    Sub& s_run = make("run", "run a JSON job file");
    s_run.cmd->add_option("job", s_run.file, "path to the job file")->required();

    auto add_poly_set = [](Sub& s, const char* what) {
        s.cmd->add_option("--n", s.n, "ambient variable count (inferred when omitted)");
        s.cmd->add_option("--poly", s.polys, what)->required();
    };

    Sub& s_check = make("check-laplacian", "decide whether <S> is a Laplacian algebra");
    add_poly_set(s_check, "generator polynomial (repeatable); must include r^2");

    Sub& s_closure = make("closure", "run the Laplacian closure iteration S_1, S_2, ...");
    add_poly_set(s_closure, "seed polynomial (repeatable)");
    s_closure.cmd->add_option("--stage-budget", s_closure.stage_budget)->default_val(16);

    Sub& s_sep = make("separating-generates",
                      "separating-set criterion: does S generate the full invariant algebra");
    add_poly_set(s_sep, "separating polynomial (repeatable); must include r^2");
    s_sep.cmd->add_flag("--separating-asserted", s_sep.separating_asserted,
                        "assert that S separates the fibers (otherwise the verdict is conditional)");

    Sub& s_dec = make("decompose-harmonic", "harmonic decomposition of a homogeneous polynomial");
    s_dec.cmd->add_option("--n", s_dec.n, "ambient variable count");
    s_dec.cmd->add_option("--poly", s_dec.poly, "homogeneous polynomial")->required();

    Sub& s_mem = make("membership", "exact subalgebra membership with witness");
    s_mem.cmd->add_option("--n", s_mem.n, "ambient variable count");
    s_mem.cmd->add_option("--poly", s_mem.poly, "query polynomial")->required();
    s_mem.cmd->add_option("--gen", s_mem.gens, "subalgebra generator (repeatable)")->required();

    Sub& s_pol = make("polarize", "classical polarizations of a homogeneous polynomial");
    s_pol.cmd->add_option("--n", s_pol.n, "ambient variable count");
    s_pol.cmd->add_option("--poly", s_pol.poly, "homogeneous polynomial")->required();
    s_pol.cmd->add_option("--k", s_pol.k)->default_val(2);

    Sub& s_hom = make("homogeneity", "degree-bounded restriction test for homogeneity of A^(k)");
    add_poly_set(s_hom, "generator of A (repeatable)");
    s_hom.cmd->add_option("--k", s_hom.k)->default_val(2);
    s_hom.cmd->add_option("--degree-bound", s_hom.degree_bound)->default_val(4);
    s_hom.cmd->add_option("--stage-budget", s_hom.stage_budget)->default_val(16);
    s_hom.cmd->add_option("--trials", s_hom.trials)->default_val(5);

    Sub& s_qh = make("quadratic-homogeneity", "Jordan/enveloping-algebra homogeneity test");
    s_qh.cmd->add_option("--matrices", s_qh.file, "JSON file with a list of symmetric matrices")
        ->required();

    Sub& s_cl = make("clifford", "built-in Clifford system and its foliation generators");
    s_cl.cmd->add_option("--m", s_cl.m)->required();
    s_cl.cmd->add_option("--l", s_cl.l, "half-size; default from the built-in table")->default_val(0);

    Sub& s_fgi = make("finite-group-invariants", "Reynolds generators of the invariant algebra");
    s_fgi.cmd->add_option("--group", s_fgi.file, "JSON file with group generator matrices")
        ->required();
    s_fgi.cmd->add_option("--degree-bound", s_fgi.degree_bound, "0 = group order")->default_val(0);
    s_fgi.cmd->add_option("--cap", s_fgi.cap)->default_val(10000);

    Sub& s_iit = make("iit", "inverse invariant theory check: Laplacian + transcendence degree");
    s_iit.cmd->add_option("--group", s_iit.file, "JSON file with group generator matrices")
        ->required();
    s_iit.cmd->add_option("--degree-bound", s_iit.degree_bound, "0 = group order")->default_val(0);
    s_iit.cmd->add_option("--trials", s_iit.trials)->default_val(5);
    s_iit.cmd->add_option("--cap", s_iit.cap)->default_val(10000);

    Sub& s_kns = make("kns", "k normal spaces condition via gradient-rank sampling");
    add_poly_set(s_kns, "generator of the basic-polynomial algebra (repeatable)");
    s_kns.cmd->add_option("--k", s_kns.k)->default_val(1);
    s_kns.cmd->add_option("--trials", s_kns.trials)->default_val(5);

    Sub& s_os = make("orbit-sep", "sampling falsification of orbit separation");
    s_os.cmd->add_option("--group", s_os.file, "JSON file with group generator matrices")->required();
    s_os.cmd->add_option("--poly", s_os.polys, "invariant polynomial (repeatable)")->required();
    s_os.cmd->add_option("--trials", s_os.trials)->default_val(32);
    s_os.cmd->add_option("--cap", s_os.cap)->default_val(10000);

    Sub& s_sr = make("schur-ratios", "L^2/apolar ratios of the harmonic summands");
    s_sr.cmd->add_option("--n", s_sr.n)->required();
    s_sr.cmd->add_option("--degree", s_sr.degree)->required();

    CLI11_PARSE(app, argc, argv);

    auto read_json_file = [](const std::string& path) -> json {
        std::ifstream in(path);
        if (!in) throw lapalg::input_error("cannot open file '" + path + "'");
        return json::parse(in);
    };

    for (auto& sp : subs) {
        Sub& s = *sp;
        if (!s.cmd->parsed()) continue;
        const std::string name = s.cmd->get_name();
        try {
            json job;
            if (name == "run") {
                job = read_json_file(s.file);
                if (!job.contains("seed") || s.cmd->count("--seed")) job["seed"] = s.common.seed;
                else s.common.seed = job["seed"].get<long>();
            } else {
                job["command"] = name;
                if (s.n >= 0) job["n"] = s.n;
                if (!s.polys.empty()) job["polynomials"] = s.polys;
                if (!s.poly.empty()) job["polynomial"] = s.poly;
                if (!s.gens.empty()) job["generators"] = s.gens;
                if (name == "quadratic-homogeneity") job["matrices"] = read_json_file(s.file);
                if (name == "finite-group-invariants" || name == "iit" || name == "orbit-sep") {
                    job["group"] = read_json_file(s.file);
                    job["cap"] = s.cap;
                }
                if (name == "closure" || name == "homogeneity") job["stage_budget"] = s.stage_budget;
                if (name == "polarize" || name == "homogeneity" || name == "kns") job["k"] = s.k;
                if (name == "homogeneity") job["degree_bound"] = s.degree_bound;
                if (name == "finite-group-invariants" || name == "iit")
                    job["degree_bound"] = s.degree_bound;
                if (name == "homogeneity" || name == "iit" || name == "kns" || name == "orbit-sep")
                    job["trials"] = s.trials;
                if (name == "separating-generates")
                    job["separating_asserted"] = s.separating_asserted;
                if (name == "clifford") {
                    job["m"] = s.m;
                    job["l"] = s.l;
                }
                if (name == "schur-ratios") {
                    job["n"] = s.n;
                    job["degree"] = s.degree;
                }
            }
            return run(std::move(job), s.common);
        } catch (const lapalg::input_error& e) {
            std::cerr << "error: " << e.what() << std::endl;
            return 2;
        } catch (const json::exception& e) {
            std::cerr << "error: " << e.what() << std::endl;
            return 2;
        }
    }
    return 2;
}
