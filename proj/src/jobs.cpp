#include "lapalg/jobs.hpp"

#include <algorithm>
#include <vector>

#include "lapalg/errors.hpp"
#include "lapalg/groups.hpp"
#include "lapalg/harmonic.hpp"
#include "lapalg/jordan.hpp"
#include "lapalg/laplacian.hpp"
#include "lapalg/parser.hpp"
#include "lapalg/polarization.hpp"
#include "lapalg/subalgebra.hpp"
#include "lapalg/version.hpp"

namespace lapalg {

namespace {

using nlohmann::json;

// ---- job field access ------------------------------------------------------

const json& require_field(const json& job, const std::string& key) {
    auto it = job.find(key);
    if (it == job.end()) throw input_error("job is missing required field '" + key + "'");
    return *it;
}

long get_int(const json& job, const std::string& key, long fallback) {
    auto it = job.find(key);
    if (it == job.end() || it->is_null()) return fallback;
    if (!it->is_number_integer()) throw input_error("job field '" + key + "' must be an integer");
    return it->get<long>();
}

bool get_bool(const json& job, const std::string& key, bool fallback) {
    auto it = job.find(key);
    if (it == job.end() || it->is_null()) return fallback;
    if (!it->is_boolean()) throw input_error("job field '" + key + "' must be a boolean");
    return it->get<bool>();
}

std::vector<std::string> string_list(const json& v, const std::string& key) {
    if (!v.is_array()) throw input_error("job field '" + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : v) {
        if (!item.is_string()) throw input_error("job field '" + key + "' must contain strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

// Parses a polynomial list; n < 0 infers the common ambient dimension from
// the largest variable index used anywhere in the list.
std::vector<Polynomial> parse_polys(const json& v, const std::string& key, long n) {
    std::vector<std::string> texts = string_list(v, key);
    if (texts.empty()) throw input_error("job field '" + key + "' must not be empty");
    int dim = static_cast<int>(n);
    if (dim < 0) {
        for (const std::string& t : texts)
            dim = std::max(dim, parse_polynomial(t, -1).nvars());
    }
    std::vector<Polynomial> out;
    for (const std::string& t : texts) out.push_back(parse_polynomial(t, dim));
    return out;
}

Rational rational_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return make_rational(s);
        return make_rational(s.substr(0, slash), s.substr(slash + 1));
    }
    throw input_error("matrix entries must be integers or rational strings like \"1/2\"");
}

QMatrix matrix_from_json(const json& v) {
    if (!v.is_array() || v.empty()) throw input_error("matrix must be a nonempty array of rows");
    int rows = static_cast<int>(v.size());
    int cols = static_cast<int>(v[0].size());
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!v[i].is_array() || static_cast<int>(v[i].size()) != cols)
            throw input_error("matrix rows have inconsistent lengths");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rational_from_json(v[i][j]);
    }
    return m;
}

std::vector<QMatrix> matrices_from_json(const json& v, const std::string& key) {
    const json& list = v.is_object() && v.contains("generators") ? v["generators"] : v;
    if (!list.is_array() || list.empty())
        throw input_error("job field '" + key + "' must be a nonempty array of matrices");
    std::vector<QMatrix> out;
    for (const auto& item : list) out.push_back(matrix_from_json(item));
    return out;
}

// ---- report rendering ------------------------------------------------------

json poly_json(const Polynomial& p, const std::string& prefix = "x") {
    return to_string(p, prefix);
}

json polys_json(const std::vector<Polynomial>& ps) {
    json out = json::array();
    for (const Polynomial& p : ps) out.push_back(poly_json(p));
    return out;
}

json matrix_json(const QMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json rationals_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const Rational& x : v) out.push_back(to_string(x));
    return out;
}

json laplacian_report_json(const LaplacianReport& report, const std::vector<Polynomial>& S) {
    json out;
    out["verdict"] = to_string(report.verdict);
    out["conditional_on_separating"] = report.conditional;
    if (!report.diagnostic.empty()) out["diagnostic"] = report.diagnostic;
    json checks = json::array();
    for (const LapCheck& c : report.checks) {
        json jc;
        jc["kind"] = c.kind;
        jc["sources"] = c.sources;
        json src = json::array();
        for (int idx : c.sources) src.push_back(poly_json(S[idx]));
        jc["source_polynomials"] = src;
        jc["value"] = poly_json(c.value);
        jc["in"] = c.in;
        if (c.in) jc["witness"] = to_string(c.witness, "g");
        checks.push_back(jc);
    }
    out["checks"] = checks;
    out["failing"] = report.failing;
    return out;
}

json closure_trace_json(const ClosureTrace& trace) {
    json out;
    out["stabilized"] = trace.stabilized;
    out["stage_budget"] = trace.stage_budget;
    json stages = json::array();
    for (const auto& stage : trace.stages) stages.push_back(polys_json(stage));
    out["stages"] = stages;
    return out;
}

json kns_json(const KnsReport& r) {
    json out;
    out["k"] = r.k;
    out["trials"] = r.trials;
    out["dim"] = r.dim;
    out["max_rank"] = r.max_rank;
    out["verdict"] = r.holds ? "HOLDS" : "NOT_OBSERVED";
    out["note"] = "sampling result: HOLDS is conclusive for generic points, "
                  "NOT_OBSERVED is evidence only";
    return out;
}

struct Ctx {
    json job;
    long seed = 0;
    GroebnerBudget budget;
    json inputs = json::object();
    json params = json::object();
};

json finish(const std::string& command, Ctx& ctx, json result, int exit_code = 0) {
    json report;
    report["command"] = command;
    report["version"] = kVersion;
    report["seed"] = ctx.seed;
    report["inputs"] = ctx.inputs;
    report["params"] = ctx.params;
    report["result"] = std::move(result);
    report["exit_code"] = exit_code;
    return report;
}

int verdict_exit(const LaplacianReport& r) {
    return r.verdict == LapVerdict::Indeterminate ? 3 : 0;
}

// ---- command handlers ------------------------------------------------------

JobOutcome cmd_check_laplacian(Ctx& ctx, const std::string& command, bool separating) {
    std::vector<Polynomial> S =
        parse_polys(require_field(ctx.job, "polynomials"), "polynomials", get_int(ctx.job, "n", -1));
    ctx.inputs["n"] = S.front().nvars();
    ctx.inputs["polynomials"] = polys_json(S);
    LaplacianReport report;
    if (separating) {
        bool asserted = get_bool(ctx.job, "separating_asserted", false);
        ctx.params["separating_asserted"] = asserted;
        report = separating_generates_verdict(S, asserted, ctx.budget);
    } else {
        report = is_laplacian_system(S, ctx.budget);
    }
    json result = laplacian_report_json(report, S);
    if (separating) {
        std::string interp;
        if (report.verdict == LapVerdict::Laplacian)
            interp = "S generates the full basic/invariant algebra";
        else if (report.verdict == LapVerdict::NotLaplacian)
            interp = "S does not generate the basic/invariant algebra";
        else
            interp = "no verdict (budget)";
        if (report.conditional)
            interp += " [CAVEAT: separating property not asserted; verdict is conditional on S "
                      "being a (local) separating set]";
        result["interpretation"] = interp;
    }
    return {finish(command, ctx, std::move(result), verdict_exit(report)), verdict_exit(report)};
}

JobOutcome cmd_closure(Ctx& ctx) {
    std::vector<Polynomial> S =
        parse_polys(require_field(ctx.job, "polynomials"), "polynomials", get_int(ctx.job, "n", -1));
    int stage_budget = static_cast<int>(get_int(ctx.job, "stage_budget", 16));
    ctx.inputs["n"] = S.front().nvars();
    ctx.inputs["polynomials"] = polys_json(S);
    ctx.params["stage_budget"] = stage_budget;
    ClosureTrace trace = laplacian_closure(S, stage_budget, ctx.budget);
    json result = closure_trace_json(trace);
    int code = trace.stabilized ? 0 : 3;
    return {finish("closure", ctx, std::move(result), code), code};
}

JobOutcome cmd_decompose_harmonic(Ctx& ctx) {
    long n = get_int(ctx.job, "n", -1);
    Polynomial p = parse_polynomial(require_field(ctx.job, "polynomial").get<std::string>(),
                                    static_cast<int>(n));
    ctx.inputs["n"] = p.nvars();
    ctx.inputs["polynomial"] = poly_json(p);
    HarmonicSplit split = harmonic_decompose(p);
    json result;
    result["degree"] = split.degree;
    json comps = json::array();
    for (std::size_t i = 0; i < split.components.size(); ++i) {
        json c;
        c["i"] = i;
        c["component_degree"] = split.degree - 2 * static_cast<long>(i);
        c["harmonic_part"] = poly_json(split.components[i]);
        comps.push_back(c);
    }
    result["components"] = comps;
    return {finish("decompose-harmonic", ctx, std::move(result)), 0};
}

JobOutcome cmd_membership(Ctx& ctx) {
    long n = get_int(ctx.job, "n", -1);
    std::vector<Polynomial> gens = parse_polys(require_field(ctx.job, "generators"), "generators", n);
    Polynomial f = parse_polynomial(require_field(ctx.job, "polynomial").get<std::string>(),
                                    gens.front().nvars());
    ctx.inputs["n"] = f.nvars();
    ctx.inputs["polynomial"] = poly_json(f);
    ctx.inputs["generators"] = polys_json(gens);
    SubalgebraPresentation algebra(f.nvars(), gens, ctx.budget);
    MembershipResult mr = algebra.membership(f);
    json result;
    result["verdict"] = mr.in ? "IN" : "OUT";
    if (mr.in) result["witness"] = to_string(mr.witness, "g");
    return {finish("membership", ctx, std::move(result)), 0};
}

JobOutcome cmd_polarize(Ctx& ctx) {
    long n = get_int(ctx.job, "n", -1);
    Polynomial f = parse_polynomial(require_field(ctx.job, "polynomial").get<std::string>(),
                                    static_cast<int>(n));
    int k = static_cast<int>(get_int(ctx.job, "k", 2));
    ctx.inputs["n"] = f.nvars();
    ctx.inputs["polynomial"] = poly_json(f);
    ctx.params["k"] = k;
    PolarizationFamily family = classical_polarizations(f, k);
    json result;
    result["source_degree"] = family.source_degree;
    result["layout"] = {{"base_dim", family.layout.base_dim}, {"copies", family.layout.copies}};
    json comps = json::array();
    for (const auto& [alpha, poly] : family.components) {
        json c;
        c["alpha"] = alpha;
        c["poly"] = poly_json(poly);
        comps.push_back(c);
    }
    result["components"] = comps;
    return {finish("polarize", ctx, std::move(result)), 0};
}

JobOutcome cmd_homogeneity(Ctx& ctx) {
    std::vector<Polynomial> gens =
        parse_polys(require_field(ctx.job, "polynomials"), "polynomials", get_int(ctx.job, "n", -1));
    int k = static_cast<int>(get_int(ctx.job, "k", 2));
    int degree_bound = static_cast<int>(get_int(ctx.job, "degree_bound", 4));
    int stage_budget = static_cast<int>(get_int(ctx.job, "stage_budget", 16));
    int trials = static_cast<int>(get_int(ctx.job, "trials", 5));
    ctx.inputs["n"] = gens.front().nvars();
    ctx.inputs["polynomials"] = polys_json(gens);
    ctx.params["k"] = k;
    ctx.params["degree_bound"] = degree_bound;
    ctx.params["stage_budget"] = stage_budget;
    ctx.params["trials"] = trials;
    HomogeneityReport report = homogeneity_compare(gens, k, degree_bound, stage_budget, ctx.budget);
    json result;
    result["verdict"] = to_string(report.verdict);
    result["degree_bound"] = report.degree_bound;
    if (report.witness) result["witness"] = poly_json(*report.witness);
    result["closure_stages"] = report.trace.stages.size();
    // The homogeneity theorem assumes the k-NS condition; report the sampling
    // evidence alongside the verdict.
    result["kns"] = kns_json(kns_check(gens, k, trials, static_cast<std::uint64_t>(ctx.seed)));
    return {finish("homogeneity", ctx, std::move(result)), 0};
}

JobOutcome cmd_quadratic_homogeneity(Ctx& ctx) {
    std::vector<QMatrix> mats = matrices_from_json(require_field(ctx.job, "matrices"), "matrices");
    json in = json::array();
    for (const QMatrix& m : mats) in.push_back(matrix_json(m));
    ctx.inputs["matrices"] = in;
    QuadraticHomogeneityReport report = quadratic_homogeneity_test(mats);
    json result;
    result["verdict"] = report.homogeneous ? "HOMOGENEOUS" : "INHOMOGENEOUS";
    result["jordan_dim"] = report.jordan_dim;
    result["enveloping_dim"] = report.enveloping_dim;
    result["symmetric_enveloping_dim"] = report.symmetric_enveloping_dim;
    if (report.witness) result["witness"] = matrix_json(*report.witness);
    return {finish("quadratic-homogeneity", ctx, std::move(result)), 0};
}

JobOutcome cmd_clifford(Ctx& ctx) {
    int m = static_cast<int>(get_int(ctx.job, "m", 1));
    int l = static_cast<int>(get_int(ctx.job, "l", 0));
    ctx.params["m"] = m;
    ctx.params["l"] = l;
    CliffordSystem sys = clifford_system(m, l);
    json result;
    result["m"] = sys.m;
    result["l"] = sys.l;
    json mats = json::array();
    for (const QMatrix& p : sys.mats) mats.push_back(matrix_json(p));
    result["matrices"] = mats;
    result["foliation_generators"] = polys_json(clifford_foliation_generators(sys));
    result["relations_verified"] = true;  // the constructor re-checks them
    return {finish("clifford", ctx, std::move(result)), 0};
}

FiniteGroup group_from_job(Ctx& ctx) {
    std::vector<QMatrix> gens = matrices_from_json(require_field(ctx.job, "group"), "group");
    int cap = static_cast<int>(get_int(ctx.job, "cap", 10000));
    ctx.params["cap"] = cap;
    json in = json::array();
    for (const QMatrix& m : gens) in.push_back(matrix_json(m));
    ctx.inputs["group_generators"] = in;
    return group_closure(gens, cap);
}

JobOutcome cmd_finite_group_invariants(Ctx& ctx) {
    FiniteGroup G = group_from_job(ctx);
    int degree_bound = static_cast<int>(get_int(ctx.job, "degree_bound", 0));
    ctx.params["degree_bound"] = degree_bound;
    std::vector<Polynomial> gens = reynolds_invariant_basis(G, degree_bound, ctx.budget);
    json result;
    result["group_order"] = G.order();
    result["generators"] = polys_json(gens);
    return {finish("finite-group-invariants", ctx, std::move(result)), 0};
}

JobOutcome cmd_iit(Ctx& ctx) {
    FiniteGroup G = group_from_job(ctx);
    int degree_bound = static_cast<int>(get_int(ctx.job, "degree_bound", 0));
    int trials = static_cast<int>(get_int(ctx.job, "trials", 5));
    ctx.params["degree_bound"] = degree_bound;
    ctx.params["trials"] = trials;
    IitReport report =
        iit_pipeline(G, degree_bound, trials, static_cast<std::uint64_t>(ctx.seed), ctx.budget);
    // the laplacian half ran on the generators plus r^2
    std::vector<Polynomial> with_r2 = report.generators;
    Polynomial r2 = r_squared(G.dim);
    if (std::find(with_r2.begin(), with_r2.end(), r2) == with_r2.end()) with_r2.push_back(r2);
    json result;
    result["group_order"] = G.order();
    result["generators"] = polys_json(report.generators);
    result["laplacian"] = laplacian_report_json(report.laplacian, with_r2);
    result["transcendence_degree"] = report.trdeg;
    result["dim"] = G.dim;
    result["pass"] = report.pass;
    int code = report.laplacian.verdict == LapVerdict::Indeterminate ? 3 : 0;
    return {finish("iit", ctx, std::move(result), code), code};
}

JobOutcome cmd_kns(Ctx& ctx) {
    std::vector<Polynomial> gens =
        parse_polys(require_field(ctx.job, "polynomials"), "polynomials", get_int(ctx.job, "n", -1));
    int k = static_cast<int>(get_int(ctx.job, "k", 1));
    int trials = static_cast<int>(get_int(ctx.job, "trials", 5));
    ctx.inputs["n"] = gens.front().nvars();
    ctx.inputs["polynomials"] = polys_json(gens);
    ctx.params["k"] = k;
    ctx.params["trials"] = trials;
    KnsReport report = kns_check(gens, k, trials, static_cast<std::uint64_t>(ctx.seed));
    return {finish("kns", ctx, kns_json(report)), 0};
}

JobOutcome cmd_orbit_sep(Ctx& ctx) {
    FiniteGroup G = group_from_job(ctx);
    std::vector<Polynomial> S =
        parse_polys(require_field(ctx.job, "polynomials"), "polynomials", G.dim);
    int trials = static_cast<int>(get_int(ctx.job, "trials", 32));
    ctx.inputs["polynomials"] = polys_json(S);
    ctx.params["trials"] = trials;
    OrbitSepReport report = orbit_separation_sample(G, S, trials, static_cast<std::uint64_t>(ctx.seed));
    json result;
    result["verdict"] = report.counterexample ? "COUNTEREXAMPLE" : "NO_COUNTEREXAMPLE";
    result["points_tested"] = report.points_tested;
    if (report.counterexample) {
        result["point_a"] = rationals_json(report.point_a);
        result["point_b"] = rationals_json(report.point_b);
    }
    return {finish("orbit-sep", ctx, std::move(result)), 0};
}

JobOutcome cmd_schur_ratios(Ctx& ctx) {
    int n = static_cast<int>(get_int(ctx.job, "n", 2));
    int degree = static_cast<int>(get_int(ctx.job, "degree", 2));
    ctx.params["n"] = n;
    ctx.params["degree"] = degree;
    SchurRatios ratios = schur_ratios(degree, n);
    json result;
    result["degree"] = ratios.degree;
    result["dim"] = ratios.dim;
    result["ratios"] = rationals_json(ratios.ratios);
    result["normalization"] = "sphere integrals divided by total measure";
    return {finish("schur-ratios", ctx, std::move(result)), 0};
}

}  // namespace

JobOutcome run_job(const nlohmann::json& job) {
    if (!job.is_object()) throw input_error("job must be a JSON object");
    std::string command = require_field(job, "command").get<std::string>();

    Ctx ctx;
    ctx.job = job;
    ctx.seed = get_int(job, "seed", 0);
    long budget = get_int(job, "groebner_budget", 0);
    if (budget > 0) ctx.budget.max_steps = static_cast<std::uint64_t>(budget);

    if (command == "check-laplacian") return cmd_check_laplacian(ctx, command, false);
    if (command == "separating-generates") return cmd_check_laplacian(ctx, command, true);
    if (command == "closure") return cmd_closure(ctx);
    if (command == "decompose-harmonic") return cmd_decompose_harmonic(ctx);
    if (command == "membership") return cmd_membership(ctx);
    if (command == "polarize") return cmd_polarize(ctx);
    if (command == "homogeneity") return cmd_homogeneity(ctx);
    if (command == "quadratic-homogeneity") return cmd_quadratic_homogeneity(ctx);
    if (command == "clifford") return cmd_clifford(ctx);
    if (command == "finite-group-invariants") return cmd_finite_group_invariants(ctx);
    if (command == "iit") return cmd_iit(ctx);
    if (command == "kns") return cmd_kns(ctx);
    if (command == "orbit-sep") return cmd_orbit_sep(ctx);
    if (command == "schur-ratios") return cmd_schur_ratios(ctx);
    throw input_error("unknown command '" + command + "'");
}

}  // namespace lapalg
