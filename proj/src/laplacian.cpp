#include "lapalg/laplacian.hpp"

#include <algorithm>

#include "lapalg/errors.hpp"

namespace lapalg {

std::string to_string(LapVerdict v) {
    switch (v) {
        case LapVerdict::Laplacian: return "LAPLACIAN";
        case LapVerdict::NotLaplacian: return "NOT_LAPLACIAN";
        case LapVerdict::Indeterminate: return "INDETERMINATE";
    }
    return "INDETERMINATE";
}

namespace {

void require_r_squared(const std::vector<Polynomial>& S) {
    if (S.empty()) throw input_error("empty generator set");
    Polynomial r2 = r_squared(S.front().nvars());
    for (const Polynomial& f : S)
        if (f == r2) return;
    throw input_error("precondition violated: r^2 = " + to_string(r2) +
                      " is not an element of the generator set");
}

}  // namespace

LaplacianReport is_laplacian_system(const std::vector<Polynomial>& S, GroebnerBudget budget) {
    require_r_squared(S);
    int n = S.front().nvars();
    for (const Polynomial& f : S)
        if (f.nvars() != n) throw input_error("generators live in different spaces");

    LaplacianReport report;
    SubalgebraPresentation algebra(n, S, budget);
    try {
        for (std::size_t i = 0; i < S.size(); ++i) {
            LapCheck check;
            check.kind = "laplacian";
            check.sources = {static_cast<int>(i)};
            check.value = laplacian(S[i]);
            MembershipResult mr = algebra.membership(check.value);
            check.in = mr.in;
            check.witness = mr.witness;
            if (!check.in) report.failing.push_back(static_cast<int>(report.checks.size()));
            report.checks.push_back(std::move(check));
        }
        for (std::size_t i = 0; i < S.size(); ++i) {
            for (std::size_t j = i; j < S.size(); ++j) {
                LapCheck check;
                check.kind = "grad_pair";
                check.sources = {static_cast<int>(i), static_cast<int>(j)};
                check.value = grad_inner(S[i], S[j]);
                MembershipResult mr = algebra.membership(check.value);
                check.in = mr.in;
                check.witness = mr.witness;
                if (!check.in) report.failing.push_back(static_cast<int>(report.checks.size()));
                report.checks.push_back(std::move(check));
            }
        }
    } catch (const budget_error& e) {
        report.verdict = LapVerdict::Indeterminate;
        report.diagnostic = e.what();
        return report;
    }
    report.verdict = report.failing.empty() ? LapVerdict::Laplacian : LapVerdict::NotLaplacian;
    return report;
}

ClosureTrace laplacian_closure(const std::vector<Polynomial>& S, int stage_budget,
                               GroebnerBudget budget) {
    if (stage_budget < 1) throw input_error("closure stage budget must be >= 1");
    if (S.empty()) throw input_error("empty generator set");
    int n = S.front().nvars();
    for (const Polynomial& f : S)
        if (f.nvars() != n) throw input_error("generators live in different spaces");

    // S_1 = S u {r^2}; generators are kept normalized and deduplicated.
    std::vector<Polynomial> stage;
    auto adjoin = [&stage](const Polynomial& p) {
        Polynomial q = normalize_generator(p);
        if (q.is_zero() || q.is_constant()) return false;
        if (std::find(stage.begin(), stage.end(), q) != stage.end()) return false;
        stage.push_back(std::move(q));
        return true;
    };
    for (const Polynomial& f : S) adjoin(f);
    adjoin(r_squared(n));
    if (stage.empty()) throw input_error("generator set contains no nonconstant polynomial");

    ClosureTrace trace;
    trace.stage_budget = stage_budget;
    trace.stages.push_back(stage);

    for (int l = 2; l <= stage_budget; ++l) {
        SubalgebraPresentation algebra(n, stage, budget);
        std::vector<Polynomial> candidates;
        for (const Polynomial& f : stage) candidates.push_back(laplacian(f));
        for (std::size_t i = 0; i < trace.stages.back().size(); ++i)
            for (std::size_t j = i; j < trace.stages.back().size(); ++j)
                candidates.push_back(grad_inner(trace.stages.back()[i], trace.stages.back()[j]));

        bool grew = false;
        try {
            for (const Polynomial& c : candidates) {
                Polynomial q = normalize_generator(c);
                if (q.is_zero() || q.is_constant()) continue;
                if (std::find(stage.begin(), stage.end(), q) != stage.end()) continue;
                if (algebra.membership(q).in) continue;
                stage.push_back(std::move(q));
                grew = true;
            }
        } catch (const budget_error& e) {
            throw budget_error("laplacian_closure stage " + std::to_string(l) +
                               " hit the membership budget: " + e.what());
        }
        if (!grew) {
            trace.stabilized = true;
            return trace;
        }
        trace.stages.push_back(stage);
    }
    trace.stabilized = false;
    return trace;
}

LaplacianReport separating_generates_verdict(const std::vector<Polynomial>& S,
                                             bool separating_asserted, GroebnerBudget budget) {
    LaplacianReport report = is_laplacian_system(S, budget);
    report.conditional = !separating_asserted;
    return report;
}

}  // namespace lapalg
