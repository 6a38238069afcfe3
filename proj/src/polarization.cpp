#include "lapalg/polarization.hpp"

#include <algorithm>
#include <map>

#include "lapalg/errors.hpp"

namespace lapalg {

int MultiVariableLayout::var(int copy, int coord) const {
    if (copy < 1 || copy > copies) throw input_error("copy index out of range");
    if (coord < 1 || coord > base_dim) throw input_error("coordinate index out of range");
    return (copy - 1) * base_dim + (coord - 1);
}

Polynomial embed_in_copy(const Polynomial& f, const MultiVariableLayout& layout, int copy) {
    if (f.nvars() != layout.base_dim) throw input_error("embed_in_copy dimension mismatch");
    if (copy < 1 || copy > layout.copies) throw input_error("copy index out of range");
    Polynomial out(layout.total());
    for (const auto& [m, c] : f.terms()) {
        Monomial mm(layout.total());
        for (int a = 0; a < layout.base_dim; ++a) mm.e[layout.var(copy, a + 1)] = m.e[a];
        out.add_term(mm, c);
    }
    return out;
}

Polynomial pair_inner(const MultiVariableLayout& layout, int i, int j) {
    Polynomial out(layout.total());
    for (int a = 1; a <= layout.base_dim; ++a) {
        Monomial m(layout.total());
        m.e[layout.var(i, a)] += 1;
        m.e[layout.var(j, a)] += 1;
        out.add_term(m, 1);
    }
    return out;
}

PolarizationFamily classical_polarizations(const Polynomial& f, int k) {
    long d = 0;
    if (!is_homogeneous(f, &d) || d < 1)
        throw input_error("classical_polarizations requires homogeneous input of degree >= 1");
    if (k < 1) throw input_error("classical_polarizations needs k >= 1");
    int n = f.nvars();
    MultiVariableLayout layout{n, k};

    // Work in s-variables (first k slots) followed by the layout variables;
    // substitute x_a -> sum_i s_i x_i^a and split off the s-exponents.
    int total = k + layout.total();
    std::vector<Polynomial> images;
    images.reserve(n);
    for (int a = 1; a <= n; ++a) {
        Polynomial img(total);
        for (int i = 1; i <= k; ++i) {
            Monomial m(total);
            m.e[i - 1] += 1;
            m.e[k + layout.var(i, a)] += 1;
            img.add_term(m, 1);
        }
        images.push_back(std::move(img));
    }
    Polynomial expanded = substitute(f, images);

    std::map<std::vector<int>, Polynomial> buckets;
    for (const auto& [m, c] : expanded.terms()) {
        std::vector<int> alpha(m.e.begin(), m.e.begin() + k);
        Monomial rest(layout.total());
        for (int v = 0; v < layout.total(); ++v) rest.e[v] = m.e[k + v];
        auto [it, fresh] = buckets.emplace(std::move(alpha), Polynomial(layout.total()));
        it->second.add_term(rest, c);
    }

    PolarizationFamily family;
    family.source_degree = d;
    family.layout = layout;
    for (auto& [alpha, poly] : buckets) family.components.emplace_back(alpha, std::move(poly));
    std::sort(family.components.begin(), family.components.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return family;
}

Polynomial polarization_operator(const Polynomial& H, const MultiVariableLayout& layout, int i,
                                 int j) {
    if (H.nvars() != layout.total()) throw input_error("polarization_operator layout mismatch");
    Polynomial out(layout.total());
    for (int a = 1; a <= layout.base_dim; ++a) {
        Polynomial xi = Polynomial::variable(layout.total(), layout.var(i, a));
        out += xi * derivative(H, layout.var(j, a));
    }
    return out;
}

Polynomial wallach_operator(const Polynomial& H, const MultiVariableLayout& layout,
                            const Polynomial& f, int i, int j) {
    if (H.nvars() != layout.total()) throw input_error("wallach_operator layout mismatch");
    if (f.nvars() != layout.base_dim) throw input_error("wallach_operator base dimension mismatch");
    if (!is_homogeneous(f)) throw input_error("wallach_operator requires homogeneous f");
    Polynomial out(layout.total());
    for (int a = 1; a <= layout.base_dim; ++a) {
        Polynomial grad_a = embed_in_copy(derivative(f, a - 1), layout, i);
        out += grad_a * derivative(H, layout.var(j, a));
    }
    return out;
}

GeneralizedPolarizations build_generalized_polarizations(const std::vector<Polynomial>& A_gens,
                                                         int k, int stage_budget,
                                                         GroebnerBudget budget) {
    if (A_gens.empty()) throw input_error("build_generalized_polarizations needs generators");
    if (k < 1) throw input_error("build_generalized_polarizations needs k >= 1");
    int n = A_gens.front().nvars();
    for (const Polynomial& g : A_gens)
        if (g.nvars() != n) throw input_error("generators live in different spaces");
    MultiVariableLayout layout{n, k};

    std::vector<Polynomial> seeds;
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j) seeds.push_back(pair_inner(layout, i, j));
    for (const Polynomial& g : A_gens) seeds.push_back(embed_in_copy(g, layout, 1));

    GeneralizedPolarizations out;
    out.layout = layout;
    out.trace = laplacian_closure(seeds, stage_budget, budget);
    out.generators = out.trace.stages.back();
    return out;
}

std::vector<Polynomial> restrict_to_first_factor(const std::vector<Polynomial>& gens,
                                                 const MultiVariableLayout& layout) {
    if (layout.copies < 2) throw input_error("restriction needs a layout with k >= 2");
    std::vector<Polynomial> images;
    images.reserve(layout.total());
    for (int i = 1; i <= layout.copies; ++i)
        for (int a = 1; a <= layout.base_dim; ++a)
            images.push_back(i == 1 ? Polynomial::variable(layout.base_dim, a - 1)
                                    : Polynomial(layout.base_dim));
    std::vector<Polynomial> out;
    for (const Polynomial& g : gens) {
        if (g.nvars() != layout.total()) throw input_error("restriction layout mismatch");
        Polynomial r = substitute(g, images);
        if (!r.is_zero()) out.push_back(std::move(r));
    }
    return out;
}

std::string to_string(HomogeneityVerdict v) {
    return v == HomogeneityVerdict::EqualUpToDegree ? "EQUAL_UP_TO_DEGREE" : "STRICTLY_FINER";
}

HomogeneityReport homogeneity_compare(const std::vector<Polynomial>& A_gens, int k,
                                      int degree_bound, int stage_budget, GroebnerBudget budget) {
    if (degree_bound < 2) throw input_error("homogeneity_compare needs degree_bound >= 2");
    if (k < 2) throw input_error("homogeneity_compare needs k >= 2");
    for (const Polynomial& g : A_gens)
        if (!is_homogeneous(g))
            throw input_error("homogeneity_compare requires homogeneous generators");

    GeneralizedPolarizations gp = build_generalized_polarizations(A_gens, k, stage_budget, budget);
    if (!gp.trace.stabilized)
        throw budget_error("generalized-polarization closure did not stabilize within " +
                           std::to_string(stage_budget) + " stages");

    HomogeneityReport report;
    report.degree_bound = degree_bound;
    report.k = k;
    report.trace = gp.trace;

    int n = A_gens.front().nvars();
    SubalgebraPresentation base(n, A_gens, budget);

    std::vector<Polynomial> restricted = restrict_to_first_factor(gp.generators, gp.layout);
    // Generators are enough: both sides are algebras, so degree-bounded
    // mutual inclusion reduces to membership of each other's generators.
    for (const Polynomial& r : restricted) {
        if (r.degree() > degree_bound) continue;
        if (!base.membership(r).in) {
            report.verdict = HomogeneityVerdict::StrictlyFiner;
            report.witness = r;
            return report;
        }
    }
    SubalgebraPresentation restricted_alg(n, restricted, budget);
    for (const Polynomial& g : A_gens) {
        if (g.degree() > degree_bound) continue;
        if (!restricted_alg.membership(g).in)
            throw std::logic_error("restriction of A^(k) lost a generator of A");
    }
    report.verdict = HomogeneityVerdict::EqualUpToDegree;
    return report;
}

}  // namespace lapalg
