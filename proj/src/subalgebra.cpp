#include "lapalg/subalgebra.hpp"

#include "lapalg/errors.hpp"
#include "lapalg/linalg.hpp"
#include "lapalg/rng.hpp"

namespace lapalg {

namespace {

Polynomial embed_front(const Polynomial& p, int total) {
    Polynomial out(total);
    for (const auto& [m, c] : p.terms()) {
        Monomial mm(total);
        for (int i = 0; i < m.nvars(); ++i) mm.e[i] = m.e[i];
        out.add_term(mm, c);
    }
    return out;
}

}  // namespace

SubalgebraPresentation::SubalgebraPresentation(int nvars, std::vector<Polynomial> generators,
                                               GroebnerBudget budget)
    : nvars_(nvars), gens_(std::move(generators)), budget_(budget) {
    if (gens_.empty()) throw input_error("subalgebra presentation needs at least one generator");
    all_homogeneous_ = true;
    for (const Polynomial& g : gens_) {
        if (g.nvars() != nvars_)
            throw input_error("subalgebra generator has wrong variable count");
        if (g.is_constant()) throw input_error("subalgebra generators must be nonconstant");
        if (!is_homogeneous(g)) all_homogeneous_ = false;
    }
    if (all_homogeneous_) {
        weights_.assign(nvars_, 1);
        for (const Polynomial& g : gens_) weights_.push_back(g.degree());
    }
}

std::vector<Polynomial> SubalgebraPresentation::graph_polynomials() const {
    int m = static_cast<int>(gens_.size());
    int total = nvars_ + m;
    std::vector<Polynomial> out;
    out.reserve(gens_.size());
    for (int j = 0; j < m; ++j) {
        Polynomial g = embed_front(gens_[j], total);
        g -= Polynomial::variable(total, nvars_ + j);
        out.push_back(std::move(g));
    }
    return out;
}

const GroebnerBasis& SubalgebraPresentation::basis_for_degree(long degree) const {
    auto it = truncated_.lower_bound(degree);
    if (it != truncated_.end()) return it->second;
    TermOrder order = TermOrder::elimination({nvars_, static_cast<int>(gens_.size())});
    GroebnerBasis gb = groebner_basis_truncated(graph_polynomials(), order, weights_, degree, budget_);
    return truncated_.emplace(degree, std::move(gb)).first->second;
}

const GroebnerBasis& SubalgebraPresentation::full_basis() const {
    if (!full_) {
        TermOrder order = TermOrder::elimination({nvars_, static_cast<int>(gens_.size())});
        full_ = groebner_basis(graph_polynomials(), order, budget_);
    }
    return *full_;
}

MembershipResult SubalgebraPresentation::membership(const Polynomial& f) const {
    if (f.nvars() != nvars_) throw input_error("membership query has wrong variable count");
    int m = static_cast<int>(gens_.size());
    if (f.is_zero()) return {true, Polynomial(m)};

    const GroebnerBasis& gb =
        all_homogeneous_ ? basis_for_degree(f.degree()) : full_basis();
    Polynomial nf = normal_form(embed_front(f, nvars_ + m), gb, budget_);

    for (const auto& [mono, c] : nf.terms())
        for (int i = 0; i < nvars_; ++i)
            if (mono.e[i] > 0) return {false, Polynomial(m)};

    // Contract the y-only normal form to the generator space.
    Polynomial witness(m);
    for (const auto& [mono, c] : nf.terms()) {
        Monomial w(m);
        for (int j = 0; j < m; ++j) w.e[j] = mono.e[nvars_ + j];
        witness.add_term(w, c);
    }
    if (substitute(witness, gens_) != f)
        throw std::logic_error("membership witness failed re-substitution");
    return {true, witness};
}

int transcendence_degree(const SubalgebraPresentation& p, int trials, std::uint64_t seed) {
    if (trials < 1) throw input_error("transcendence_degree needs trials >= 1");
    int n = p.nvars();
    int m = static_cast<int>(p.generators().size());
    int best = 0;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<Rational> point = rng.int_point(n, -10000, 10000);
        QMatrix jac(m, n);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < n; ++i)
                jac.at(j, i) = evaluate(derivative(p.generators()[j], i), point);
        best = std::max(best, rank(std::move(jac)));
        if (best == std::min(m, n)) break;  // cannot grow further
    }
    return best;
}

}  // namespace lapalg
