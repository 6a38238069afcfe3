#ifndef LAPALG_SUBALGEBRA_HPP
#define LAPALG_SUBALGEBRA_HPP

#include <map>
#include <optional>
#include <vector>

#include "lapalg/groebner.hpp"
#include "lapalg/polynomial.hpp"

namespace lapalg {

struct MembershipResult {
    bool in = false;
    // Expression of the query in the generators, as a polynomial over m
    // generator variables; re-substituting the generators reproduces the
    // query exactly (verified before returning IN). Meaningful only when in.
    Polynomial witness;
};

// Finitely generated subalgebra of Q[x1..xn] with an exact membership oracle:
// normal form modulo the tag ideal <y_j - g_j(x)> under an elimination order
// with the x block above the y block. f lies in the subalgebra iff its normal
// form involves only y variables.
class SubalgebraPresentation {
public:
    SubalgebraPresentation(int nvars, std::vector<Polynomial> generators,
                           GroebnerBudget budget = {});

    int nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool all_homogeneous() const { return all_homogeneous_; }
    const GroebnerBudget& budget() const { return budget_; }

    // Exact verdict; throws budget_error (INDETERMINATE) if the Groebner
    // budget runs out, never returns a wrong verdict.
    MembershipResult membership(const Polynomial& f) const;

private:
    int nvars_;
    std::vector<Polynomial> gens_;
    GroebnerBudget budget_;
    bool all_homogeneous_;
    std::vector<long> weights_;  // x -> 1, y_j -> deg g_j (homogeneous case)

    // Lazily cached Groebner data; computed once, then read-only.
    mutable std::map<long, GroebnerBasis> truncated_;
    mutable std::optional<GroebnerBasis> full_;

    std::vector<Polynomial> graph_polynomials() const;
    const GroebnerBasis& basis_for_degree(long degree) const;
    const GroebnerBasis& full_basis() const;
};

// Maximal Jacobian rank of the generators over `trials` random integer points
// (box [-10^4, 10^4]); equals the transcendence degree of the generated field
// at generic points. Deterministic for a fixed seed.
int transcendence_degree(const SubalgebraPresentation& p, int trials = 5, std::uint64_t seed = 0);

}  // namespace lapalg

#endif
