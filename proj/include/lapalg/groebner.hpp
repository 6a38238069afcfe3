#ifndef LAPALG_GROEBNER_HPP
#define LAPALG_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "lapalg/polynomial.hpp"
#include "lapalg/term_order.hpp"

namespace lapalg {

// Step budget for Buchberger and normal-form computations. One step is
// roughly one term operation inside a polynomial merge; exceeding the budget
// throws budget_error so a verdict is never silently wrong.
struct GroebnerBudget {
    std::uint64_t max_steps = 25'000'000;
};

struct GroebnerBasis {
    int nvars = 0;
    TermOrder order;
    std::vector<Polynomial> input;
    std::vector<Polynomial> basis;  // reduced, monic, sorted descending by leading monomial

    // Weight-truncated bases (homogeneous ideals only): elements above the
    // truncation weight are omitted; normal forms are valid for queries of
    // weight <= truncation_weight.
    std::vector<long> weights;   // empty when not truncated
    long truncation_weight = -1;
};

// Reduced Groebner basis of the ideal generated by `gens`.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const TermOrder& order,
                             const GroebnerBudget& budget = {});

// Truncated variant for ideals generated by weight-homogeneous polynomials:
// computes exactly the part of the reduced basis of weight <= max_weight.
GroebnerBasis groebner_basis_truncated(const std::vector<Polynomial>& gens, const TermOrder& order,
                                       const std::vector<long>& weights, long max_weight,
                                       const GroebnerBudget& budget = {});

// Full normal form of f against gb.basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb,
                       const GroebnerBudget& budget = {});

}  // namespace lapalg

#endif
