#ifndef LAPALG_LAPLACIAN_HPP
#define LAPALG_LAPLACIAN_HPP

#include <string>
#include <vector>

#include "lapalg/subalgebra.hpp"

namespace lapalg {

enum class LapVerdict { Laplacian, NotLaplacian, Indeterminate };

std::string to_string(LapVerdict v);

// One closure condition check: the Laplacian of a generator or the gradient
// pairing of a generator pair, tested for membership in the generated algebra.
struct LapCheck {
    std::string kind;          // "laplacian" or "grad_pair"
    std::vector<int> sources;  // indices into S (one or two)
    Polynomial value;          // the checked polynomial
    bool in = false;
    Polynomial witness;        // expression in the generators when in
};

struct LaplacianReport {
    LapVerdict verdict = LapVerdict::Indeterminate;
    std::vector<LapCheck> checks;
    std::vector<int> failing;  // indices into checks with a negative verdict
    std::string diagnostic;    // set for INDETERMINATE
    // separating_generates_verdict: set when the separating hypothesis was
    // not asserted, so the verdict is conditional.
    bool conditional = false;
};

// Decides whether the subalgebra generated by S is Laplacian by checking that
// every Delta f and every <grad f, grad g> (f, g in S) lies in it. Requires
// r^2 as an element of S, exactly.
LaplacianReport is_laplacian_system(const std::vector<Polynomial>& S, GroebnerBudget budget = {});

struct ClosureTrace {
    std::vector<std::vector<Polynomial>> stages;  // S_1 subset S_2 subset ...
    bool stabilized = false;
    int stage_budget = 0;
};

// Iterates S_1 = S u {r^2}; T_l = the Laplacians and gradient pairings of
// S_{l-1} that are not members of <S_{l-1}>; S_l = S_{l-1} u T_l. Stops when
// T_l is empty (stabilized: the final stage generates the Laplacian algebra
// generated by S) or when the stage budget is hit.
ClosureTrace laplacian_closure(const std::vector<Polynomial>& S, int stage_budget = 16,
                               GroebnerBudget budget = {});

// Same computation as is_laplacian_system, interpreted through the separating
// criterion: LAPLACIAN means S generates the full basic/invariant algebra.
// The caller asserts that S is (locally) separating; when not asserted, the
// report is marked conditional.
LaplacianReport separating_generates_verdict(const std::vector<Polynomial>& S,
                                             bool separating_asserted,
                                             GroebnerBudget budget = {});

}  // namespace lapalg

#endif
