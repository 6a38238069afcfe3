#ifndef LAPALG_POLARIZATION_HPP
#define LAPALG_POLARIZATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "lapalg/laplacian.hpp"
#include "lapalg/polynomial.hpp"
#include "lapalg/subalgebra.hpp"

namespace lapalg {

// k copies of an n-dimensional space; variable (copy i, coordinate a) sits at
// flat index (i-1)*n + (a-1), so copy 1 occupies the first n slots.
struct MultiVariableLayout {
    int base_dim = 0;  // n
    int copies = 0;    // k

    int total() const { return base_dim * copies; }
    int var(int copy, int coord) const;  // 1-based copy and coordinate
};

// f as a polynomial on V^k depending only on copy `copy`.
Polynomial embed_in_copy(const Polynomial& f, const MultiVariableLayout& layout, int copy);

// f_ij(v_1,...,v_k) = <v_i, v_j>
Polynomial pair_inner(const MultiVariableLayout& layout, int i, int j);

// The coefficients f_alpha of f(sum_i s_i v_i) = sum_alpha s^alpha f_alpha.
struct PolarizationFamily {
    long source_degree = 0;
    MultiVariableLayout layout;
    std::vector<std::pair<std::vector<int>, Polynomial>> components;  // sorted, alpha desc lex
};

PolarizationFamily classical_polarizations(const Polynomial& f, int k);

// P_ij H = sum_a x_i^a dH/dx_j^a
Polynomial polarization_operator(const Polynomial& H, const MultiVariableLayout& layout, int i,
                                 int j);

// Wallach operator: P^f_ij H = sum_a (d_a f)(x_i) dH/dx_j^a, f homogeneous on V.
Polynomial wallach_operator(const Polynomial& H, const MultiVariableLayout& layout,
                            const Polynomial& f, int i, int j);

// The generalized-polarization algebra A^(k): the Laplacian closure on V^k of
// the pairwise inner products together with A pulled back to the first copy.
struct GeneralizedPolarizations {
    MultiVariableLayout layout;
    ClosureTrace trace;
    std::vector<Polynomial> generators;  // final stage
};

GeneralizedPolarizations build_generalized_polarizations(const std::vector<Polynomial>& A_gens,
                                                         int k, int stage_budget = 16,
                                                         GroebnerBudget budget = {});

// Sets every copy beyond the first to zero; zero images are dropped.
std::vector<Polynomial> restrict_to_first_factor(const std::vector<Polynomial>& gens,
                                                 const MultiVariableLayout& layout);

enum class HomogeneityVerdict { EqualUpToDegree, StrictlyFiner };

std::string to_string(HomogeneityVerdict v);

struct HomogeneityReport {
    HomogeneityVerdict verdict = HomogeneityVerdict::EqualUpToDegree;
    int degree_bound = 0;
    int k = 0;
    // A restricted generator of A^(k) outside <A_gens>: the inhomogeneity
    // witness. Meaningful only for STRICTLY_FINER.
    std::optional<Polynomial> witness;
    ClosureTrace trace;
};

// Degree-bounded comparison of the restriction of A^(k) to the first factor
// against <A_gens>. EQUAL_UP_TO_DEGREE supports homogeneity (the restriction
// criterion); STRICTLY_FINER certifies inhomogeneity with a witness.
HomogeneityReport homogeneity_compare(const std::vector<Polynomial>& A_gens, int k,
                                      int degree_bound, int stage_budget = 16,
                                      GroebnerBudget budget = {});

}  // namespace lapalg

#endif
