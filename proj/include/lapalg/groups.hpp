#ifndef LAPALG_GROUPS_HPP
#define LAPALG_GROUPS_HPP

#include <cstdint>
#include <vector>

#include "lapalg/laplacian.hpp"
#include "lapalg/linalg.hpp"
#include "lapalg/polynomial.hpp"

namespace lapalg {

// Finite subgroup of O(n) with exact rational entries: closed under products
// and inverses, contains the identity; every element satisfies M^T M = I.
struct FiniteGroup {
    int dim = 0;
    std::vector<QMatrix> elements;

    std::size_t order() const { return elements.size(); }
};

// Breadth-first closure of the generated group; throws when the element count
// exceeds `cap` (the usual signal of an infinite group, e.g. a rational
// rotation of infinite order).
FiniteGroup group_closure(const std::vector<QMatrix>& generators, int cap = 10000);

// f(Mx)
Polynomial compose_linear(const Polynomial& f, const QMatrix& M);

// Group average of f; exactly invariant.
Polynomial reynolds(const FiniteGroup& G, const Polynomial& f);

// Reynolds averages of all monomials of degree 1..degree_bound, pruned
// greedily (by degree, then canonical order) to algebra generators via the
// membership oracle. degree_bound <= 0 uses |G|.
std::vector<Polynomial> reynolds_invariant_basis(const FiniteGroup& G, int degree_bound = 0,
                                                 GroebnerBudget budget = {});

// Inverse-invariant-theory check: the invariant algebra of a finite group is
// Laplacian and has transcendence degree dim(V). Reports both halves.
struct IitReport {
    std::vector<Polynomial> generators;  // Reynolds generators (plus r^2 for the check)
    LaplacianReport laplacian;
    int trdeg = 0;
    bool pass = false;
};

IitReport iit_pipeline(const FiniteGroup& G, int degree_bound = 0, int trials = 5,
                       std::uint64_t seed = 0, GroebnerBudget budget = {});

// Sampling falsification of "S separates G-orbits": points come from a small
// integer grid plus seeded random draws; any two points with equal S-values
// must lie on one orbit.
struct OrbitSepReport {
    bool counterexample = false;
    std::vector<Rational> point_a, point_b;  // meaningful when counterexample
    int points_tested = 0;
};

OrbitSepReport orbit_separation_sample(const FiniteGroup& G, const std::vector<Polynomial>& S,
                                       int trials = 32, std::uint64_t seed = 0);

// Gradient-span sampling for the k normal spaces condition: stacks the
// gradients of the generators at k random points and records the rank.
// HOLDS once rank dim(V) is observed (a generic success is conclusive up to
// the probabilistic nature of sampling, which the report states).
struct KnsReport {
    int k = 0;
    int trials = 0;
    int dim = 0;
    int max_rank = 0;
    bool holds = false;  // max_rank == dim observed
};

KnsReport kns_check(const std::vector<Polynomial>& A_gens, int k, int trials = 5,
                    std::uint64_t seed = 0);

}  // namespace lapalg

#endif
