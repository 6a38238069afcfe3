#ifndef LAPALG_HARMONIC_HPP
#define LAPALG_HARMONIC_HPP

#include <vector>

#include "lapalg/polynomial.hpp"

namespace lapalg {

// The split f = sum_i r^{2i} h_i of a homogeneous f of degree d, with each
// component h_i harmonic and homogeneous of degree d - 2i.
struct HarmonicSplit {
    long degree = 0;
    std::vector<Polynomial> components;  // index i = 0 .. d/2, possibly zero
};

// Normalized moment of a monomial over the unit sphere: the integral divided
// by total sphere measure, which is rational. Zero when any exponent is odd;
// otherwise prod_i (a_i - 1)!! / (n (n+2) ... (n + |a| - 2)).
Rational sphere_moment(const Monomial& mono, int n);

// Normalized L^2 pairing over the unit sphere.
Rational sphere_inner(const Polynomial& p, const Polynomial& q);

// Exact split via the linear system D(r^2 q) = D(p), recursing on q.
HarmonicSplit harmonic_decompose(const Polynomial& p);

// Basis of the harmonic subspace of degree d in n variables, deterministic.
std::vector<Polynomial> harmonic_basis(int n, int d);

// Per-summand ratios (normalized L^2 norm) / (apolar norm) on r^{2i} H_{d-2i};
// the ratio is independent of the chosen element, which the tests verify.
struct SchurRatios {
    int degree = 0;
    int dim = 0;
    std::vector<Rational> ratios;
};

SchurRatios schur_ratios(int degree, int dim);

}  // namespace lapalg

#endif
