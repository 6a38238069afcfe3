#ifndef LAPALG_JORDAN_HPP
#define LAPALG_JORDAN_HPP

#include <optional>
#include <vector>

#include "lapalg/linalg.hpp"
#include "lapalg/polynomial.hpp"

namespace lapalg {

// M . N = (MN + NM)/2 on symmetric matrices.
QMatrix jordan_product(const QMatrix& M, const QMatrix& N);

// Linear span of n x n matrices with decidable membership; wraps RowSpan over
// row-major vectorization.
class MatrixSpan {
public:
    explicit MatrixSpan(int n) : n_(n), span_(n * n) {}

    int matrix_size() const { return n_; }
    int dim() const { return span_.dim(); }
    const std::vector<QMatrix>& basis() const { return basis_; }
    bool contains(const QMatrix& m) const;
    bool insert(const QMatrix& m);  // true if the span grew

private:
    int n_;
    RowSpan span_;
    std::vector<QMatrix> basis_;
};

// Smallest Jordan subalgebra of Sym^2 containing S and the identity.
MatrixSpan jordan_closure(const std::vector<QMatrix>& S);

// Span of all products of matrices in J; requires the identity in J.
MatrixSpan enveloping_algebra(const MatrixSpan& J);

struct QuadraticHomogeneityReport {
    bool homogeneous = false;
    std::optional<QMatrix> witness;  // symmetric element of U outside J
    int jordan_dim = 0;
    int enveloping_dim = 0;
    int symmetric_enveloping_dim = 0;
};

// Remark-style homogeneity test for quadratically generated Laplacian
// algebras: homogeneous iff every symmetric matrix of the enveloping algebra
// U of J = jordan_closure(S) already lies in J.
QuadraticHomogeneityReport quadratic_homogeneity_test(const std::vector<QMatrix>& S);

// Symmetric matrices P_0..P_m of size 2l with P_i^2 = I and
// P_i P_j = -P_j P_i for i != j.
struct CliffordSystem {
    int m = 0;
    int l = 0;
    std::vector<QMatrix> mats;
};

// Built-in representations for m <= 4 (sizes 2, 4, 8, 16); l may be any
// multiple of the table size (padding by blocks). The constructor re-verifies
// the defining relations.
CliffordSystem clifford_system(int m, int l = 0);

// {r^2, f_0, ..., f_m} with f_i(x) = <P_i x, x>.
std::vector<Polynomial> clifford_foliation_generators(const CliffordSystem& c);

// Hess(f)/2 of a quadratic form, and its inverse.
QMatrix quadratic_form_matrix(const Polynomial& f);
Polynomial quadratic_form_poly(const QMatrix& M);

}  // namespace lapalg

#endif
