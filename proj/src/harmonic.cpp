#include "lapalg/harmonic.hpp"

#include "lapalg/errors.hpp"
#include "lapalg/linalg.hpp"

namespace lapalg {

Rational sphere_moment(const Monomial& mono, int n) {
    if (n < 1) throw input_error("sphere_moment needs dimension >= 1");
    if (mono.nvars() != n) throw input_error("sphere_moment monomial has wrong length");
    long total = 0;
    for (int a : mono.e) {
        if (a % 2 != 0) return 0;
        total += a;
    }
    Integer num = 1;
    for (int a : mono.e) num *= double_factorial(a - 1);
    Integer den = 1;
    for (long s = 0; s < total; s += 2) den *= (n + s);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational sphere_inner(const Polynomial& p, const Polynomial& q) {
    if (p.nvars() != q.nvars()) throw input_error("sphere_inner variable count mismatch");
    Polynomial prod = p * q;
    Rational acc = 0;
    for (const auto& [m, c] : prod.terms()) acc += c * sphere_moment(m, prod.nvars());
    return acc;
}

namespace {

// Solves D(r^2 q) = rhs for q in R[V]_{deg}; the map is an isomorphism of the
// degree-`deg` homogeneous space.
Polynomial solve_cofactor(const Polynomial& rhs, int n, int deg) {
    std::vector<Monomial> basis = monomials_of_degree(n, deg);
    std::vector<Monomial> image_basis = basis;  // D(r^2 .) preserves the degree
    QMatrix A(static_cast<int>(image_basis.size()), static_cast<int>(basis.size()));
    Polynomial r2 = r_squared(n);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Polynomial img = laplacian(r2 * Polynomial::term(basis[j], 1));
        for (std::size_t i = 0; i < image_basis.size(); ++i)
            A.at(static_cast<int>(i), static_cast<int>(j)) = img.coeff(image_basis[i]);
    }
    std::vector<Rational> b(image_basis.size(), 0);
    for (std::size_t i = 0; i < image_basis.size(); ++i) b[i] = rhs.coeff(image_basis[i]);
    auto x = solve(A, b);
    if (!x) throw input_error("harmonic cofactor system is inconsistent");  // cannot happen
    Polynomial q(n);
    for (std::size_t j = 0; j < basis.size(); ++j) q.add_term(basis[j], (*x)[j]);
    return q;
}

}  // namespace

HarmonicSplit harmonic_decompose(const Polynomial& p) {
    long d = 0;
    if (!is_homogeneous(p, &d)) throw input_error("harmonic_decompose requires homogeneous input");
    HarmonicSplit split;
    if (p.is_zero()) {
        split.degree = 0;
        split.components.push_back(p);
        return split;
    }
    split.degree = d;
    int n = p.nvars();
    Polynomial current = p;
    for (long i = 0; i <= d / 2; ++i) {
        long deg_i = d - 2 * i;
        if (deg_i <= 1) {
            split.components.push_back(current);  // degree 0 or 1 is harmonic
            current = Polynomial(n);
            continue;
        }
        Polynomial lap = laplacian(current);
        if (lap.is_zero()) {
            split.components.push_back(current);
            current = Polynomial(n);
            continue;
        }
        Polynomial q = solve_cofactor(lap, n, static_cast<int>(deg_i) - 2);
        split.components.push_back(current - r_squared(n) * q);
        current = q;
    }
    return split;
}

std::vector<Polynomial> harmonic_basis(int n, int d) {
    if (n < 1 || d < 0) throw input_error("harmonic_basis needs n >= 1, d >= 0");
    std::vector<Monomial> basis = monomials_of_degree(n, d);
    if (d <= 1) {
        std::vector<Polynomial> out;
        for (const Monomial& m : basis) out.push_back(Polynomial::term(m, 1));
        return out;
    }
    std::vector<Monomial> image = monomials_of_degree(n, d - 2);
    QMatrix A(static_cast<int>(image.size()), static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Polynomial img = laplacian(Polynomial::term(basis[j], 1));
        for (std::size_t i = 0; i < image.size(); ++i)
            A.at(static_cast<int>(i), static_cast<int>(j)) = img.coeff(image[i]);
    }
    std::vector<Polynomial> out;
    for (const auto& v : nullspace(A)) {
        Polynomial h(n);
        for (std::size_t j = 0; j < basis.size(); ++j) h.add_term(basis[j], v[j]);
        out.push_back(normalize_generator(h));
    }
    return out;
}

SchurRatios schur_ratios(int degree, int dim) {
    if (degree < 0 || dim < 2) throw input_error("schur_ratios needs degree >= 0, dim >= 2");
    SchurRatios out;
    out.degree = degree;
    out.dim = dim;
    Polynomial r2 = r_squared(dim);
    for (int i = 0; i <= degree / 2; ++i) {
        std::vector<Polynomial> basis = harmonic_basis(dim, degree - 2 * i);
        if (basis.empty()) throw input_error("empty harmonic space");  // cannot happen for dim >= 2
        Polynomial elem = pow(r2, static_cast<unsigned int>(i)) * basis.front();
        Rational l2 = sphere_inner(elem, elem);
        Rational ap = apolar_inner(elem, elem);
        out.ratios.push_back(l2 / ap);
    }
    return out;
}

}  // namespace lapalg
