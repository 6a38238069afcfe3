#ifndef LAPALG_POLYNOMIAL_HPP
#define LAPALG_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lapalg/monomial.hpp"
#include "lapalg/rational.hpp"

namespace lapalg {

// Sparse exact-rational multivariate polynomial. Terms are kept in descending
// graded-lex order and zero coefficients are never stored, so equal
// polynomials have identical representations and serialization is canonical.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDesc>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index);  // 0-based
    static Polynomial term(const Monomial& m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    long degree() const;  // -1 for the zero polynomial
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const;
    Rational constant_term() const;
    const Monomial& leading_monomial() const;  // grlex; throws on zero
    Rational leading_coefficient() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const;  // arbitrary total order for containers

private:
    int nvars_;
    TermMap terms_;
    void check_same_space(const Polynomial& o, const char* op) const;
};

Polynomial pow(const Polynomial& p, unsigned int e);

// r^2 = x1^2 + ... + xn^2
Polynomial r_squared(int nvars);

Polynomial derivative(const Polynomial& p, int var);  // 0-based index
Polynomial laplacian(const Polynomial& p);

// sum_i (dp/dx_i)(dq/dx_i)
Polynomial grad_inner(const Polynomial& p, const Polynomial& q);

// f_hat(g): replace each variable of f by the matching partial derivative and
// apply the resulting operator to g.
Polynomial apply_dual(const Polynomial& f, const Polynomial& g);

// Apolar pairing of two homogeneous polynomials of equal degree. Computed via
// the orthogonal monomial basis (|x^a|^2 = a!); apply_dual gives the same
// value and the tests cross-check the two routes.
Rational apolar_inner(const Polynomial& p, const Polynomial& q);

bool is_homogeneous(const Polynomial& p, long* degree_out = nullptr);
std::vector<std::pair<long, Polynomial>> homogeneous_components(const Polynomial& p);

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);

// Substitutes images[i] for variable i; all images share one ambient space.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

// Divides out the coefficient content and makes the leading coefficient
// positive; identity on the zero polynomial.
Polynomial normalize_generator(const Polynomial& p);

// Canonical text form, graded-lex descending, e.g. "x1^2*x2 - 1/2*x3".
std::string to_string(const Polynomial& p, const std::string& var_prefix = "x");

}  // namespace lapalg

#endif
