#ifndef LAPALG_MONOMIAL_HPP
#define LAPALG_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace lapalg {

// Exponent vector; the ambient variable count is its length.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e.size()); }
    long degree() const {
        long d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool is_constant() const { return degree() == 0; }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

bool divides(const Monomial& a, const Monomial& b);     // a | b
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// Graded lexicographic: higher total degree first, then lex with x1 largest.
bool grlex_greater(const Monomial& a, const Monomial& b);

// Comparator for canonical descending-grlex term maps.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

// All monomials in n variables of total degree exactly d, descending grlex.
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace lapalg

#endif
