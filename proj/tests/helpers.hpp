#ifndef LAPALG_TESTS_HELPERS_HPP
#define LAPALG_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "lapalg/parser.hpp"
#include "lapalg/polynomial.hpp"
#include "lapalg/rng.hpp"

namespace lapalg::testing {

inline Polynomial P(const std::string& text, int n = -1) { return parse_polynomial(text, n); }

inline Polynomial random_monomial_poly(Rng& rng, int n, int degree) {
    Monomial m(n);
    for (int d = 0; d < degree; ++d) m.e[rng.int_in(0, n - 1)] += 1;
    Rational c(static_cast<long>(rng.int_in(1, 9)) * (rng.int_in(0, 1) ? 1 : -1));
    return Polynomial::term(m, c);
}

// Random sparse polynomial of degree <= max_deg (not identically zero).
inline Polynomial random_polynomial(Rng& rng, int n, int max_deg, int terms = 4) {
    Polynomial p(n);
    while (p.is_zero()) {
        for (int t = 0; t < terms; ++t)
            p += random_monomial_poly(rng, n, static_cast<int>(rng.int_in(0, max_deg)));
    }
    return p;
}

// Random homogeneous polynomial of exact degree d (not identically zero).
inline Polynomial random_homogeneous(Rng& rng, int n, int d, int terms = 4) {
    Polynomial p(n);
    while (p.is_zero()) {
        for (int t = 0; t < terms; ++t) p += random_monomial_poly(rng, n, d);
    }
    return p;
}

}  // namespace lapalg::testing

#endif
