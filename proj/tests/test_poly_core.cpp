#include <doctest.h>

#include "helpers.hpp"
#include "lapalg/errors.hpp"
#include "lapalg/harmonic.hpp"
#include "lapalg/parser.hpp"
#include "lapalg/polynomial.hpp"

using namespace lapalg;
using lapalg::testing::P;

TEST_CASE("ring operations") {
    CHECK(P("x1+x2") * P("x1-x2") == P("x1^2-x2^2"));
    Polynomial p = P("x1^2*x2 - 1/2*x3", 3);
    CHECK(p + Polynomial(3) == p);
    CHECK(r_squared(2) * r_squared(2) == P("x1^4+2*x1^2*x2^2+x2^4"));
    CHECK_THROWS_AS(P("x1", 1) + P("x1", 2), input_error);
}

TEST_CASE("partial derivatives and laplacian") {
    CHECK(derivative(P("x1^2*x2"), 0) == P("2*x1*x2"));
    CHECK(derivative(P("x1^3", 2), 1).is_zero());
    CHECK(derivative(r_squared(3), 0) == P("2*x1", 3));
    CHECK_THROWS_AS(derivative(P("x1"), 5), input_error);

    for (int n = 1; n <= 5; ++n)
        CHECK(laplacian(r_squared(n)) == Polynomial::constant(n, 2 * n));
    CHECK(laplacian(P("x1^2-x2^2")).is_zero());
    CHECK(laplacian(P("x1^4*x2^4")) == P("12*x1^2*x2^4 + 12*x1^4*x2^2"));
}

TEST_CASE("grad_inner basics and the laplacian identity") {
    CHECK(grad_inner(r_squared(3), r_squared(3)) == Rational(4) * r_squared(3));

    // det on (R^2)^2, variables (x1,y1,x2,y2) flattened as x1..x4
    Polynomial h = P("x1*x4 - x3*x2", 4);
    Polynomial f11 = P("x1^2+x2^2", 4);
    Polynomial f22 = P("x3^2+x4^2", 4);
    // oracle: <grad f, grad g> = (D(fg) - f Dg - g Df)/2
    Polynomial oracle =
        Rational(1, 2) * (laplacian(h * h) - h * laplacian(h) - h * laplacian(h));
    CHECK(grad_inner(h, h) == oracle);
    CHECK(grad_inner(h, h) == f11 + f22);

    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        int n = static_cast<int>(rng.int_in(1, 4));
        Polynomial p = testing::random_polynomial(rng, n, 4);
        Polynomial q = testing::random_polynomial(rng, n, 4);
        Polynomial lhs = grad_inner(p, q);
        Polynomial rhs = Rational(1, 2) *
                         (laplacian(p * q) - p * laplacian(q) - q * laplacian(p));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("apolar inner product") {
    CHECK(apolar_inner(P("x1^2", 2), P("x1^2", 2)) == 2);
    CHECK(apolar_inner(P("x1*x2"), P("x1^2", 2)) == 0);
    // adjointness instance: <x1*x1, x1^2>_2 = <x1, d/dx1(x1^2)>_1
    CHECK(apolar_inner(P("x1") * P("x1"), P("x1^2")) ==
          apolar_inner(P("x1"), apply_dual(P("x1"), P("x1^2"))));
    CHECK_THROWS_AS(apolar_inner(P("x1+x1^2"), P("x1^2")), input_error);
    CHECK_THROWS_AS(apolar_inner(P("x1"), P("x1^2")), input_error);

    // monomial norm: |x^a|^2 = a_1! ... a_n!, here n <= 3 and deg <= 6
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 6; ++d)
            for (const Monomial& m : monomials_of_degree(n, d)) {
                Integer expect = 1;
                for (int e : m.e) expect *= factorial(static_cast<unsigned>(e));
                CHECK(apolar_inner(Polynomial::term(m, 1), Polynomial::term(m, 1)) ==
                      Rational(expect));
            }

    // orthogonality of distinct monomials
    for (const Monomial& a : monomials_of_degree(3, 4))
        for (const Monomial& b : monomials_of_degree(3, 4))
            if (a != b)
                CHECK(apolar_inner(Polynomial::term(a, 1), Polynomial::term(b, 1)) == 0);
}

TEST_CASE("apolar pairing agrees with the dual-operator route") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        int n = static_cast<int>(rng.int_in(1, 3));
        int d = static_cast<int>(rng.int_in(1, 4));
        Polynomial f = testing::random_homogeneous(rng, n, d);
        Polynomial g = testing::random_homogeneous(rng, n, d);
        Polynomial applied = apply_dual(f, g);
        CHECK(applied.is_constant());
        CHECK(apolar_inner(f, g) == applied.constant_term());
    }
}

TEST_CASE("multiplication is adjoint to the dual operator") {
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        int n = static_cast<int>(rng.int_in(1, 3));
        int df = static_cast<int>(rng.int_in(0, 2));
        int dh = static_cast<int>(rng.int_in(1, 2));
        Polynomial f = testing::random_homogeneous(rng, n, df);
        Polynomial h = testing::random_homogeneous(rng, n, dh);
        Polynomial g = testing::random_homogeneous(rng, n, df + dh);
        CHECK(apolar_inner(h * f, g) == apolar_inner(f, apply_dual(h, g)));
    }
}

TEST_CASE("homogeneous components") {
    auto comps = homogeneous_components(P("x1^3+x1", 1));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].first == 1);
    CHECK(comps[0].second == P("x1", 1));
    CHECK(comps[1].first == 3);
    CHECK(comps[1].second == P("x1^3", 1));
    CHECK(homogeneous_components(Polynomial(2)).empty());
    auto c2 = homogeneous_components(P("x1^2+x2^2+5"));
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].first == 0);
    CHECK(c2[0].second == Polynomial::constant(2, 5));
    CHECK(c2[1].second == r_squared(2));
}

TEST_CASE("evaluation") {
    CHECK(evaluate(r_squared(2), {3, 4}) == 25);
    CHECK(evaluate(P("x1*x2"), {0, 7}) == 0);
    CHECK(evaluate(P("x1^2-x2^2"), {1, 1}) == 0);
    CHECK_THROWS_AS(evaluate(P("x1"), {1, 2}), input_error);
}

TEST_CASE("substitution") {
    // x^2 with x -> s*u + t*v over variables (s,t,u,v) = (x1,x2,x3,x4)
    Polynomial img = P("x1*x3 + x2*x4", 4);
    CHECK(substitute(P("x1^2", 1), {img}) ==
          P("x1^2*x3^2 + 2*x1*x2*x3*x4 + x2^2*x4^2"));
    std::vector<Polynomial> identity{Polynomial::variable(2, 0), Polynomial::variable(2, 1)};
    CHECK(substitute(r_squared(2), identity) == r_squared(2));
    CHECK_THROWS_AS(substitute(P("x1^2", 2), {P("x1", 1)}), input_error);
}

TEST_CASE("canonical formatting and parsing round trip") {
    CHECK(to_string(P("x1^2*x2 - 1/2*x3")) == "x1^2*x2 - 1/2*x3");
    CHECK(to_string(Polynomial(3)) == "0");
    CHECK(to_string(P("-x1 + 1", 1)) == "-x1 + 1");

    Rng rng(17);
    for (int t = 0; t < 500; ++t) {
        int n = static_cast<int>(rng.int_in(1, 4));
        Polynomial p = testing::random_polynomial(rng, n, 5);
        std::string s = to_string(p);
        CHECK(parse_polynomial(s, n) == p);
        CHECK(to_string(parse_polynomial(s, n)) == s);
    }
}

TEST_CASE("parser error positions") {
    CHECK_THROWS_WITH_AS(parse_polynomial("x1 + "), doctest::Contains("position 5"), parse_error);
    CHECK_THROWS_WITH_AS(parse_polynomial("3/0*x1"), doctest::Contains("zero denominator"),
                         parse_error);
    CHECK_THROWS_WITH_AS(parse_polynomial("x5", 2), doctest::Contains("unknown variable"),
                         parse_error);
    CHECK_THROWS_WITH_AS(parse_polynomial("x1^-2"), doctest::Contains("negative exponent"),
                         parse_error);
    CHECK_THROWS_AS(parse_polynomial("x1 x2"), parse_error);
}

namespace {

// Exact circle-moment oracle via the Wallis recursion:
// E[cos^p sin^q] = (p-1)/(p+q) E[cos^(p-2) sin^q], E[1] = 1, odd powers vanish.
Rational circle_moment(int p, int q) {
    if (p % 2 || q % 2) return 0;
    if (p == 0 && q == 0) return 1;
    Rational factor = p >= 2 ? Rational(p - 1, p + q) : Rational(q - 1, q);
    factor.canonicalize();
    return factor * (p >= 2 ? circle_moment(p - 2, q) : circle_moment(p, q - 2));
}

}  // namespace

TEST_CASE("sphere moments") {
    CHECK(sphere_moment(Monomial({2, 0}), 2) == Rational(1, 2));
    CHECK(sphere_moment(Monomial({4, 0}), 2) == Rational(3, 8));
    CHECK(sphere_moment(Monomial({2, 2}), 2) == Rational(1, 8));
    CHECK(sphere_moment(Monomial({1, 2}), 2) == 0);
    CHECK(sphere_moment(Monomial({3, 1}), 2) == 0);

    // cross-check every n=2 moment of degree <= 10 against the trig oracle
    for (int p = 0; p <= 10; ++p)
        for (int q = 0; p + q <= 10; ++q)
            CHECK(sphere_moment(Monomial({p, q}), 2) == circle_moment(p, q));

    // any odd exponent kills the moment
    for (int n = 2; n <= 3; ++n)
        for (int d = 0; d <= 5; ++d)
            for (const Monomial& m : monomials_of_degree(n, d)) {
                bool odd = false;
                for (int e : m.e) odd = odd || (e % 2 != 0);
                if (odd) CHECK(sphere_moment(m, n) == 0);
            }

    // sum of squares integrates to 1 in any dimension
    for (int n = 2; n <= 5; ++n) {
        Rational total = 0;
        for (int i = 0; i < n; ++i) {
            Monomial m(n);
            m.e[i] = 2;
            total += sphere_moment(m, n);
        }
        CHECK(total == 1);
    }
}

TEST_CASE("harmonic decomposition examples") {
    // already harmonic
    HarmonicSplit s1 = harmonic_decompose(P("x1^2-x2^2"));
    REQUIRE(s1.components.size() == 2);
    CHECK(s1.components[0] == P("x1^2-x2^2"));
    CHECK(s1.components[1].is_zero());

    // x^2 = (x^2-y^2)/2 + r^2 * 1/2
    HarmonicSplit s2 = harmonic_decompose(P("x1^2", 2));
    REQUIRE(s2.components.size() == 2);
    CHECK(s2.components[0] == P("1/2*x1^2 - 1/2*x2^2"));
    CHECK(s2.components[1] == Polynomial::constant(2, Rational(1, 2)));

    // x^4: frozen values from solving the split by hand, plus reconstruction
    HarmonicSplit s3 = harmonic_decompose(P("x1^4", 2));
    REQUIRE(s3.components.size() == 3);
    CHECK(s3.components[0] == P("1/8*x1^4 - 3/4*x1^2*x2^2 + 1/8*x2^4"));
    CHECK(s3.components[1] == P("1/2*x1^2 - 1/2*x2^2"));
    CHECK(s3.components[2] == Polynomial::constant(2, Rational(3, 8)));

    CHECK_THROWS_AS(harmonic_decompose(P("x1^2+x1", 2)), input_error);
}

TEST_CASE("harmonic decomposition invariants on random input") {
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng.int_in(2, 4));
        int d = static_cast<int>(rng.int_in(1, 6));
        Polynomial p = testing::random_homogeneous(rng, n, d);
        HarmonicSplit split = harmonic_decompose(p);
        REQUIRE(static_cast<int>(split.components.size()) == d / 2 + 1);
        Polynomial sum(n);
        Polynomial r2 = r_squared(n);
        for (std::size_t i = 0; i < split.components.size(); ++i) {
            CHECK(laplacian(split.components[i]).is_zero());
            sum += pow(r2, static_cast<unsigned>(i)) * split.components[i];
        }
        CHECK(sum == p);
        // distinct summands are apolar-orthogonal
        for (std::size_t i = 0; i < split.components.size(); ++i)
            for (std::size_t j = i + 1; j < split.components.size(); ++j) {
                if (split.components[i].is_zero() || split.components[j].is_zero()) continue;
                Polynomial a = pow(r2, static_cast<unsigned>(i)) * split.components[i];
                Polynomial b = pow(r2, static_cast<unsigned>(j)) * split.components[j];
                CHECK(apolar_inner(a, b) == 0);
            }
    }
}

TEST_CASE("schur ratios: frozen example, constancy, positivity") {
    // n=2, d=2, top summand: elements x^2-y^2 and 2xy both give 1/8
    Polynomial e1 = P("x1^2-x2^2");
    Polynomial e2 = P("2*x1*x2");
    CHECK(sphere_inner(e1, e1) == Rational(1, 2));
    CHECK(apolar_inner(e1, e1) == 4);
    CHECK(sphere_inner(e1, e1) / apolar_inner(e1, e1) == Rational(1, 8));
    CHECK(sphere_inner(e2, e2) / apolar_inner(e2, e2) == Rational(1, 8));
    CHECK(schur_ratios(2, 2).ratios[0] == Rational(1, 8));

    for (int n = 2; n <= 3; ++n)
        for (int d = 0; d <= 5; ++d) {
            SchurRatios sr = schur_ratios(d, n);
            REQUIRE(static_cast<int>(sr.ratios.size()) == d / 2 + 1);
            Polynomial r2 = r_squared(n);
            for (int i = 0; i <= d / 2; ++i) {
                CHECK(sr.ratios[i] > 0);
                // constancy across the whole summand: L2(u,v) = C * apolar(u,v)
                // on a spanning set of r^{2i} H_{d-2i}, including cross terms
                std::vector<Polynomial> span;
                for (const Polynomial& h : harmonic_basis(n, d - 2 * i))
                    span.push_back(pow(r2, static_cast<unsigned>(i)) * h);
                for (const Polynomial& u : span)
                    for (const Polynomial& v : span)
                        CHECK(sphere_inner(u, v) == sr.ratios[i] * apolar_inner(u, v));
            }
        }
}
