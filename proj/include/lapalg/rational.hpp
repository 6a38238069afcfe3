#ifndef LAPALG_RATIONAL_HPP
#define LAPALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lapalg/errors.hpp"

namespace lapalg {

// Exact arbitrary-precision rational scalar. mpq_class keeps values in
// canonical reduced form (gcd 1, positive denominator) through arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Builds num/den from integer strings, rejecting a zero denominator.
Rational make_rational(const std::string& num, const std::string& den = "1");

Integer factorial(unsigned int n);
Integer double_factorial(long n);  // (-1)!! = 1, 0!! = 1

Rational pow_rational(const Rational& base, unsigned int e);

// gcd of all numerators over lcm-free content; sign of the reference value.
Rational content(const std::vector<Rational>& values);

}  // namespace lapalg

#endif
