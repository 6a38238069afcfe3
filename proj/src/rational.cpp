#include "lapalg/rational.hpp"

namespace lapalg {

Rational make_rational(const std::string& num, const std::string& den) {
    Integer n, d;
    if (n.set_str(num, 10) != 0) throw input_error("invalid integer literal '" + num + "'");
    if (d.set_str(den, 10) != 0) throw input_error("invalid integer literal '" + den + "'");
    if (d == 0) throw input_error("zero denominator in rational '" + num + "/" + den + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Integer factorial(unsigned int n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer double_factorial(long n) {
    if (n <= 0) return 1;
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational pow_rational(const Rational& base, unsigned int e) {
    Rational r = 1;
    Rational b = base;
    unsigned int k = e;
    while (k > 0) {
        if (k & 1u) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

Rational content(const std::vector<Rational>& values) {
    // gcd of numerators / gcd of denominators, signed like the first value.
    Integer num_gcd = 0, den_lcm = 1;
    bool first_negative = false, seen = false;
    for (const Rational& v : values) {
        if (v == 0) continue;
        if (!seen) {
            first_negative = v < 0;
            seen = true;
        }
        Integer num = v.get_num();
        mpz_abs(num.get_mpz_t(), num.get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        Integer den = v.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    if (!seen) return 1;
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    if (first_negative) c = -c;
    return c;
}

}  // namespace lapalg
