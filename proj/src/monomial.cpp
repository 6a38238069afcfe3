#include "lapalg/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace lapalg {

bool divides(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    for (int i = 0; i < a.nvars(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r = a;
    for (int i = 0; i < b.nvars(); ++i) r.e[i] += b.e[i];
    return r;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
    assert(divides(b, a));
    Monomial r = a;
    for (int i = 0; i < b.nvars(); ++i) r.e[i] -= b.e[i];
    return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r = a;
    for (int i = 0; i < b.nvars(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    for (int i = 0; i < a.nvars(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    long da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (int i = 0; i < a.nvars(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

static void collect_monomials(int n, int d, int pos, Monomial& cur, std::vector<Monomial>& out) {
    if (pos == n - 1) {
        cur.e[pos] = d;
        out.push_back(cur);
        cur.e[pos] = 0;
        return;
    }
    for (int v = d; v >= 0; --v) {
        cur.e[pos] = v;
        collect_monomials(n, d - v, pos + 1, cur, out);
    }
    cur.e[pos] = 0;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    if (n <= 0 || d < 0) return out;
    Monomial cur(n);
    collect_monomials(n, d, 0, cur, out);
    return out;
}

}  // namespace lapalg
