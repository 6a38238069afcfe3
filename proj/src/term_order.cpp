#include "lapalg/term_order.hpp"

#include <cassert>

#include "lapalg/errors.hpp"

namespace lapalg {

namespace {

// Strict "greater" for graded-reverse-lex on the slice [lo, hi).
int grevlex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
    long da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
        int d = a.e[i] - b.e[i];
        if (d != 0) return d < 0 ? 1 : -1;  // smaller trailing exponent wins
    }
    return 0;
}

}  // namespace

void TermOrder::validate(int nvars) const {
    if (kind != Kind::Elimination) return;
    long total = 0;
    for (int b : blocks) {
        if (b <= 0) throw input_error("elimination blocks must be positive");
        total += b;
    }
    if (total != nvars)
        throw input_error("elimination block sizes sum to " + std::to_string(total) +
                          ", expected " + std::to_string(nvars));
}

bool TermOrder::greater(const Monomial& a, const Monomial& b) const {
    assert(a.nvars() == b.nvars());
    switch (kind) {
        case Kind::GradedLex:
            return grlex_greater(a, b);
        case Kind::GradedRevLex:
            return grevlex_cmp(a, b, 0, a.nvars()) > 0;
        case Kind::Elimination: {
            int lo = 0;
            for (int width : blocks) {
                int c = grevlex_cmp(a, b, lo, lo + width);
                if (c != 0) return c > 0;
                lo += width;
            }
            return false;
        }
    }
    return false;
}

}  // namespace lapalg
