#ifndef LAPALG_TERM_ORDER_HPP
#define LAPALG_TERM_ORDER_HPP

#include <vector>

#include "lapalg/monomial.hpp"

namespace lapalg {

// Monomial order: graded-lex, graded-reverse-lex, or a block elimination
// order (earlier blocks dominate; graded-reverse-lex inside each block).
struct TermOrder {
    enum class Kind { GradedLex, GradedRevLex, Elimination };

    Kind kind = Kind::GradedLex;
    std::vector<int> blocks;  // elimination only; sizes must sum to nvars

    static TermOrder graded_lex() { return {Kind::GradedLex, {}}; }
    static TermOrder graded_revlex() { return {Kind::GradedRevLex, {}}; }
    static TermOrder elimination(std::vector<int> block_sizes) {
        return {Kind::Elimination, std::move(block_sizes)};
    }

    void validate(int nvars) const;
    bool greater(const Monomial& a, const Monomial& b) const;
};

}  // namespace lapalg

#endif
