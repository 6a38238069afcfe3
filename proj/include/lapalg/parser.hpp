#ifndef LAPALG_PARSER_HPP
#define LAPALG_PARSER_HPP

#include <cstddef>
#include <string>

#include "lapalg/errors.hpp"
#include "lapalg/polynomial.hpp"

namespace lapalg {

class parse_error : public input_error {
public:
    parse_error(const std::string& msg, std::size_t position, std::size_t line, std::size_t column)
        : input_error(msg + " at position " + std::to_string(position) + " (line " +
                      std::to_string(line) + ", column " + std::to_string(column) + ")"),
          position(position),
          line(line),
          column(column) {}
    std::size_t position;  // 0-based byte offset
    std::size_t line;      // 1-based
    std::size_t column;    // 1-based
};

// Grammar: variables `<prefix>1..<prefix>n`, rational coefficients ("3/2"),
// operators + - * ^, parentheses; whitespace insignificant.
// nvars < 0 infers the variable count from the largest index used.
Polynomial parse_polynomial(const std::string& text, int nvars = -1,
                            const std::string& var_prefix = "x");

}  // namespace lapalg

#endif
