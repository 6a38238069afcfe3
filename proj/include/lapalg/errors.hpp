#ifndef LAPALG_ERRORS_HPP
#define LAPALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lapalg {

// Bad user input: dimension mismatches, malformed text, violated preconditions.
// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation ran out of its step budget. Verdicts are never silently wrong;
// callers either surface this as INDETERMINATE or abort. CLI exit code 3.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lapalg

#endif
