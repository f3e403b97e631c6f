#ifndef NPOLY_ERRORS_HPP
#define NPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace npoly {

// Bad user input: malformed files, malformed rationals, invalid flags.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated mathematical precondition or internal consistency failure.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

// A degenerate Laurent polynomial was handed to the L-function oracle.
struct DegenerateError : std::runtime_error {
    explicit DegenerateError(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration would exceed the configured point budget.
struct BudgetError : std::runtime_error {
    BudgetError(const std::string& msg, long long required)
        : std::runtime_error(msg), required_budget(required) {}
    long long required_budget;
};

}  // namespace npoly

#endif
