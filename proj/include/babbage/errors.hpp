#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace babbage {

/// Raised when a caller breaks an operation's precondition (arity mismatch,
/// out-of-range index, non-bijective conjugator, ...).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive computation would exceed its configured budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic failures in the exact backends (division by zero, order mismatch).
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace babbage
