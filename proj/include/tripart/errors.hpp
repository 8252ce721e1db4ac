#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tripart {

/// Malformed system-file content. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input larger than an exact routine is configured to handle.
class UnsupportedSize : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A documented precondition was violated by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A search ran out of its node budget before proving optimality.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, long long best_lower_bound)
        : std::runtime_error(what + " (best lower bound " + std::to_string(best_lower_bound) + ")"),
          best_(best_lower_bound) {}

    long long best_lower_bound() const noexcept { return best_; }

private:
    long long best_;
};

/// Enumeration cache content does not match its manifest.
class ChecksumMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tripart
