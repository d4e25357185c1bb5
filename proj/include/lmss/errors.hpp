#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lmss {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Argument outside the operation's domain (unknown vertex, invalid matching,
/// violated precondition).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Refusal to run an exponential operation on a graph above the configured size.
class SizeLimitError : public Error {
public:
    SizeLimitError(std::size_t order, std::size_t limit)
        : Error("graph has " + std::to_string(order) + " vertices, limit is " +
                std::to_string(limit)) {}
};

/// A guarantee that a theorem promises failed at runtime. Never expected.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace lmss
