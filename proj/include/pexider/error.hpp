#pragma once

#include <stdexcept>
#include <string>

namespace pexider {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed literal or document. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), detail_(what), line_(line) {}

    int line() const noexcept { return line_; }
    /// The message without the line prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    int line_;
};

/// A well-formed value that violates a documented precondition or invariant.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The classifier reached a state the trichotomy rules out. Always a bug.
class ImpossibleCase : public Error {
public:
    using Error::Error;
};

}  // namespace pexider
