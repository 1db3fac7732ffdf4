#pragma once

#include <stdexcept>
#include <string>

namespace sympow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An enumeration cap was exceeded. `cap()` names the cap.
class CapExceeded : public Error {
public:
    CapExceeded(std::string cap, const std::string& what)
        : Error(what), cap_(std::move(cap)) {}
    const std::string& cap() const noexcept { return cap_; }

private:
    std::string cap_;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// An internal consistency check failed; indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace sympow
