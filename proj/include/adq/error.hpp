#pragma once

#include <stdexcept>
#include <string>

namespace adq {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Raised for expression shapes the engine deliberately does not handle
/// (nested radicals, more radicands than the kernel supports, ...).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace adq
