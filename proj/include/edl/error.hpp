#pragma once

#include <stdexcept>
#include <string>

namespace edl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain of an operation or construction.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A documented size limit (order, search feasibility) was exceeded.
class LimitError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string & what, int line, int column = 0)
        : Error(format(what, line, column)), line_(line), column_(column)
    {
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string & what, int line, int column)
    {
        std::string out = "line " + std::to_string(line);
        if (column > 0)
            out += ", column " + std::to_string(column);
        return out + ": " + what;
    }

    int line_;
    int column_;
};

} // namespace edl
