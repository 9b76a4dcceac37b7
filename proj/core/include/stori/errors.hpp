#pragma once

#include <stdexcept>
#include <string>

namespace stori {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Formula text could not be parsed.  Carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::string msg, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Inconsistent vector/matrix dimensions between model, formula and data.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Trajectory is too short to decide the formula.
class HorizonError : public Error {
public:
    using Error::Error;
};

/// Malformed or unreadable input file.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace stori
