#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rxlimit {

/// Base class for every failure raised by the model layer. Construction-time
/// invariant violations on the value types throw std::invalid_argument instead;
/// everything that can fail during a computation derives from Error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The coupled RF heat alone meets or exceeds the thermal design power, so no
/// compute budget is left for the baseband processor.
class BudgetExhausted : public Error {
public:
    using Error::Error;
};

/// Simulation step size is non-positive or larger than the session duration.
class InvalidStep : public Error {
public:
    using Error::Error;
};

/// A closed-form inversion would require an exponent outside the safe range.
class ExponentOverflow : public Error {
public:
    using Error::Error;
};

/// A chip package size of zero makes the heat density undefined.
class ZeroArea : public Error {
public:
    using Error::Error;
};

/// Malformed catalog or config text. Carries the 1-based line and column
/// (field index for delimited rows) where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", field " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Structurally valid input whose values contradict each other.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Bad experiment configuration. Carries the dotted path of the offending field.
class ConfigError : public Error {
public:
    ConfigError(const std::string& field_path, const std::string& message)
        : Error(field_path + ": " + message), field_path_(field_path) {}

    const std::string& field_path() const noexcept { return field_path_; }

private:
    std::string field_path_;
};

}  // namespace rxlimit
