#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddsx {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A component with period 0 (or otherwise outside the domain).
class invalid_component_error : public error {
public:
    using error::error;
};

// Checked integer arithmetic overflowed. Never wrapped silently.
class arithmetic_overflow_error : public error {
public:
    using error::error;
};

// A bounded search ran out of its configured candidate budget.
class budget_exhausted_error : public error {
public:
    using error::error;
};

// Syntax error in the text formats, with source location.
class parse_error : public error {
public:
    parse_error(const std::string& message, std::size_t line, std::size_t column)
        : error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// An assignment that does not cover every variable of an equation.
class missing_variable_error : public error {
public:
    using error::error;
};

}  // namespace ddsx
