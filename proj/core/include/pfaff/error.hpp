#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfaff {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live on charts of different dimension, or a vector/point has the wrong length.
class DimensionError : public Error {
public:
    using Error::Error;
};

// The generators are linearly dependent at the requested point.
class DegeneratePointError : public Error {
public:
    using Error::Error;
};

// An argument lies outside the domain of the operation (vector not in the
// annihilator, negative degree, vanishing 1-form, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A proposed integral element fails the isotropy check.
class NotIntegralError : public Error {
public:
    NotIntegralError(std::string what, std::size_t first, std::size_t second, std::size_t form)
        : Error(std::move(what)), first_(first), second_(second), form_(form) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }
    std::size_t form_index() const noexcept { return form_; }

private:
    std::size_t first_;
    std::size_t second_;
    std::size_t form_;
};

// A coordinate-adapted reduction was requested on a system that is not adapted.
class ValidityError : public Error {
public:
    using Error::Error;
};

// The exhaustive integral-element search refuses to run.
class SearchLimitError : public Error {
public:
    using Error::Error;
};

// Malformed DSL input, with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A library invariant was violated; always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace pfaff
