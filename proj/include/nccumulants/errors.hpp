#pragma once

#include <stdexcept>
#include <string>

namespace nccum {

// Base of everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented domain (position out of range, n too large, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A table lookup hit a word with no stored value.
class MissingValue : public Error {
public:
    using Error::Error;
};

// A form violates the precondition of the series built from it
// (e.g. exp of a form that does not vanish on the unit).
class InvalidForm : public Error {
public:
    using Error::Error;
};

// Two independent computational routes produced different values.
class RouteMismatch : public Error {
public:
    using Error::Error;
};

// Malformed input text (rational strings, word strings, table documents).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace nccum
