#pragma once

#include <stdexcept>
#include <string>

namespace algne {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Precondition or domain violation (bad index, value outside a range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The ideal has no univariate eliminant in the requested variable.
class PositiveDimensional : public Error {
public:
    using Error::Error;
};

/// p divides a denominator or the leading coefficient.
class BadPrime : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

}  // namespace algne
