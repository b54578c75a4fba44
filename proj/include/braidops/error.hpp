#pragma once

#include <stdexcept>
#include <string>

namespace braidops {

// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

// A division that was required to be exact left a remainder.
class InexactDivision : public Error {
public:
    using Error::Error;
};

// A constructor parameter violates the constraint that makes the family valid.
class ConstraintViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class SizeLimit : public Error {
public:
    using Error::Error;
};

// A family handed to an operation that requires the braid relations does not satisfy them.
class BraidFailure : public Error {
public:
    using Error::Error;
};

}  // namespace braidops
