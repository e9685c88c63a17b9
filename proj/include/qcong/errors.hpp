#pragma once

#include <stdexcept>
#include <string>

namespace qcong {

/// Base class for every error the engine raises on its own.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Zero denominator / zero divisor (rationals, polynomials, rational functions).
class DivisionByZero : public Error {
public:
    using Error::Error;
    DivisionByZero() : Error("division by zero") {}
};

/// gcd of two zero polynomials is undefined.
class BothZero : public Error {
public:
    using Error::Error;
    BothZero() : Error("gcd(0, 0) is undefined") {}
};

/// Operation requires a nonzero input.
class ZeroInput : public Error {
public:
    using Error::Error;
    ZeroInput() : Error("nonzero input required") {}
};

/// Jacobi symbol modulus must be odd.
class EvenModulus : public Error {
public:
    using Error::Error;
    EvenModulus() : Error("Jacobi symbol requires an odd modulus") {}
};

/// Modular inverse does not exist.
class NonInvertible : public Error {
public:
    using Error::Error;
    NonInvertible() : Error("element is not invertible") {}
};

/// A check or constructor was called with parameters outside its contract.
class InvalidParams : public Error {
public:
    using Error::Error;
    InvalidParams() : Error("invalid parameters") {}
};

/// A sum operation was applied to a family it does not support.
class WrongFamily : public Error {
public:
    using Error::Error;
    WrongFamily() : Error("operation not defined for this sum family") {}
};

/// q -> 1 limit does not exist (denominator vanishes to higher order).
class PoleAtOne : public Error {
public:
    using Error::Error;
    PoleAtOne() : Error("pole at q = 1") {}
};

/// Case enumeration produced no cases after filtering.
class EmptySelection : public Error {
public:
    using Error::Error;
    EmptySelection() : Error("no cases match the requested ranges") {}
};

/// A denominator shares a factor with the congruence modulus; the
/// congruence is undefined there (distinct from a false congruence).
class NotCoprime : public Error {
public:
    using Error::Error;
    NotCoprime() : Error("denominator is not coprime to the modulus") {}
};

} // namespace qcong
