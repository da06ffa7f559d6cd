#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element shares a factor with the modulus (typically a p-divisible denominator).
class NotInvertible : public Error {
public:
    using Error::Error;
};

/// A valuation-tracked product dropped below p^0: the quantity was not a p-adic integer.
class NegativeValuation : public Error {
public:
    using Error::Error;
};

/// The prime is in the wrong class mod 4 for the requested two-squares routine.
class BadResidueClass : public Error {
public:
    using Error::Error;
};

/// A congruence check was requested for a prime outside its residue class.
class WrongResidueClass : public Error {
public:
    using Error::Error;
};

/// A binomial stream was advanced past its last index.
class RangeExhausted : public Error {
public:
    using Error::Error;
};

/// The oracle was asked for a sum it does not know.
class UnknownKind : public Error {
public:
    using Error::Error;
};

/// Malformed input to the library (non-prime modulus, bad rational string, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace supercong
