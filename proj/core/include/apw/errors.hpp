#pragma once

#include <stdexcept>
#include <string>

namespace apw {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A coefficient operation left the 64-bit signed range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// p is not a prime congruent to 1 (mod 6) with p >= 7.
class NotSplittingPrime : public Error {
public:
    using Error::Error;
};

/// A size cap was exceeded (p > P_MAX, or an exhaustive scan over budget).
class LimitExceeded : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class DlogOfZero : public Error {
public:
    using Error::Error;
};

class LabelOutOfRange : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Code parameter t outside [0, n).
class InvalidT : public Error {
public:
    using Error::Error;
};

/// Malformed textual input ("x+yw" element or comma-separated word).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace apw
