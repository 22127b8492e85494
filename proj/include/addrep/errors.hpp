#pragma once

#include <stdexcept>
#include <string>

namespace addrep {

// Base class for every error raised by the library. The CLI maps these to
// exit code 2 (usage / config) or reports them inline.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A question was asked about integers beyond the truncation bound.
class OutOfBoundError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain (N = 0, x outside (0,1), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// The sequence contains 0 where the math needs positive integers.
class PositivityError : public Error {
public:
    using Error::Error;
};

// The stored truncation is too short to reach the requested tolerance.
class TruncationError : public Error {
public:
    using Error::Error;
};

// Invalid element list: not strictly increasing, or above the bound.
class SequenceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class CapacityError : public Error {
public:
    using Error::Error;
};

class ConstructionError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Exact integer arithmetic would leave the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace addrep
