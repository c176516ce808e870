#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A builder or operation was called outside its domain.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// A coloring was used with a graph it does not belong to.
class BindingError : public Error {
public:
    using Error::Error;
};

// Malformed or non-canonical serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

// The exact solver refused a graph above its edge-count bound.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

// The exact solver exhausted [lower, k_max] without finding a coloring.
class BoundTooSmall : public Error {
public:
    using Error::Error;
};

// The lower-bound replay reached a conclusion the verifier disagrees with.
class AuditInconsistency : public Error {
public:
    using Error::Error;
};

// Pigeonhole margins failed to hold; unreachable for valid parameters.
class ArithmeticInconsistency : public Error {
public:
    using Error::Error;
};

} // namespace rainbow
