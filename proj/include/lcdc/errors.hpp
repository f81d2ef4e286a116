#pragma once

#include <stdexcept>
#include <string>

#include "lcdc/bigint.hpp"

namespace lcdc {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Errors caused by invalid user-facing inputs. The CLI maps these to exit
// code 2; everything else (short of a work-bound refusal) is an internal
// failure and maps to exit code 1.
struct ValidationError : Error {
    using Error::Error;
};

struct NotPrime : ValidationError {
    using ValidationError::ValidationError;
};

struct SizeExceeded : ValidationError {
    using ValidationError::ValidationError;
};

struct NotCoprime : ValidationError {
    using ValidationError::ValidationError;
};

struct FormInadmissible : ValidationError {
    using ValidationError::ValidationError;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct OddD : Error {
    using Error::Error;
};

struct OddT : Error {
    using Error::Error;
};

struct EvenQ : Error {
    using Error::Error;
};

struct OddQ : Error {
    using Error::Error;
};

struct EvenK : Error {
    using Error::Error;
};

struct BadWittIndex : Error {
    using Error::Error;
};

struct RankTooSmall : Error {
    using Error::Error;
};

struct NoBulletMatches : Error {
    using Error::Error;
};

struct SingularReference : Error {
    using Error::Error;
};

struct DegenerateInput : Error {
    using Error::Error;
};

// Thrown when an enumeration would exceed the configured work bound. Carries
// the estimate so callers (and the CLI, which maps this to exit code 3) can
// report how far over budget the request was.
struct WorkBoundExceeded : Error {
    BigInt estimate;
    BigInt bound;
    WorkBoundExceeded(BigInt estimate_, BigInt bound_)
        : Error("work estimate " + estimate_.str() + " exceeds bound " + bound_.str()),
          estimate(std::move(estimate_)),
          bound(std::move(bound_)) {}
};

}  // namespace lcdc
