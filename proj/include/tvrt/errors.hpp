#pragma once

#include <stdexcept>
#include <string>

namespace tvrt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input files (.tri / .lnk / JSON structure).
struct ParseError : Error {
    using Error::Error;
};

// Structurally well-formed input that violates a semantic requirement
// (non-involutive gluing, open face in closed mode, dangling arc, ...).
struct ValidationError : Error {
    using Error::Error;
};

// Mixing exact values from different cyclotomic fields.
struct LevelMismatchError : Error {
    using Error::Error;
};

// Division by zero and friends.
struct ArithmeticError : Error {
    using Error::Error;
};

// Bad argument domain (e.g. genus < 1).
struct DomainError : Error {
    using Error::Error;
};

// A Pachner move that is not applicable at the requested location.
struct MoveRejectedError : Error {
    using Error::Error;
};

// Work ceiling exceeded; carries the refusing engine's estimate.
struct ResourceLimitError : Error {
    ResourceLimitError(const std::string& msg, double estimate_)
        : Error(msg), estimate(estimate_) {}
    double estimate;
};

}  // namespace tvrt
