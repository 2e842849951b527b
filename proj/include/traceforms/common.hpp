#pragma once

#include <stdexcept>
#include <string>

namespace traceforms {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TRACEFORMS_DEFINE_ERROR(NAME)                                          \
    struct NAME : Error {                                                      \
        explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {}     \
    }

TRACEFORMS_DEFINE_ERROR(ParseError);
TRACEFORMS_DEFINE_ERROR(NotInvertible);
TRACEFORMS_DEFINE_ERROR(IncompatibleGrid);
TRACEFORMS_DEFINE_ERROR(InsufficientPrecision);
TRACEFORMS_DEFINE_ERROR(InvalidWeight);
TRACEFORMS_DEFINE_ERROR(InvalidPivot);
TRACEFORMS_DEFINE_ERROR(UnsupportedCharge);
TRACEFORMS_DEFINE_ERROR(InvalidRank);
TRACEFORMS_DEFINE_ERROR(UpperHalfPlaneError);
TRACEFORMS_DEFINE_ERROR(DegenerateRatio);
TRACEFORMS_DEFINE_ERROR(DegreeOverflow);
// Raised when inputs do not satisfy the stated hypotheses of a formula
// (orthogonality, commuting pairs, equal norms, ...).
TRACEFORMS_DEFINE_ERROR(HypothesisViolation);
// Raised when two independent construction routes for the same object
// disagree, or an internal structural check fails.
TRACEFORMS_DEFINE_ERROR(ConsistencyFailure);

#undef TRACEFORMS_DEFINE_ERROR

}  // namespace traceforms
