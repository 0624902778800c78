// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace maform {

// Malformed textual input (gate words, scalars, matrices, forms).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisibilityError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct ExponentError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotRealError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotCliffordError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotOrthogonalError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotSpecialError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotUnitaryError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct HypothesisError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NoNodeError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// States that are provably unreachable for valid input. Hitting one of
// these means the input was corrupted or there is a bug in the ring layer.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct NoMatchError : InternalError {
    using InternalError::InternalError;
};

struct AmbiguityError : InternalError {
    using InternalError::InternalError;
};

struct KNotDecreasedError : InternalError {
    using InternalError::InternalError;
};

struct PhaseError : InternalError {
    using InternalError::InternalError;
};

}  // namespace maform
