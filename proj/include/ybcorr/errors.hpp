#pragma once

#include <stdexcept>
#include <string>

namespace ybcorr {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation requiring a Hermitian matrix got a non-Hermitian one.
struct NonHermitianError : Error {
    using Error::Error;
};

/// A matrix failed the density-matrix preconditions.
struct InvalidDensityError : Error {
    using Error::Error;
};

struct TraceNotOneError : InvalidDensityError {
    using InvalidDensityError::InvalidDensityError;
};

struct NotPsdError : InvalidDensityError {
    using InvalidDensityError::InvalidDensityError;
};

/// Scalar argument outside its mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

/// An X-state fast path was handed a state with off-pattern entries.
struct NotXStateError : Error {
    using Error::Error;
};

struct NotNormalizedError : Error {
    using Error::Error;
};

/// Rational spectral-parameter composition hit a pole (1 + beta^2 mu nu ~ 0).
struct SingularCompositionError : Error {
    using Error::Error;
};

/// decompose_R was asked to fit onto span{I, U} with U proportional to I.
struct DegenerateBasisError : Error {
    using Error::Error;
};

/// No closed-form oracle exists for the requested (model, state) pair.
struct NoOracleError : Error {
    using Error::Error;
};

/// Scaled-time grid requires dividing by a zero scale constant (B or J).
struct ZeroScaleError : Error {
    using Error::Error;
};

}  // namespace ybcorr
