#pragma once

#include <stdexcept>
#include <string>

namespace contact_ve {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid configuration, flags, or input files. CLI exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Numerical failures. CLI exit code 3.
class NumericalError : public Error {
public:
    using Error::Error;
};

// All events fall in one arm; the partial-likelihood MLE diverges.
class MonotoneLikelihoodError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Dataset contains no events at all.
class NoEventsError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Newton iteration cap reached; message carries diagnostics.
class NonConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// SAR estimator undefined (zero exposure events in an arm, or zero
// placebo infections).
class UndefinedEstimateError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// invert_map input outside the solvable range (v* >= 1, or bracket
// expansion exhausted).
class OutOfRangeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// |dbeta/dv| too small, or the finite-difference step-halving check failed.
class DegenerateDerivativeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// The forward map failed its strict-monotonicity grid assertion.
class MonotonicityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace contact_ve
