#pragma once

#include <stdexcept>
#include <string>

namespace hefty {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments or domain objects that violate their invariants.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Distribution fitting failures (deficient segment, degenerate tail, ...).
class FitError : public Error {
public:
    using Error::Error;
};

/// Root-finding or decomposition breakdowns.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Design matrix is rank deficient; message names the dependent column.
class SingularDesignError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Logistic MLE diverges because the classes are perfectly separable.
class SeparationError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Requested value lies outside the attainable range; message reports the range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// More than the tolerated fraction of simulation replications failed.
class SuiteError : public Error {
public:
    using Error::Error;
};

} // namespace hefty
