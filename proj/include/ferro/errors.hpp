#pragma once

#include <stdexcept>
#include <string>

namespace ferro {

// Base for every recoverable failure raised by the library. Precondition
// violations on plain arguments use std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quadrature or optimizer did not reach its tolerance.
class NumericalFailure : public Error {
public:
    NumericalFailure(const std::string& what, double estimate = 0.0, double error_bound = 0.0)
        : Error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

// A spectral feature (zero crossing) is not present on the grid.
class FeatureAbsent : public Error {
public:
    using Error::Error;
};

// ln(dL0/dLm) lies outside the window where the compensated ZCF is defined.
class CompensationOutOfRange : public Error {
public:
    using Error::Error;
};

// The phase of a zero-magnitude inductance sample is undefined.
class UndefinedPhase : public Error {
public:
    using Error::Error;
};

// Two spectra that must share a frequency grid do not.
class GridMismatch : public Error {
public:
    using Error::Error;
};

// Bracketing or minimization of the permeability misfit failed.
class InversionFailure : public Error {
public:
    using Error::Error;
};

}  // namespace ferro
