#pragma once

#include <stdexcept>
#include <string>

namespace oscint {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested integral does not converge for these parameters.
class DivergentIntegral : public Error {
public:
    using Error::Error;
};

/// No closed form is offered for these parameters (quadrature still is).
class NotSupported : public Error {
public:
    using Error::Error;
};

/// A series, continued fraction or quadrature ran out of budget.
class ConvergenceFailure : public Error {
public:
    enum class Kind { SeriesTerms, ContinuedFraction, MaxSubdivisions, AccelerationStalled };

    ConvergenceFailure(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

} // namespace oscint
