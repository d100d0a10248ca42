#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudodisc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input outside the admissible geometric domain (point outside the disc,
/// evaluation too close to a pole or to the boundary).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Discretization too coarse: rank-deficient transform, excessive
/// truncation tail, or invalid grid parameters.
class DiscretizationError : public Error {
public:
    using Error::Error;
};

/// A real matrix that does not satisfy J^2 = -Id.
class NotAStructure : public Error {
public:
    using Error::Error;
};

/// J + J_st singular: the structure has no complex-matrix chart here.
class ChartError : public Error {
public:
    using Error::Error;
};

/// det(I - A*conj(A)) too close to zero; carries the worst probe point.
class AdmissibilityViolation : public Error {
public:
    AdmissibilityViolation(const std::string& msg, std::vector<std::complex<double>> worst,
                           double margin)
        : Error(msg), worst_point(std::move(worst)), margin(margin) {}
    std::vector<std::complex<double>> worst_point;
    double margin;
};

/// Operation precondition violated (e.g. assembling the integral operator
/// while the first-order coefficient P is nonzero).
class PrecondError : public Error {
public:
    using Error::Error;
};

/// Could not make the stabilized operator invertible.
class StabilizationError : public Error {
public:
    using Error::Error;
};

/// Newton residual grew for several consecutive steps.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// A half-disc sample set does not cover the nodes it must cover.
class CoverageError : public Error {
public:
    using Error::Error;
};

/// Numeric and analytic kernel counts disagree.
class CertificateError : public Error {
public:
    using Error::Error;
};

/// Bad CLI input / config file.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace pseudodisc
