#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aronsson {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
public:
    DimensionMismatch(const std::string& what, std::size_t expected, std::size_t actual)
        : InvalidArgument(what + ": expected dimension " + std::to_string(expected) + ", got " +
                          std::to_string(actual)),
          expected_(expected), actual_(actual) {}

    std::size_t expected() const noexcept { return expected_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

/// A structural hypothesis of the construction does not hold (nondegenerate
/// segment, Lipschitz bound below one, flatness of H along the segment).
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

class DegenerateSegment : public HypothesisViolation {
public:
    DegenerateSegment() : HypothesisViolation("degenerate segment: a == b") {}
};

class LipschitzViolation : public HypothesisViolation {
public:
    explicit LipschitzViolation(double declared)
        : HypothesisViolation("profile Lipschitz bound " + std::to_string(declared) +
                              " is not strictly below 1"),
          declared_(declared) {}

    double declared() const noexcept { return declared_; }

private:
    double declared_;
};

class FlatnessViolation : public HypothesisViolation {
public:
    FlatnessViolation(double worst_t, double value_residual, double derivative_residual)
        : HypothesisViolation("H is not constant along the segment: |H - c| = " +
                              std::to_string(value_residual) + " at t = " + std::to_string(worst_t) +
                              ", |(b-a).H_p| = " + std::to_string(derivative_residual)),
          worst_t_(worst_t), value_residual_(value_residual),
          derivative_residual_(derivative_residual) {}

    double worst_t() const noexcept { return worst_t_; }
    double value_residual() const noexcept { return value_residual_; }
    double derivative_residual() const noexcept { return derivative_residual_; }

private:
    double worst_t_;
    double value_residual_;
    double derivative_residual_;
};

class QuadratureFailure : public Error {
public:
    explicit QuadratureFailure(double mass_error)
        : Error("mollifier normalization self-test failed: |mass - 1| = " +
                std::to_string(mass_error)),
          mass_error_(mass_error) {}

    double mass_error() const noexcept { return mass_error_; }

private:
    double mass_error_;
};

/// The Lipschitz bound a profile declares is contradicted by sampling.
class CertificateMismatch : public Error {
public:
    CertificateMismatch(double measured, double declared)
        : Error("sampled Lipschitz constant " + std::to_string(measured) +
                " exceeds declared bound " + std::to_string(declared)),
          measured_(measured), declared_(declared) {}

    double measured() const noexcept { return measured_; }
    double declared() const noexcept { return declared_; }

private:
    double measured_;
    double declared_;
};

/// A finite-difference stencil would straddle the kink locus.
class KinkProximity : public Error {
public:
    using Error::Error;
};

class NotOnKink : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace aronsson
