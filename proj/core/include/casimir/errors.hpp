#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace casimir
{

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a type invariant or an operation precondition.
class InvalidInput : public Error
{
public:
    using Error::Error;
};

/// A tabulated quantity was queried outside its sampled interval.
class OutOfRange : public Error
{
public:
    OutOfRange(const std::string& what, double lower, double upper)
        : Error(what), lower_(lower), upper_(upper)
    {
    }

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }

private:
    double lower_;
    double upper_;
};

/// Adaptive quadrature ran out of refinements before meeting its tolerance.
class ConvergenceFailure : public Error
{
public:
    ConvergenceFailure(const std::string& what, double error_estimate)
        : Error(what), error_estimate_(error_estimate)
    {
    }

    /// Absolute error estimate reached when refinement stopped.
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double error_estimate_;
};

/// The Matsubara sum did not meet its stopping rule within the hard cap.
class TruncationFailure : public Error
{
public:
    TruncationFailure(const std::string& what, std::size_t terms, double last_ratio)
        : Error(what), terms_(terms), last_ratio_(last_ratio)
    {
    }

    std::size_t terms() const noexcept { return terms_; }
    /// |last term| / |running total| at the cap.
    double last_ratio() const noexcept { return last_ratio_; }

private:
    std::size_t terms_;
    double last_ratio_;
};

class ParseError : public Error
{
public:
    ParseError(const std::string& what, std::size_t line) : Error(what), line_(line) {}

    /// 1-based line number of the offending input line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An intermediate would be non-finite, e.g. an infinite permittivity passed
/// to a finite-material kernel.
class NonFiniteValue : public Error
{
public:
    using Error::Error;
};

} // namespace casimir
