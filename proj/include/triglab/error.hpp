#pragma once

#include <stdexcept>
#include <string>

namespace triglab {

enum class ErrorKind {
    LengthMismatch,
    NonIncreasingFrequencies,
    NonFiniteValue,
    InvalidFamilyParameter,
    TooLong,
    ResourceLimit,
    NonIntegerFrequencies,
    NoDenominatorFound,
    NoConvergence,
    InvalidDelta,
    MissingT,
    InvalidMN,
    BadGridSize,
    GridOverflow,
    CertificateMismatch,
    GapTooSmall,
    TooSmall,
    WindowMismatch,
    TooManyTerms,
    NotQuasiIndependent,
    NotLacunary,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

// every failure raised by the library; kind() lets callers branch
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace triglab
