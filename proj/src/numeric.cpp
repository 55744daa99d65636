#include "triglab/numeric.hpp"
#include "triglab/error.hpp"

#include <cmath>

namespace triglab {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NonIncreasingFrequencies: return "NonIncreasingFrequencies";
        case ErrorKind::NonFiniteValue: return "NonFiniteValue";
        case ErrorKind::InvalidFamilyParameter: return "InvalidFamilyParameter";
        case ErrorKind::TooLong: return "TooLong";
        case ErrorKind::ResourceLimit: return "ResourceLimit";
        case ErrorKind::NonIntegerFrequencies: return "NonIntegerFrequencies";
        case ErrorKind::NoDenominatorFound: return "NoDenominatorFound";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::InvalidDelta: return "InvalidDelta";
        case ErrorKind::MissingT: return "MissingT";
        case ErrorKind::InvalidMN: return "InvalidMN";
        case ErrorKind::BadGridSize: return "BadGridSize";
        case ErrorKind::GridOverflow: return "GridOverflow";
        case ErrorKind::CertificateMismatch: return "CertificateMismatch";
        case ErrorKind::GapTooSmall: return "GapTooSmall";
        case ErrorKind::TooSmall: return "TooSmall";
        case ErrorKind::WindowMismatch: return "WindowMismatch";
        case ErrorKind::TooManyTerms: return "TooManyTerms";
        case ErrorKind::NotQuasiIndependent: return "NotQuasiIndependent";
        case ErrorKind::NotLacunary: return "NotLacunary";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

// r in [-1, 1] with x = r + 2k
double reduce2(double x) { return x - 2.0 * std::nearbyint(0.5 * x); }

}  // namespace

double sin_pi(double x) {
    double r = reduce2(x);
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(pi * r);
}

double cos_pi(double x) {
    const double a = std::fabs(reduce2(x));
    if (a <= 0.25) return std::cos(pi * a);
    if (a <= 0.75) return std::sin(pi * (0.5 - a));
    return -std::cos(pi * (1.0 - a));
}

double sinc(double x) {
    if (std::fabs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
    }
    return std::sin(x) / x;
}

double sinc_pi(double x) {
    const double y = pi * x;
    if (std::fabs(y) < 1e-4) return sinc(y);
    return sin_pi(x) / y;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

bool near_integer(double x, double tol) { return std::fabs(x - std::nearbyint(x)) <= tol; }

}  // namespace triglab
