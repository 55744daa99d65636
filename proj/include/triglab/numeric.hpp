#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>

namespace triglab {

inline constexpr double pi = std::numbers::pi;

// sin(pi x), cos(pi x) with exact argument reduction, so integers and
// half-integers give exact zeros
double sin_pi(double x);
double cos_pi(double x);

// sin(x)/x with a short Taylor branch near 0
double sinc(double x);
// sin(pi x)/(pi x)
double sinc_pi(double x);

std::size_t next_pow2(std::size_t n);
bool near_integer(double x, double tol = 1e-9);

}  // namespace triglab
