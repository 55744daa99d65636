#pragma once
// seeded generators shared by the property tests

#include "triglab/trigpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace gen {

using triglab::cplx;
using Rng = std::mt19937_64;

inline double uniform(Rng& r, double a, double b) { return std::uniform_real_distribution<double>(a, b)(r); }
inline std::int64_t integer(Rng& r, std::int64_t a, std::int64_t b) { return std::uniform_int_distribution<std::int64_t>(a, b)(r); }

inline cplx coeff(Rng& r) { return {uniform(r, -1.0, 1.0), uniform(r, -1.0, 1.0)}; }

inline std::vector<cplx> coeffs(Rng& r, std::size_t n) {
    std::vector<cplx> a(n);
    for (auto& z : a) z = coeff(r);
    return a;
}

inline std::vector<cplx> unimodular(Rng& r, std::size_t n) {
    std::vector<cplx> a(n);
    for (auto& z : a) z = std::polar(1.0, uniform(r, 0.0, 6.283185307179586));
    return a;
}

// n distinct integers in [lo, hi], increasing
inline std::vector<double> int_freqs(Rng& r, std::size_t n, std::int64_t lo, std::int64_t hi) {
    std::set<std::int64_t> s;
    while (s.size() < n) s.insert(integer(r, lo, hi));
    return {s.begin(), s.end()};
}

// consecutive gaps in [gamma, gamma + spread]
inline std::vector<double> separated(Rng& r, std::size_t n, double gamma = 1.0, double spread = 1.0) {
    std::vector<double> f;
    double x = uniform(r, -5.0, 5.0);
    for (std::size_t k = 0; k < n; ++k) {
        f.push_back(x);
        x += gamma + uniform(r, 0.0, spread);
    }
    return f;
}

inline triglab::TrigPoly harmonic(Rng& r, std::size_t n, std::int64_t lo, std::int64_t hi) {
    return triglab::TrigPoly(int_freqs(r, n, lo, hi), coeffs(r, n));
}

}  // namespace gen
