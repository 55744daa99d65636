#pragma once

#include "triglab/trigpoly.hpp"

#include <cstddef>

namespace triglab::sampling {

// Mean of |P(a + (j + offset) h)|^p over j = 0..n-1.
// Parallel over fixed chunks; inside a chunk the exponentials advance by
// one complex multiply per sample and are re-seeded at every chunk start.
double abs_pow_mean(const TrigPoly& P, double a, double h, std::size_t n, double p, double offset = 0.5);

// same quantity, one exact eval() per sample, no threads. Kept as the reference.
double abs_pow_mean_serial(const TrigPoly& P, double a, double h, std::size_t n, double p, double offset = 0.5);

// Integer frequencies, samples at j/n. Uses blocked FFTs of size
// M = next_pow2(span+1) when M divides n, a single folded FFT when n is
// moderate, and the direct kernel otherwise.
double harmonic_abs_pow_mean(const TrigPoly& P, std::size_t n, double p);
double harmonic_abs_pow_mean_serial(const TrigPoly& P, std::size_t n, double p);

// smallest FFT block the harmonic path would use
std::size_t harmonic_block(const TrigPoly& P);

}  // namespace triglab::sampling
