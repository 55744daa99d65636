#pragma once

#include <complex>
#include <vector>

namespace triglab::fft {

using cvec = std::vector<std::complex<double>>;

// unnormalized, in place. forward uses exp(-2 pi i k n / N)
void forward(cvec& a);
void inverse(cvec& a);

}  // namespace triglab::fft
