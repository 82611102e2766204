#pragma once

#include <complex>
#include <vector>

namespace qwalk {

/// In-place iterative radix-2 FFT. n must be a power of two.
/// sign = -1: forward, sum_j x_j e^{-2pi i jk/n}; sign = +1: inverse kernel
/// (no 1/n factor), sum_j x_j e^{+2pi i jk/n}.
void fft_pow2(std::vector<std::complex<double>>& data, int sign);

bool is_pow2(std::size_t n);

}  // namespace qwalk
