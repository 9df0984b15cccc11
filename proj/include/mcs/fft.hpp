#pragma once

#include <vector>

#include "mcs/common.hpp"

namespace mcs {

// In-place radix-2 FFT, size must be a power of two.
// sign=+1 computes X_k = sum_n a_n e(+nk/N), sign=-1 the conjugate kernel.
// No 1/N normalization.
void fft_pow2(std::vector<cd>& a, int sign);

// Arbitrary-length DFT via Bluestein's chirp transform, same conventions.
std::vector<cd> dft_chirp(const std::vector<cd>& a, int sign);

}  // namespace mcs
