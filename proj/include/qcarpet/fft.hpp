#pragma once

#include <span>
#include <vector>

#include "qcarpet/core_model.hpp"

namespace qcarpet::fft {

// In-place forward DFT, X_k = sum_m x_m exp(-2 pi i k m / n). n must be a
// power of two.
void radix2(std::span<complex> data);

// Forward DFT of any length via Bluestein's chirp-z on power-of-two
// transforms.
std::vector<complex> dft(std::span<const complex> input);

bool is_power_of_two(std::size_t n);

}  // namespace qcarpet::fft
