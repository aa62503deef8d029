#pragma once

#include <complex>
#include <vector>

namespace se2wave::fft {

/// Unscaled forward DFT: out[k] = sum_j in[j] e^{-2 pi i j k / n}.
std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& in);

/// Unscaled inverse DFT: out[j] = sum_k in[k] e^{+2 pi i j k / n}.
/// Divide by n to invert forward().
std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& in);

/// Signed mode index of DFT bin k on an n-grid: k for k <= n/2, else k - n.
inline int mode_of_bin(std::size_t k, std::size_t n) {
    return k <= n / 2 ? static_cast<int>(k) : static_cast<int>(k) - static_cast<int>(n);
}

}  // namespace se2wave::fft
