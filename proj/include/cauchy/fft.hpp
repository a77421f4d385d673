#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cauchy::fft {

using cplx = std::complex<double>;

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

/// Unnormalized forward DFT: X_k = sum_j x_j e^{-2 pi i jk/n}.
std::vector<cplx> forward(const std::vector<cplx>& x);
/// Unnormalized inverse DFT: x_j = sum_k X_k e^{+2 pi i jk/n}.
std::vector<cplx> inverse(const std::vector<cplx>& x);
/// Unnormalized 2-D forward DFT of a row-major rows x cols array.
std::vector<cplx> forward_2d(const std::vector<cplx>& x, std::size_t rows, std::size_t cols);

}  // namespace cauchy::fft
