#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ilw::fft {

/// In-order complex DFT pair used by the spectral transforms.
///
/// forward: samples f_k -> coefficients c_n = (1/N) sum_k f_k exp(-2 pi i k n / N),
/// returned in natural mode order n = -N/2 .. N/2-1.
/// backward: natural-order coefficients -> samples f_k = sum_n c_n exp(2 pi i k n / N).
///
/// Plans are cached per thread and per size; FFTW planner calls are serialized
/// internally, so concurrent transforms from different threads are safe.
std::vector<std::complex<double>> forward(std::span<const std::complex<double>> samples);
std::vector<std::complex<double>> backward(std::span<const std::complex<double>> coeffs);

}  // namespace ilw::fft
