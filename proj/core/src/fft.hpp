#ifndef ACTIME_SRC_FFT_HPP
#define ACTIME_SRC_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

// Thin thread-safe wrappers around FFTW's double-precision transforms.
// FFTW plan creation/destruction is serialized behind a mutex; execution
// runs concurrently.

namespace actime::detail {

/// out[j] = sum_t in[t] * exp(-2 pi i j t / n) for j = 0 .. n/2.
std::vector<std::complex<double>> fft_r2c(const std::vector<double>& in);

/// Unnormalized inverse of fft_r2c: returns n reals, scale factor n.
/// `spectrum` must have n/2 + 1 entries.
std::vector<double> fft_c2r(const std::vector<std::complex<double>>& spectrum, std::size_t n);

} // namespace actime::detail

#endif // ACTIME_SRC_FFT_HPP
