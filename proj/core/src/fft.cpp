#include "fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace actime::detail {

namespace {
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
} // namespace

std::vector<std::complex<double>> fft_r2c(const std::vector<double>& in) {
  const std::size_t n = in.size();
  std::vector<std::complex<double>> out(n / 2 + 1);
  std::vector<double> buf(in); // FFTW_ESTIMATE may still touch the input buffer
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), buf.data(),
                                reinterpret_cast<fftw_complex*>(out.data()),
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

std::vector<double> fft_c2r(const std::vector<std::complex<double>>& spectrum, std::size_t n) {
  std::vector<std::complex<double>> buf(spectrum); // c2r destroys its input
  std::vector<double> out(n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                                reinterpret_cast<fftw_complex*>(buf.data()),
                                out.data(), FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

} // namespace actime::detail
