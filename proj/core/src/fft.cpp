#include "ilwlab/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ilw::fft {
namespace {

// FFTW's planner is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanPair {
  int n = 0;
  fftw_complex* buf_in = nullptr;
  fftw_complex* buf_out = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  explicit PlanPair(int size) : n(size) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    buf_in = fftw_alloc_complex(static_cast<size_t>(n));
    buf_out = fftw_alloc_complex(static_cast<size_t>(n));
    fwd = fftw_plan_dft_1d(n, buf_in, buf_out, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(n, buf_in, buf_out, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~PlanPair() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buf_in);
    fftw_free(buf_out);
  }
  PlanPair(const PlanPair&) = delete;
  PlanPair& operator=(const PlanPair&) = delete;
};

PlanPair& plans_for(int n) {
  thread_local std::map<int, std::unique_ptr<PlanPair>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<PlanPair>(n);
  return *slot;
}

}  // namespace

std::vector<std::complex<double>> forward(std::span<const std::complex<double>> samples) {
  const int n = static_cast<int>(samples.size());
  if (n == 0) throw std::invalid_argument("fft::forward: empty input");
  PlanPair& p = plans_for(n);
  std::memcpy(p.buf_in, samples.data(), sizeof(fftw_complex) * samples.size());
  fftw_execute(p.fwd);

  // FFTW order k = 0..N-1 maps to mode n = k (k < N/2) or k - N; reorder to
  // natural order and apply the 1/N normalization of the analysis transform.
  std::vector<std::complex<double>> out(samples.size());
  const double inv_n = 1.0 / n;
  const int half = n / 2;
  for (int k = 0; k < n; ++k) {
    const int mode = (k < half) ? k : k - n;
    out[static_cast<size_t>(mode + half)] =
        std::complex<double>(p.buf_out[k][0], p.buf_out[k][1]) * inv_n;
  }
  return out;
}

std::vector<std::complex<double>> backward(std::span<const std::complex<double>> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  if (n == 0) throw std::invalid_argument("fft::backward: empty input");
  PlanPair& p = plans_for(n);
  const int half = n / 2;
  for (int k = 0; k < n; ++k) {
    const int mode = (k < half) ? k : k - n;
    const auto& c = coeffs[static_cast<size_t>(mode + half)];
    p.buf_in[k][0] = c.real();
    p.buf_in[k][1] = c.imag();
  }
  fftw_execute(p.bwd);
  std::vector<std::complex<double>> out(coeffs.size());
  for (int k = 0; k < n; ++k)
    out[static_cast<size_t>(k)] = std::complex<double>(p.buf_out[k][0], p.buf_out[k][1]);
  return out;
}

}  // namespace ilw::fft
