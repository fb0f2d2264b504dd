#include "ilwlab/field.hpp"

#include <algorithm>
#include <cmath>

#include "ilwlab/fft.hpp"

namespace ilw {

SpectralField::SpectralField(TorusGrid grid, std::vector<cdouble> coeffs, bool real_valued)
    : grid_(grid), coeffs_(std::move(coeffs)), real_valued_(real_valued) {
  if (static_cast<int>(coeffs_.size()) != grid_.n_points)
    throw ValidationError("SpectralField: coefficient count does not match grid");
}

void SpectralField::enforce_hermitian() {
  const int half = grid_.n_points / 2;
  coeffs_[0] = 0.0;  // unpaired Nyquist mode
  set_coeff(0, cdouble(coeff(0).real(), 0.0));
  for (int n = 1; n < half; ++n) {
    const cdouble avg = 0.5 * (coeff(n) + std::conj(coeff(-n)));
    set_coeff(n, avg);
    set_coeff(-n, std::conj(avg));
  }
  real_valued_ = true;
}

double SpectralField::hermitian_defect() const {
  const int half = grid_.n_points / 2;
  double worst = std::abs(coeffs_[0]) + std::abs(coeff(0).imag());
  for (int n = 1; n < half; ++n)
    worst = std::max(worst, std::abs(coeff(n) - std::conj(coeff(-n))));
  return worst;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  if (!(grid_ == o.grid_)) throw ValidationError("field +=: grid mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  real_valued_ = real_valued_ && o.real_valued_;
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  if (!(grid_ == o.grid_)) throw ValidationError("field -=: grid mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  real_valued_ = real_valued_ && o.real_valued_;
  return *this;
}

SpectralField& SpectralField::operator*=(double a) {
  for (auto& c : coeffs_) c *= a;
  return *this;
}

SpectralField& SpectralField::operator*=(cdouble a) {
  for (auto& c : coeffs_) c *= a;
  if (a.imag() != 0.0) real_valued_ = false;
  return *this;
}

SpectralField transform(const TorusGrid& grid, std::span<const double> samples) {
  if (static_cast<int>(samples.size()) != grid.n_points)
    throw ValidationError("transform: sample count does not match grid");
  std::vector<cdouble> buf(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) throw ValidationError("transform: non-finite sample");
    buf[i] = cdouble(samples[i], 0.0);
  }
  SpectralField f(grid, fft::forward(buf), true);
  f.enforce_hermitian();
  return f;
}

SpectralField transform_complex(const TorusGrid& grid, std::span<const cdouble> samples) {
  if (static_cast<int>(samples.size()) != grid.n_points)
    throw ValidationError("transform_complex: sample count does not match grid");
  for (const auto& s : samples)
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
      throw ValidationError("transform_complex: non-finite sample");
  return SpectralField(grid, fft::forward(samples), false);
}

std::vector<double> inverse_transform(const SpectralField& f) {
  if (!f.real_valued())
    throw ValidationError("inverse_transform: field is not real-valued");
  auto phys = fft::backward(f.coeffs());
  std::vector<double> out(phys.size());
  for (size_t i = 0; i < phys.size(); ++i) out[i] = phys[i].real();
  return out;
}

std::vector<cdouble> to_physical(const SpectralField& f) { return fft::backward(f.coeffs()); }

double sobolev_norm(const SpectralField& f, double s) {
  double acc = 0.0;
  for (int n = f.min_mode(); n <= f.max_mode(); ++n) {
    const double xi = f.grid().frequency(n);
    const double w = std::pow(1.0 + xi * xi, s);
    acc += w * std::norm(f.coeff(n));
  }
  return std::sqrt(acc);
}

double l2_coeff_norm(const SpectralField& f) {
  double acc = 0.0;
  for (const auto& c : f.coeffs()) acc += std::norm(c);
  return std::sqrt(acc);
}

SpectralField resample(const SpectralField& f, int n_target) {
  TorusGrid target = make_grid(f.grid().lambda, n_target);
  SpectralField out(target, f.real_valued());
  const int lo = std::max(f.min_mode(), target.min_mode());
  const int hi = std::min(f.max_mode(), target.max_mode());
  for (int n = lo; n <= hi; ++n) out.set_coeff(n, f.coeff(n));
  if (f.real_valued() && n_target < f.n_points()) {
    // truncation may strand the pair of the new Nyquist mode
    out.set_coeff(target.min_mode(), 0.0);
  }
  return out;
}

}  // namespace ilw
