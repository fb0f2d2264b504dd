#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ilwlab/grid.hpp"

namespace ilw {

using cdouble = std::complex<double>;

/// Fourier-side representation of a field on a TorusGrid.
///
/// Coefficients are stored in natural mode order n = -N/2 .. N/2-1 with the
/// convention  f_hat(n) = (1/(2 pi lambda)) * integral f(x) exp(-i n x / lambda) dx.
/// Real-valued fields carry Hermitian symmetry f_hat(-n) = conj(f_hat(n)) and a
/// forced zero at the unpaired mode n = -N/2.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(TorusGrid grid, bool real_valued = true)
      : grid_(grid), coeffs_(static_cast<size_t>(grid.n_points)), real_valued_(real_valued) {}
  SpectralField(TorusGrid grid, std::vector<cdouble> coeffs, bool real_valued);

  const TorusGrid& grid() const { return grid_; }
  int n_points() const { return grid_.n_points; }
  bool real_valued() const { return real_valued_; }
  void set_real_valued(bool v) { real_valued_ = v; }

  cdouble coeff(int n) const { return coeffs_[index_of(n)]; }
  void set_coeff(int n, cdouble c) { coeffs_[index_of(n)] = c; }
  std::span<const cdouble> coeffs() const { return coeffs_; }
  std::span<cdouble> coeffs() { return coeffs_; }

  int min_mode() const { return grid_.min_mode(); }
  int max_mode() const { return grid_.max_mode(); }

  /// Symmetrize to exact Hermitian form (real fields only): averages n and -n,
  /// zeroes the Nyquist mode and the imaginary part of the mean.
  void enforce_hermitian();

  /// Largest |f_hat(n) - conj(f_hat(-n))| over paired modes plus the Nyquist
  /// magnitude; zero for an exactly real-valued field.
  double hermitian_defect() const;

  bool is_mean_zero(double tol = 0.0) const { return std::abs(coeff(0)) <= tol; }

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double a);
  SpectralField& operator*=(cdouble a);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double a, SpectralField f) { return f *= a; }
  friend SpectralField operator*(cdouble a, SpectralField f) { return f *= a; }

 private:
  size_t index_of(int n) const { return static_cast<size_t>(n - grid_.min_mode()); }

  TorusGrid grid_;
  std::vector<cdouble> coeffs_;
  bool real_valued_ = true;
};

/// Forward transform of real samples at the grid nodes. Enforces exact
/// Hermitian symmetry on the result. Throws on length mismatch or NaN input.
SpectralField transform(const TorusGrid& grid, std::span<const double> samples);

/// Physical samples of a real-valued field. Throws if the field is not
/// real-valued.
std::vector<double> inverse_transform(const SpectralField& f);

/// Physical samples of an arbitrary (complex-valued) field.
std::vector<cdouble> to_physical(const SpectralField& f);

/// Field from complex samples (no symmetry assumed).
SpectralField transform_complex(const TorusGrid& grid, std::span<const cdouble> samples);

/// || <n/lambda>^s f_hat(n) ||_{l2}. Coincides with the plain coefficient l2
/// norm at s = 0.
double sobolev_norm(const SpectralField& f, double s);

/// sqrt(sum |f_hat(n)|^2), the s = 0 Sobolev norm.
double l2_coeff_norm(const SpectralField& f);

/// Spectral zero-pad (n_target > N) or truncation (n_target < N) onto a grid
/// with the same period.
SpectralField resample(const SpectralField& f, int n_target);

}  // namespace ilw
