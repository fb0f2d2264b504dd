#include "ilwlab/projectors.hpp"

#include <cmath>

namespace ilw {
namespace {

constexpr double kPlateau = 1.25;   // eta == 1 below here
constexpr double kSupport = 1.6;    // eta == 0 at and beyond

double smoothstep(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }

double weight_eta(const SpectralField& f, int n, double scale) {
  return lp_bump(std::abs(f.grid().frequency(n)) / scale);
}

SpectralField multiply_real_even(const SpectralField& f, double scale, bool complement) {
  SpectralField out = f;
  for (int n = f.min_mode(); n <= f.max_mode(); ++n) {
    const double w = weight_eta(f, n, scale);
    out.set_coeff(n, (complement ? 1.0 - w : w) * f.coeff(n));
  }
  return out;  // real-even weight preserves real-valuedness
}

}  // namespace

double lp_bump(double r) {
  if (r <= kPlateau) return 1.0;
  if (r >= kSupport) return 0.0;
  return smoothstep((kSupport - r) / (kSupport - kPlateau));
}

double lp_symbol(int j, double xi) {
  const double a = std::abs(xi);
  if (j == 0) return lp_bump(a);
  const double scale = std::pow(2.0, j);
  return lp_bump(a / scale) - lp_bump(a / (scale * 0.5));
}

SpectralField lp_project(const SpectralField& f, int j) {
  if (j < 0) throw ValidationError("lp_project: j must be >= 0");
  SpectralField out = f;
  for (int n = f.min_mode(); n <= f.max_mode(); ++n)
    out.set_coeff(n, lp_symbol(j, f.grid().frequency(n)) * f.coeff(n));
  return out;
}

SpectralField sharp_project(const SpectralField& f, SharpKind kind, int k) {
  SpectralField out = f;
  switch (kind) {
    case SharpKind::plus:
      for (int n = f.min_mode(); n <= 0; ++n) out.set_coeff(n, 0.0);
      out.set_real_valued(false);
      break;
    case SharpKind::minus:
      for (int n = 0; n <= f.max_mode(); ++n) out.set_coeff(n, 0.0);
      out.set_real_valued(false);
      break;
    case SharpKind::nonzero:
      out.set_coeff(0, 0.0);
      break;
    case SharpKind::zero:
      for (int n = f.min_mode(); n <= f.max_mode(); ++n)
        if (n != 0) out.set_coeff(n, 0.0);
      break;
    case SharpKind::cutoff:
      if (k < 0) throw ValidationError("sharp_project: cutoff k must be >= 0");
      for (int n = f.min_mode(); n <= f.max_mode(); ++n)
        if (std::abs(n) > k) out.set_coeff(n, 0.0);
      break;
  }
  return out;
}

SpectralField smooth_project(const SpectralField& f, SmoothKind kind) {
  switch (kind) {
    case SmoothKind::hi:
      return multiply_real_even(f, 1.0, /*complement=*/true);
    case SmoothKind::lo:
      return multiply_real_even(f, 1.0, /*complement=*/false);
    case SmoothKind::HI:
      return multiply_real_even(f, 4.0, /*complement=*/true);
    case SmoothKind::LO:
      return multiply_real_even(f, 4.0, /*complement=*/false);
    case SmoothKind::plus_hi:
      return sharp_project(smooth_project(f, SmoothKind::hi), SharpKind::plus);
    case SmoothKind::plus_HI:
      return sharp_project(smooth_project(f, SmoothKind::HI), SharpKind::plus);
    case SmoothKind::minus_hi:
      return sharp_project(smooth_project(f, SmoothKind::hi), SharpKind::minus);
  }
  throw ValidationError("smooth_project: unknown kind");
}

}  // namespace ilw
