#pragma once

#include "ilwlab/field.hpp"

namespace ilw {

/// coth(x) - sgn(x), the exponentially small deep-water gap. Stable for all
/// nonzero x: no overflow and no saturation at large |x|.
double stable_coth_minus_sgn(double x);

/// coth(x) - 1/x, continuous through 0 with value 0 (series near the origin,
/// rearranged exponential form elsewhere).
double stable_coth_minus_recip(double x);

enum class SymmetryClass {
  real_even,        // maps real fields to real fields
  imaginary_odd,    // maps real fields to real fields
  phase_hermitian,  // unimodular, m(-xi) = conj(m(xi))
};

/// Fourier multiplier specification for the operator family: Hilbert and
/// Tilbert transforms, the dispersion kernel G_delta, the perturbation kernel
/// Q_delta, derivatives, Bessel/Riesz potentials, and the free BO propagator.
/// delta = infinity is a first-class value (Tilbert -> Hilbert, Q -> 0).
struct MultiplierSpec {
  enum class Kind { hilbert, tilbert, g_delta, q_delta, dx, dx_inv, bessel, riesz, bo_propagator };

  Kind kind = Kind::hilbert;
  double delta = 0.0;  // tilbert / g_delta / q_delta
  double param = 0.0;  // bessel/riesz order s, propagator time t

  static MultiplierSpec hilbert() { return {Kind::hilbert, 0.0, 0.0}; }
  static MultiplierSpec tilbert(double delta);
  static MultiplierSpec g_delta(double delta);
  static MultiplierSpec q_delta(double delta);
  static MultiplierSpec dx() { return {Kind::dx, 0.0, 0.0}; }
  static MultiplierSpec dx_inv() { return {Kind::dx_inv, 0.0, 0.0}; }
  static MultiplierSpec bessel(double s) { return {Kind::bessel, 0.0, s}; }
  static MultiplierSpec riesz(double s) { return {Kind::riesz, 0.0, s}; }
  static MultiplierSpec bo_propagator(double t) { return {Kind::bo_propagator, 0.0, t}; }

  SymmetryClass symmetry() const;
};

/// Pointwise symbol value at frequency xi (total function under the zero-mode
/// conventions: Tilbert, G_delta, Q_delta, dx_inv all vanish at xi = 0).
cdouble symbol(const MultiplierSpec& spec, double xi);

/// coeff(n) -> symbol(n/lambda) * coeff(n). Real fields stay real for the
/// real-even / imaginary-odd / phase classes; asserted on the output.
SpectralField apply(const MultiplierSpec& spec, const SpectralField& f);

struct SmoothingSup {
  double sup = 0.0;    // sup over 1 <= |n| <= n_max of <n>^s |Q_delta_hat(n)|
  double ratio = 0.0;  // sup / (delta^-1 (1 + delta^-s))
  int argmax = 0;
};

/// Scan of the Q_delta smoothing bound over the integer lattice.
SmoothingSup smoothing_sup(double delta, double s, int n_max);

}  // namespace ilw
