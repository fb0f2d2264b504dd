#include "ilwlab/multipliers.hpp"

#include <cmath>
#include <limits>

namespace ilw {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sgn(double x) { return (x > 0.0) ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// 2 |xi| / (e^{2 delta |xi|} - 1), the Q_delta symbol for xi != 0.
double q_delta_value(double delta, double axi) {
  if (delta == kInf) return 0.0;
  const double x = delta * axi;
  if (x > 350.0) {
    const double e = std::exp(-2.0 * x);
    return 2.0 * axi * e / (1.0 - e);
  }
  return 2.0 * axi / std::expm1(2.0 * x);
}

void check_delta(double delta) {
  if (!(delta > 0.0)) throw ValidationError("multiplier: delta must be positive (or infinity)");
}

}  // namespace

MultiplierSpec MultiplierSpec::tilbert(double delta) {
  check_delta(delta);
  return {Kind::tilbert, delta, 0.0};
}
MultiplierSpec MultiplierSpec::g_delta(double delta) {
  check_delta(delta);
  return {Kind::g_delta, delta, 0.0};
}
MultiplierSpec MultiplierSpec::q_delta(double delta) {
  check_delta(delta);
  return {Kind::q_delta, delta, 0.0};
}

SymmetryClass MultiplierSpec::symmetry() const {
  switch (kind) {
    case Kind::hilbert:
    case Kind::tilbert:
    case Kind::g_delta:
    case Kind::dx:
    case Kind::dx_inv:
      return SymmetryClass::imaginary_odd;
    case Kind::q_delta:
    case Kind::bessel:
    case Kind::riesz:
      return SymmetryClass::real_even;
    case Kind::bo_propagator:
      return SymmetryClass::phase_hermitian;
  }
  return SymmetryClass::real_even;
}

double stable_coth_minus_sgn(double x) {
  if (x == 0.0) throw ValidationError("stable_coth_minus_sgn: x must be nonzero");
  const double a = std::abs(x);
  double v;
  if (a > 350.0) {
    const double e = std::exp(-2.0 * a);
    v = 2.0 * e / (1.0 - e);
  } else {
    v = 2.0 / std::expm1(2.0 * a);
  }
  return sgn(x) * v;
}

double stable_coth_minus_recip(double x) {
  const double a = std::abs(x);
  if (a < 0.05) {
    // Bernoulli series; truncation < 1e-15 relative on this window.
    const double x2 = x * x;
    return x * (1.0 / 3.0 +
                x2 * (-1.0 / 45.0 +
                      x2 * (2.0 / 945.0 + x2 * (-1.0 / 4725.0 + x2 * (2.0 / 93555.0)))));
  }
  // coth(x) - 1/x = sgn(x) (1 + (coth|x| - 1)) - 1/x
  return sgn(x) * (1.0 + stable_coth_minus_sgn(a)) - 1.0 / x;
}

cdouble symbol(const MultiplierSpec& spec, double xi) {
  using Kind = MultiplierSpec::Kind;
  const double axi = std::abs(xi);
  switch (spec.kind) {
    case Kind::hilbert:
      return cdouble(0.0, -sgn(xi));
    case Kind::tilbert: {
      if (xi == 0.0) return 0.0;
      if (spec.delta == kInf) return cdouble(0.0, -sgn(xi));
      const double coth = 1.0 + stable_coth_minus_sgn(spec.delta * axi);
      return cdouble(0.0, -sgn(xi) * coth);
    }
    case Kind::g_delta: {
      if (xi == 0.0) return 0.0;
      if (spec.delta == kInf) return cdouble(0.0, -sgn(xi));
      return cdouble(0.0, -sgn(xi) * stable_coth_minus_recip(spec.delta * axi));
    }
    case Kind::q_delta:
      if (xi == 0.0) return 0.0;
      return cdouble(q_delta_value(spec.delta, axi), 0.0);
    case Kind::dx:
      return cdouble(0.0, xi);
    case Kind::dx_inv:
      if (xi == 0.0) return 0.0;
      return cdouble(0.0, -sgn(xi) / axi);
    case Kind::bessel:
      return cdouble(std::pow(1.0 + xi * xi, 0.5 * spec.param), 0.0);
    case Kind::riesz:
      if (xi == 0.0) return cdouble(spec.param == 0.0 ? 1.0 : 0.0, 0.0);
      return cdouble(std::pow(axi, spec.param), 0.0);
    case Kind::bo_propagator: {
      const double phase = spec.param * sgn(xi) * axi * axi;  // t |xi| xi
      return std::polar(1.0, phase);
    }
  }
  throw ValidationError("symbol: unknown multiplier kind");
}

SpectralField apply(const MultiplierSpec& spec, const SpectralField& f) {
  SpectralField out = f;
  for (int n = f.min_mode(); n <= f.max_mode(); ++n)
    out.set_coeff(n, symbol(spec, f.grid().frequency(n)) * f.coeff(n));
  if (f.real_valued()) {
    // every supported class maps real to real; guard against regressions
    if (out.hermitian_defect() > 1e-12 * (1.0 + l2_coeff_norm(out)))
      throw ValidationError("apply: multiplier broke Hermitian symmetry");
  }
  return out;
}

SmoothingSup smoothing_sup(double delta, double s, int n_max) {
  if (!(delta > 0.0)) throw ValidationError("smoothing_sup: delta must be positive");
  if (s < 0.0) throw ValidationError("smoothing_sup: s must be >= 0");
  if (n_max < 1) throw ValidationError("smoothing_sup: n_max must be >= 1");
  SmoothingSup result;
  for (int n = 1; n <= n_max; ++n) {
    const double v = std::pow(1.0 + static_cast<double>(n) * n, 0.5 * s) *
                     q_delta_value(delta, static_cast<double>(n));
    if (v > result.sup) {
      result.sup = v;
      result.argmax = n;
    }
  }
  if (delta == kInf) {
    result.ratio = 0.0;
    return result;
  }
  const double bound = (1.0 / delta) * (1.0 + std::pow(delta, -s));
  result.ratio = result.sup / bound;
  return result;
}

}  // namespace ilw
