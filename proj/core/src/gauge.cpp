#include "ilwlab/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ilwlab/fft.hpp"
#include "ilwlab/multipliers.hpp"
#include "ilwlab/projectors.hpp"

namespace ilw {
namespace {

constexpr int kUpsample = 4;
constexpr double kTailMassLimit = 1e-10;

void require_real_mean_zero(const SpectralField& v, const char* where) {
  if (!v.real_valued()) throw ValidationError(std::string(where) + ": v must be real-valued");
  if (std::abs(v.coeff(0)) > 1e-12 * (1.0 + l2_coeff_norm(v)))
    throw ValidationError(std::string(where) + ": v must be mean-zero");
}

// Pointwise product on a shared (already enlarged) grid, with the 2/3 rule
// applied on that grid.
SpectralField product(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid())) throw ValidationError("gauge product: grid mismatch");
  const int limit = static_cast<int>(std::ceil(a.grid().n_points / 3.0));
  auto clipped = [&](const SpectralField& f) {
    SpectralField g = f;
    for (int n = g.min_mode(); n <= g.max_mode(); ++n)
      if (std::abs(n) >= limit) g.set_coeff(n, 0.0);
    return fft::backward(g.coeffs());
  };
  auto pa = clipped(a);
  auto pb = clipped(b);
  for (size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
  SpectralField out(a.grid(), fft::forward(pa), a.real_valued() && b.real_valued());
  for (int n = out.min_mode(); n <= out.max_mode(); ++n)
    if (std::abs(n) >= limit) out.set_coeff(n, 0.0);
  return out;
}

// Everything the gauge formulas need, on the 4x working grid.
struct GaugeFrame {
  SpectralField F;    // on the original grid
  SpectralField v4;   // v zero-padded
  SpectralField E4;   // exp(iF)
  SpectralField Em4;  // exp(-iF)
};

GaugeFrame build_frame(const SpectralField& v) {
  GaugeFrame frame{mean_zero_primitive(v), {}, {}, {}};
  const int n_work = v.n_points() * kUpsample;
  frame.v4 = resample(v, n_work);

  const SpectralField f_big = resample(frame.F, n_work);
  const auto f_phys = inverse_transform(f_big);
  std::vector<cdouble> e_phys(f_phys.size()), em_phys(f_phys.size());
  for (size_t i = 0; i < f_phys.size(); ++i) {
    e_phys[i] = std::polar(1.0, f_phys[i]);
    em_phys[i] = std::conj(e_phys[i]);
  }
  frame.E4 = transform_complex(f_big.grid(), e_phys);
  frame.Em4 = transform_complex(f_big.grid(), em_phys);

  // Resolution rule: the discarded spectrum of exp(iF) must be negligible.
  const int half_original = v.n_points() / 2;
  double total = 0.0, tail = 0.0;
  for (int n = frame.E4.min_mode(); n <= frame.E4.max_mode(); ++n) {
    const double m = std::norm(frame.E4.coeff(n));
    total += m;
    if (std::abs(n) >= half_original) tail += m;
  }
  if (tail > kTailMassLimit * total)
    throw ResolutionError("gauge: exp(iF) under-resolved (tail mass " + std::to_string(tail / total) + ")");
  return frame;
}

SpectralField dx(const SpectralField& f) { return apply(MultiplierSpec::dx(), f); }

}  // namespace

SpectralField mean_zero_primitive(const SpectralField& v) {
  require_real_mean_zero(v, "mean_zero_primitive");
  SpectralField F = v;
  F.set_coeff(0, 0.0);
  for (int n = F.min_mode(); n <= F.max_mode(); ++n) {
    if (n == 0) continue;
    const double xi = F.grid().frequency(n);
    F.set_coeff(n, v.coeff(n) / cdouble(0.0, xi));
  }
  return F;
}

SpectralField gauge_W(const SpectralField& v) {
  require_real_mean_zero(v, "gauge_W");
  const GaugeFrame frame = build_frame(v);
  return resample(smooth_project(frame.E4, SmoothKind::plus_hi), v.n_points());
}

SpectralField gauge_exponential(const SpectralField& v, int sign) {
  require_real_mean_zero(v, "gauge_exponential");
  const GaugeFrame frame = build_frame(v);
  return sign >= 0 ? frame.E4 : frame.Em4;
}

namespace {

struct GaugePair {
  SpectralField w_deriv, w_product;
};

GaugePair gauge_w_both(const SpectralField& v) {
  const GaugeFrame frame = build_frame(v);
  GaugePair pair;
  pair.w_deriv = dx(resample(smooth_project(frame.E4, SmoothKind::plus_hi), v.n_points()));
  pair.w_product = cdouble(0.0, 1.0) * resample(
      smooth_project(product(frame.E4, frame.v4), SmoothKind::plus_hi), v.n_points());
  return pair;
}

}  // namespace

double gauge_w_defect(const SpectralField& v) {
  require_real_mean_zero(v, "gauge_w_defect");
  const GaugePair pair = gauge_w_both(v);
  return l2_coeff_norm(pair.w_deriv - pair.w_product);
}

SpectralField gauge_w(const SpectralField& v) {
  require_real_mean_zero(v, "gauge_w");
  const GaugePair pair = gauge_w_both(v);
  // Relative bound plus an absolute floor: the exponential is O(1) pointwise,
  // so FFT round-off enters at machine scale even for tiny v.
  const double defect = l2_coeff_norm(pair.w_deriv - pair.w_product);
  if (defect > 1e-12 * l2_coeff_norm(v) + 1e-14)
    throw ValidationError("gauge_w: dual formulas disagree (defect " + std::to_string(defect) + ")");
  return pair.w_deriv;
}

GaugeState GaugeState::make(const SpectralField& v) {
  GaugeState state{v, mean_zero_primitive(v), gauge_W(v), gauge_w(v)};
  return state;
}

NdeltaTerms nonlinearity_Ndelta(const SpectralField& w, const SpectralField& v, double delta) {
  require_real_mean_zero(v, "nonlinearity_Ndelta");
  if (!(delta > 0.0)) throw ValidationError("nonlinearity_Ndelta: delta must be positive");

  const SpectralField w_ref = gauge_w(v);
  if (l2_coeff_norm(w - w_ref) > 1e-10 * (1.0 + l2_coeff_norm(v)))
    throw ValidationError("nonlinearity_Ndelta: (w, v) pair inconsistent with the gauge");

  const GaugeFrame frame = build_frame(v);
  const int n_out = v.n_points();

  const SpectralField w_big = smooth_project(frame.E4, SmoothKind::plus_hi);
  const SpectralField minus_dxv = sharp_project(dx(frame.v4), SharpKind::minus);

  auto hi_dx = [&](const SpectralField& f) {
    return resample(dx(smooth_project(f, SmoothKind::plus_hi)), n_out);
  };

  NdeltaTerms terms;
  terms.t1 = -2.0 * hi_dx(product(w_big, minus_dxv));
  terms.t2 = -2.0 * hi_dx(product(smooth_project(frame.E4, SmoothKind::lo), minus_dxv));
  if (delta == std::numeric_limits<double>::infinity()) {
    terms.t3 = SpectralField(v.grid(), /*real_valued=*/false);  // Q_infinity = 0
  } else {
    const SpectralField qv = apply(MultiplierSpec::q_delta(delta), frame.v4);
    terms.t3 = cdouble(0.0, 1.0) * hi_dx(product(frame.E4, qv));
  }

  double mean_square = 0.0;  // P0(v^2) via Parseval
  for (const auto& c : v.coeffs()) mean_square += std::norm(c);
  terms.t4 = cdouble(0.0, -mean_square) * w;

  terms.total = terms.t1 + terms.t2 + terms.t3 + terms.t4;
  return terms;
}

double reconstruct_check(const SpectralField& w, const SpectralField& v) {
  require_real_mean_zero(v, "reconstruct_check");
  const GaugeFrame frame = build_frame(v);
  const int n_work = frame.v4.n_points();

  const SpectralField lhs = smooth_project(frame.v4, SmoothKind::plus_HI);
  const SpectralField w_big = resample(w, n_work);

  const SpectralField r1 =
      cdouble(0.0, -1.0) * smooth_project(product(frame.Em4, w_big), SmoothKind::plus_HI);
  const SpectralField r2 = smooth_project(
      product(smooth_project(frame.Em4, SmoothKind::plus_hi),
              smooth_project(product(frame.E4, frame.v4), SmoothKind::lo)),
      SmoothKind::plus_HI);
  const SpectralField r3 =
      cdouble(0.0, -1.0) *
      smooth_project(product(smooth_project(frame.Em4, SmoothKind::plus_HI),
                             dx(smooth_project(frame.E4, SmoothKind::minus_hi))),
                     SmoothKind::plus_HI);

  return l2_coeff_norm(lhs - r1 - r2 - r3);
}

double ResidualSeries::max_value() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

ResidualSeries gauged_residual(const Trajectory& traj, double delta, GaugedEquation which) {
  if (traj.size() < 3)
    throw ValidationError("gauged_residual: need at least 3 snapshots");
  const double step = traj.times[1] - traj.times[0];
  for (size_t i = 1; i + 1 < traj.size(); ++i)
    if (std::abs(traj.times[i + 1] - traj.times[i] - step) > 1e-12 * (1.0 + std::abs(step)))
      throw ValidationError("gauged_residual: snapshots not uniformly spaced");

  const MultiplierSpec hilbert = MultiplierSpec::hilbert();
  auto h_dxx = [&](const SpectralField& f) {
    return apply(hilbert, apply(MultiplierSpec::dx(), apply(MultiplierSpec::dx(), f)));
  };

  // State whose time derivative is differenced, and the matching RHS.
  std::vector<SpectralField> states(traj.size());
  std::vector<SpectralField> rhs(traj.size());
  for (size_t i = 0; i < traj.size(); ++i) {
    const SpectralField& v = traj.fields[i];
    if (which == GaugedEquation::F_equation) {
      states[i] = mean_zero_primitive(v);
      const int n_work = v.n_points() * kUpsample;
      const SpectralField v4 = resample(v, n_work);
      SpectralField vsq = resample(product(v4, v4), v.n_points());
      vsq = sharp_project(vsq, SharpKind::nonzero);  // v^2 - P0(v^2)
      rhs[i] = h_dxx(states[i]) + apply(MultiplierSpec::q_delta(delta), v) + vsq;
    } else {
      states[i] = gauge_w(v);
      rhs[i] = h_dxx(states[i]) + nonlinearity_Ndelta(states[i], v, delta).total;
    }
  }

  ResidualSeries series;
  for (size_t i = 1; i + 1 < traj.size(); ++i) {
    const SpectralField ddt = (1.0 / (2.0 * step)) * (states[i + 1] - states[i - 1]);
    series.times.push_back(traj.times[i]);
    series.values.push_back(l2_coeff_norm(ddt - rhs[i]));
  }
  return series;
}

}  // namespace ilw
