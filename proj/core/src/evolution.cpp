#include "ilwlab/evolution.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ilwlab/fft.hpp"
#include "ilwlab/multipliers.hpp"

namespace ilw {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite_delta(double delta, const char* variant) {
  if (!(delta > 0.0) || delta == kInf)
    throw ValidationError(std::string(variant) + ": delta must be finite and positive");
}

int dealias_limit(const TorusGrid& grid, double fraction) {
  // modes with |n| >= fraction * N/2 are zeroed; 2/3 keeps |n| < N/3
  return static_cast<int>(std::ceil(fraction * grid.n_points / 2.0));
}

void truncate_modes(SpectralField& f, int limit) {
  for (int n = f.min_mode(); n <= f.max_mode(); ++n)
    if (std::abs(n) >= limit) f.set_coeff(n, 0.0);
}

// phi-style coefficient functions of the Cox-Matthews scheme. Direct formulas
// away from the origin; mean over a radius-2 contour (exact for entire
// functions, spectrally convergent in the point count) inside |z| < 1 where
// the direct forms cancel catastrophically.
cdouble phi_q_direct(cdouble z) { return (std::exp(0.5 * z) - 1.0) / z; }
cdouble phi_a_direct(cdouble z) {
  return (-4.0 - z + std::exp(z) * (4.0 - 3.0 * z + z * z)) / (z * z * z);
}
cdouble phi_b_direct(cdouble z) {
  return (2.0 + z + std::exp(z) * (-2.0 + z)) / (z * z * z);
}
cdouble phi_c_direct(cdouble z) {
  return (-4.0 - 3.0 * z - z * z + std::exp(z) * (4.0 - z)) / (z * z * z);
}

template <typename F>
cdouble contour_mean(F&& f, cdouble z) {
  constexpr int kPoints = 32;
  constexpr double kRadius = 2.0;
  cdouble acc = 0.0;
  for (int k = 0; k < kPoints; ++k) {
    const double theta = 2.0 * std::numbers::pi * (k + 0.5) / kPoints;
    acc += f(z + std::polar(kRadius, theta));
  }
  return acc / static_cast<double>(kPoints);
}

template <typename F>
cdouble phi_eval(F&& direct, cdouble z) {
  if (std::abs(z) >= 1.0) return direct(z);
  return contour_mean(direct, z);
}

}  // namespace

EquationSpec EquationSpec::ilw(double delta) {
  require_finite_delta(delta, "ilw");
  return {Variant::ilw, delta};
}
EquationSpec EquationSpec::renorm_ilw(double delta) {
  require_finite_delta(delta, "renorm_ilw");
  return {Variant::renorm_ilw, delta};
}
EquationSpec EquationSpec::scaled_ilw(double delta) {
  require_finite_delta(delta, "scaled_ilw");
  return {Variant::scaled_ilw, delta};
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::ilw: return "ilw";
    case Variant::renorm_ilw: return "renorm_ilw";
    case Variant::bo: return "bo";
    case Variant::scaled_ilw: return "scaled_ilw";
  }
  return "?";
}

Variant variant_from_name(const std::string& name) {
  if (name == "ilw") return Variant::ilw;
  if (name == "renorm_ilw") return Variant::renorm_ilw;
  if (name == "bo") return Variant::bo;
  if (name == "scaled_ilw") return Variant::scaled_ilw;
  throw ValidationError("unknown equation variant: " + name);
}

cdouble linear_symbol(const EquationSpec& eq, double xi) {
  const double axi = std::abs(xi);
  switch (eq.variant) {
    case Variant::bo:
      return cdouble(0.0, axi * xi);  // i |xi| xi
    case Variant::ilw:
      return cdouble(0.0, xi * xi * stable_coth_minus_recip(eq.delta * xi));
    case Variant::scaled_ilw:
      return (3.0 / eq.delta) * linear_symbol(EquationSpec{Variant::ilw, eq.delta}, xi);
    case Variant::renorm_ilw: {
      if (xi == 0.0) return 0.0;
      const double coth = 1.0 + stable_coth_minus_sgn(eq.delta * axi);
      return cdouble(0.0, xi * axi * coth);  // i xi^2 coth(delta xi), odd via xi|xi|
    }
  }
  throw ValidationError("linear_symbol: unknown variant");
}

SpectralField nonlinear_rhs(const SpectralField& u, double dealias) {
  if (!(dealias > 0.0 && dealias <= 1.0))
    throw ValidationError("nonlinear_rhs: dealias fraction must lie in (0, 1]");
  const int limit = dealias_limit(u.grid(), dealias);

  SpectralField trunc = u;
  truncate_modes(trunc, limit);

  auto phys = fft::backward(trunc.coeffs());
  std::vector<cdouble> squared(phys.size());
  for (size_t i = 0; i < phys.size(); ++i) {
    if (!std::isfinite(phys[i].real()) || !std::isfinite(phys[i].imag()))
      throw ValidationError("nonlinear_rhs: non-finite sample");
    if (u.real_valued()) {
      const double re = phys[i].real();  // drop round-off imaginary drift
      squared[i] = cdouble(re * re, 0.0);
    } else {
      squared[i] = phys[i] * phys[i];
    }
  }
  SpectralField out(u.grid(), fft::forward(squared), u.real_valued());
  truncate_modes(out, limit);
  for (int n = out.min_mode(); n <= out.max_mode(); ++n)
    out.set_coeff(n, cdouble(0.0, out.grid().frequency(n)) * out.coeff(n));
  if (u.real_valued()) out.enforce_hermitian();
  out.set_coeff(0, 0.0);  // derivative kills the mean exactly
  return out;
}

Etdrk4Stepper::Etdrk4Stepper(const TorusGrid& grid, const EquationSpec& eq, double dt,
                             double dealias)
    : grid_(grid), dt_(dt), dealias_(dealias) {
  if (!(dt > 0.0)) throw ValidationError("etdrk4: dt must be positive");
  const int n_modes = grid.n_points;
  e_full_.resize(n_modes);
  e_half_.resize(n_modes);
  q_.resize(n_modes);
  f1_.resize(n_modes);
  f2_.resize(n_modes);
  f3_.resize(n_modes);
  for (int n = grid.min_mode(); n <= grid.max_mode(); ++n) {
    const size_t i = static_cast<size_t>(n - grid.min_mode());
    const cdouble z = dt * linear_symbol(eq, grid.frequency(n));
    e_full_[i] = std::exp(z);
    e_half_[i] = std::exp(0.5 * z);
    q_[i] = dt * phi_eval(phi_q_direct, z);
    f1_[i] = dt * phi_eval(phi_a_direct, z);
    f2_[i] = dt * phi_eval(phi_b_direct, z);
    f3_[i] = dt * phi_eval(phi_c_direct, z);
  }
}

void Etdrk4Stepper::set_nonlinearity(Nonlinearity n) { nonlinearity_ = std::move(n); }

SpectralField Etdrk4Stepper::step(const SpectralField& u) const {
  if (!(u.grid() == grid_)) throw ValidationError("etdrk4 step: grid mismatch");
  auto nl = [&](const SpectralField& v) {
    return nonlinearity_ ? nonlinearity_(v) : nonlinear_rhs(v, dealias_);
  };
  auto mul = [&](const std::vector<cdouble>& w, const SpectralField& v) {
    SpectralField out = v;
    auto c = out.coeffs();
    for (size_t i = 0; i < c.size(); ++i) c[i] *= w[i];
    return out;
  };

  const SpectralField nv = nl(u);
  const SpectralField a = mul(e_half_, u) + mul(q_, nv);
  const SpectralField na = nl(a);
  const SpectralField b = mul(e_half_, u) + mul(q_, na);
  const SpectralField nb = nl(b);
  const SpectralField c = mul(e_half_, a) + mul(q_, 2.0 * nb - nv);
  const SpectralField nc = nl(c);

  return mul(e_full_, u) + mul(f1_, nv) + 2.0 * (mul(f2_, na + nb)) + mul(f3_, nc);
}

SpectralField etdrk4_step(const SpectralField& u, const EquationSpec& eq, double dt,
                          double dealias) {
  return Etdrk4Stepper(u.grid(), eq, dt, dealias).step(u);
}

Trajectory solve(const EquationSpec& eq, const SpectralField& u0, const SolveConfig& config) {
  if (!(config.dt > 0.0)) throw ValidationError("solve: dt must be positive");
  if (!(config.t_final >= config.dt)) throw ValidationError("solve: t_final must be >= dt");
  if (config.snapshot_stride < 1) throw ValidationError("solve: snapshot_stride must be >= 1");

  const double steps_real = config.t_final / config.dt;
  const long n_steps = std::lround(steps_real);
  if (n_steps < 1 || std::abs(steps_real - static_cast<double>(n_steps)) > 1e-9 * steps_real)
    throw ValidationError("solve: t_final must be an integer multiple of dt");
  if (n_steps % config.snapshot_stride != 0)
    throw ValidationError("solve: step count must be divisible by snapshot_stride");

  if (eq.variant == Variant::renorm_ilw &&
      std::abs(u0.coeff(0)) > 1e-12 * (1.0 + l2_coeff_norm(u0)))
    throw ValidationError("solve: renorm_ilw requires mean-zero initial data");

  Etdrk4Stepper stepper(u0.grid(), eq, config.dt, config.dealias);

  const double norm0 = l2_coeff_norm(u0);
  const double limit = config.blowup_threshold * norm0;

  Trajectory traj{eq, u0.grid(), {}, {}};
  traj.times.reserve(static_cast<size_t>(n_steps / config.snapshot_stride) + 1);
  traj.fields.reserve(traj.times.capacity());
  traj.times.push_back(0.0);
  traj.fields.push_back(u0);

  SpectralField u = u0;
  for (long k = 1; k <= n_steps; ++k) {
    u = stepper.step(u);
    const double norm = l2_coeff_norm(u);
    if (!std::isfinite(norm) || (norm0 > 0.0 && norm > limit))
      throw BlowupError("solve: L2 norm exceeded blow-up threshold at t = " +
                        std::to_string(k * config.dt));
    if (k % config.snapshot_stride == 0) {
      traj.times.push_back(static_cast<double>(k) * config.dt);
      traj.fields.push_back(u);
    }
  }
  return traj;
}

SpectralField galilean_tau(const SpectralField& f, double h, double t) {
  SpectralField out = f;
  for (int n = f.min_mode(); n <= f.max_mode(); ++n) {
    const double theta = f.grid().frequency(n) * h * t;
    out.set_coeff(n, std::polar(1.0, theta) * f.coeff(n));
  }
  return out;
}

Trajectory galilean_tau(const Trajectory& traj, double h) {
  Trajectory out = traj;
  for (size_t i = 0; i < traj.size(); ++i)
    out.fields[i] = galilean_tau(traj.fields[i], h, traj.times[i]);
  return out;
}

Trajectory gamma_transform(const Trajectory& traj, double mu) {
  Trajectory out = galilean_tau(traj, -2.0 * mu);
  for (auto& f : out.fields) f.set_coeff(0, f.coeff(0) - mu);
  return out;
}

Trajectory gamma_inverse(const Trajectory& traj, double mu) {
  Trajectory out = galilean_tau(traj, 2.0 * mu);
  for (auto& f : out.fields) f.set_coeff(0, f.coeff(0) + mu);
  return out;
}

SpectralField scale_field(const SpectralField& f, double lambda, int n_points_target) {
  if (!(lambda >= 1.0)) throw ValidationError("scale_field: lambda must be >= 1");
  TorusGrid target = make_grid(f.grid().lambda * lambda, n_points_target);
  SpectralField out(target, f.real_valued());
  const int lo = std::max(f.min_mode() + 1, target.min_mode() + 1);
  const int hi = std::min(f.max_mode(), target.max_mode());
  for (int n = lo; n <= hi; ++n) out.set_coeff(n, f.coeff(n) / lambda);
  return out;
}

Trajectory scale_transform(const Trajectory& traj, double lambda, int n_points_target) {
  Trajectory out;
  out.eq = traj.eq;
  if (traj.eq.variant != Variant::bo) out.eq.delta = traj.eq.delta * lambda;
  out.grid = make_grid(traj.grid.lambda * lambda, n_points_target);
  out.times.reserve(traj.size());
  out.fields.reserve(traj.size());
  for (size_t i = 0; i < traj.size(); ++i) {
    out.times.push_back(lambda * lambda * traj.times[i]);
    out.fields.push_back(scale_field(traj.fields[i], lambda, n_points_target));
  }
  return out;
}

}  // namespace ilw
